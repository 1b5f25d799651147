#pragma once

// Truncated power series sum_{n<=order} c_n t^n with exact coefficients.
// The coefficient ring is a template parameter so the same division routine
// serves rational coefficients and polynomial-in-x coefficients.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "evenzeta/rational.hpp"

namespace evenzeta {

template <typename T>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, T(0)) {}
    explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            coeffs_.push_back(T(0));
        }
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const T& operator[](std::size_t n) const { return coeffs_[n]; }
    T& operator[](std::size_t n) { return coeffs_[n]; }
    const std::vector<T>& coefficients() const { return coeffs_; }

private:
    std::vector<T> coeffs_;
};

/// exp(t) truncated at `order`: coefficients 1/n!.
inline TruncatedSeries<Rational> exp_series(std::size_t order) {
    TruncatedSeries<Rational> out(order);
    Integer fact = 1;
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) {
            fact *= static_cast<unsigned long>(n);
        }
        out[n] = Rational(Integer(1), fact);
    }
    return out;
}

/// num / den to the common order. den[0] must be nonzero; the result
/// coefficients follow c_n = (a_n - sum_{i=1..n} b_i c_{n-i}) / b_0.
template <typename T, typename S>
TruncatedSeries<T> divide(const TruncatedSeries<T>& num, const TruncatedSeries<S>& den) {
    const std::size_t order = std::min(num.order(), den.order());
    if (den[0] == S(0)) {
        throw DomainError("series division: denominator has zero constant term");
    }
    const S inv_lead = S(1) / den[0];
    TruncatedSeries<T> out(order);
    for (std::size_t n = 0; n <= order; ++n) {
        T acc = num[n];
        for (std::size_t i = 1; i <= n; ++i) {
            if (den[i] == S(0)) {
                continue;
            }
            acc -= out[n - i] * den[i];
        }
        out[n] = acc * inv_lead;
    }
    return out;
}

}  // namespace evenzeta
