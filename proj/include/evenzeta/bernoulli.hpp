#pragma once

// Bernoulli numbers under the z/(e^z - 1) convention (B_1 = -1/2), and
// Euler's closed form for zeta(2k)/pi^(2k) built on them.
//
// Recurrence used: multiplying z/(e^z - 1) = sum B_j z^j/j! by
// (e^z - 1)/z = sum z^i/(i+1)! and matching the coefficient of z^m gives,
// after scaling by (m+1)!,
//
//     sum_{j=0}^{m} C(m+1, j) B_j = 0   (m >= 1),   B_0 = 1.
//
// This is derived from the generating function, not quoted; the test suite
// checks it against exact series division.

#include <cstddef>
#include <span>
#include <vector>

#include "evenzeta/memo_table.hpp"
#include "evenzeta/rational.hpp"

namespace evenzeta {

class BernoulliTable {
public:
    BernoulliTable() : memo_(&next) {}

    Rational value(std::size_t n) { return memo_.at(n); }

    /// B_0 .. B_max_index.
    std::vector<Rational> values(std::size_t max_index) { return memo_.prefix(max_index + 1); }

    /// One past the largest index computed so far.
    std::size_t size() const { return memo_.size(); }

private:
    static Rational next(std::size_t m, std::span<const Rational> prefix) {
        if (m == 0) {
            return Rational(1);
        }
        Rational acc;
        for (std::size_t j = 0; j < m; ++j) {
            if (!prefix[j].is_zero()) {
                acc += Rational(binomial(m + 1, j)) * prefix[j];
            }
        }
        return -acc / Rational(static_cast<long>(m + 1));
    }

    MemoTable<Rational> memo_;
};

inline BernoulliTable& default_bernoulli_table() {
    static BernoulliTable table;
    return table;
}

inline Rational bernoulli(std::size_t n) { return default_bernoulli_table().value(n); }

/// zeta(2k)/pi^(2k) = 2^(2k-1) |B_2k| / (2k)!. Only |B_2k| enters, so the
/// sign convention of B does not matter here.
inline Rational zeta_even_via_euler(std::size_t k, BernoulliTable& table) {
    if (k < 1) {
        throw DomainError("zeta_even_via_euler: k must be >= 1");
    }
    const Rational b = table.value(2 * k).abs();
    return Rational(pow2(2 * k - 1)) * b / Rational(factorial(2 * k));
}

inline Rational zeta_even_via_euler(std::size_t k) { return zeta_even_via_euler(k, default_bernoulli_table()); }

}  // namespace evenzeta
