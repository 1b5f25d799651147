#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "evenzeta/rational.hpp"

namespace evenzeta {

/// Dense polynomial in x over the rationals; coefficient of x^j at index j.
/// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(const Rational& c) {                  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) {
            coeffs_.push_back(c);
        }
    }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(std::size_t degree, Rational c = Rational(1)) {
        std::vector<Rational> v(degree + 1);
        v[degree] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as 0.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Rational(0); }

    /// Horner evaluation.
    Rational operator()(const Rational& x) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    /// p(a + b x) expanded in the monomial basis.
    Polynomial compose_linear(const Rational& a, const Rational& b) const {
        Polynomial out;
        const Polynomial lin(std::vector<Rational>{a, b});
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            out = out * lin + Polynomial(*it);
        }
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            coeffs_[j] += o.coeffs_[j];
        }
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
    Polynomial operator-() const {
        Polynomial out(*this);
        for (auto& c : out.coeffs_) {
            c = -c;
        }
        return out;
    }
    Polynomial& operator*=(const Rational& s) {
        for (auto& c : coeffs_) {
            c *= s;
        }
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(v));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const {
        if (coeffs_.empty()) {
            return "0";
        }
        std::string out;
        for (std::size_t j = coeffs_.size(); j-- > 0;) {
            const Rational& c = coeffs_[j];
            if (c.is_zero()) {
                continue;
            }
            const Rational mag = c.abs();
            if (out.empty()) {
                out += c.sign() < 0 ? "-" : "";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            const bool unit = mag == Rational(1);
            if (!unit || j == 0) {
                out += mag.to_string();
            }
            if (j > 0) {
                out += (unit ? "" : "*") + std::string("x");
                if (j > 1) {
                    out += "^" + std::to_string(j);
                }
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rational> coeffs_;
};

}  // namespace evenzeta
