#pragma once

// Euler polynomials E_m(x), generated by 2 e^{xt} / (e^t + 1).
//
// Multiplying the generating function through by (e^t + 1) and matching
// t^m/m! gives 2 x^m = E_m(x) + sum_{j=0}^{m} C(m,j) E_j(x), hence
//
//     E_m(x) = x^m - (1/2) sum_{j=0}^{m-1} C(m,j) E_j(x).
//
// Derived here from the generating function; the tests confirm it by exact
// series division with polynomial coefficients.

#include <cstddef>
#include <span>
#include <utility>

#include "evenzeta/memo_table.hpp"
#include "evenzeta/polynomial.hpp"
#include "evenzeta/rational.hpp"

namespace evenzeta {

class EulerPolynomial {
public:
    EulerPolynomial(std::size_t degree, Polynomial poly) : degree_(degree), poly_(std::move(poly)) {}

    std::size_t degree() const { return degree_; }
    const Polynomial& polynomial() const { return poly_; }
    /// Coefficient of x^j, j = 0..degree.
    Rational coefficient(std::size_t j) const { return poly_.coefficient(j); }

    /// Coefficients of E_m(1 - x) in the monomial basis.
    Polynomial reflected() const { return poly_.compose_linear(Rational(1), Rational(-1)); }

private:
    std::size_t degree_;
    Polynomial poly_;
};

inline Rational euler_polynomial_eval(const EulerPolynomial& p, const Rational& x) { return p.polynomial()(x); }

class EulerPolynomialTable {
public:
    EulerPolynomialTable() : memo_(&next) {}

    EulerPolynomial at(std::size_t m) { return memo_.at(m); }

private:
    static EulerPolynomial next(std::size_t m, std::span<const EulerPolynomial> prefix) {
        Polynomial acc;
        for (std::size_t j = 0; j < m; ++j) {
            acc += prefix[j].polynomial() * Rational(binomial(m, j));
        }
        return {m, Polynomial::monomial(m) - acc * Rational(1, 2)};
    }

    MemoTable<EulerPolynomial> memo_;
};

inline EulerPolynomialTable& default_euler_table() {
    static EulerPolynomialTable table;
    return table;
}

inline EulerPolynomial euler_polynomial(std::size_t m) { return default_euler_table().at(m); }

}  // namespace evenzeta
