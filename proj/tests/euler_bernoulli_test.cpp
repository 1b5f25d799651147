#include <vector>

#include <gtest/gtest.h>

#include "evenzeta/bernoulli.hpp"
#include "evenzeta/euler_polynomial.hpp"
#include "evenzeta/polynomial.hpp"
#include "evenzeta/truncated_series.hpp"
#include "oracles.hpp"

namespace evenzeta {
namespace {

using oracle::bernoulli_by_series_division;
using oracle::euler_by_series_division;

TEST(Bernoulli, PublishedSmallValues) {
    EXPECT_EQ(bernoulli(0), Rational(1));
    EXPECT_EQ(bernoulli(1), Rational(-1, 2));
    EXPECT_EQ(bernoulli(2), Rational(1, 6));
    EXPECT_EQ(bernoulli(4), Rational(-1, 30));
    EXPECT_EQ(bernoulli(7), Rational(0));
    EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
}

TEST(Bernoulli, OddIndicesVanish) {
    BernoulliTable table;
    const auto values = table.values(201);
    for (std::size_t n = 3; n <= 201; n += 2) {
        EXPECT_TRUE(values[n].is_zero()) << "n=" << n;
    }
}

TEST(Bernoulli, EvenIndicesAlternateInSign) {
    BernoulliTable table;
    for (std::size_t k = 1; k <= 100; ++k) {
        const int expected = k % 2 == 1 ? 1 : -1;
        EXPECT_EQ(table.value(2 * k).sign(), expected) << "k=" << k;
    }
}

TEST(Bernoulli, RecurrenceMatchesGeneratingFunction) {
    const auto oracle = bernoulli_by_series_division(30);
    BernoulliTable table;
    for (std::size_t n = 0; n < 30; ++n) {
        EXPECT_EQ(table.value(n), oracle[n]) << "n=" << n;
    }
}

TEST(Bernoulli, TableGrowsOnDemand) {
    BernoulliTable table;
    EXPECT_EQ(table.size(), 0u);
    (void)table.value(10);
    EXPECT_EQ(table.size(), 11u);
    (void)table.value(4);
    EXPECT_EQ(table.size(), 11u);
}

TEST(EulerPolynomial, LowDegrees) {
    EXPECT_EQ(euler_polynomial(0).polynomial(), Polynomial(1));
    const EulerPolynomial e1 = euler_polynomial(1);
    EXPECT_EQ(e1.coefficient(0), Rational(-1, 2));
    EXPECT_EQ(e1.coefficient(1), Rational(1));
    EXPECT_EQ(e1.degree(), 1u);
    const EulerPolynomial e3 = euler_polynomial(3);
    EXPECT_EQ(e3.polynomial(), Polynomial({Rational(1, 4), Rational(0), Rational(-3, 2), Rational(1)}));
}

TEST(EulerPolynomial, DegreeOneAgreesWithSymbolicSeriesDivision) {
    const auto oracle = euler_by_series_division(1);
    EXPECT_EQ(oracle[1], Polynomial({Rational(-1, 2), Rational(1)}));
    EXPECT_EQ(euler_polynomial(1).polynomial(), oracle[1]);
}

TEST(EulerPolynomial, EvaluationExamples) {
    EXPECT_EQ(euler_polynomial_eval(euler_polynomial(0), Rational(1)), Rational(1));
    EXPECT_EQ(euler_polynomial_eval(euler_polynomial(3), Rational(1)), Rational(-1, 4));
    EXPECT_EQ(euler_polynomial_eval(euler_polynomial(4), Rational(1)), Rational(0));
    EXPECT_EQ(euler_polynomial_eval(euler_polynomial(1), Rational(1, 2)), Rational(0));
}

TEST(EulerPolynomial, LeadingCoefficientIsOne) {
    for (std::size_t m = 0; m <= 40; ++m) {
        const EulerPolynomial p = euler_polynomial(m);
        EXPECT_EQ(p.polynomial().degree(), m);
        EXPECT_EQ(p.coefficient(m), Rational(1));
    }
}

TEST(EulerPolynomial, ValueAtOne) {
    // E_m(1) vanishes only for even m >= 2; for odd m, E_m(1) = -E_m(0) != 0.
    EXPECT_EQ(euler_polynomial_eval(euler_polynomial(0), Rational(1)), Rational(1));
    for (std::size_t m = 1; m <= 100; ++m) {
        const Rational at_one = euler_polynomial_eval(euler_polynomial(m), Rational(1));
        if (m % 2 == 0) {
            EXPECT_TRUE(at_one.is_zero()) << "m=" << m;
        } else {
            EXPECT_FALSE(at_one.is_zero()) << "m=" << m;
            EXPECT_EQ(at_one, -euler_polynomial_eval(euler_polynomial(m), Rational(0))) << "m=" << m;
        }
    }
}

TEST(EulerPolynomial, OddValuesAtOneMatchSympy) {
    // sympy.euler(m, 1) for m = 1, 3, 5, 7
    EXPECT_EQ(euler_polynomial_eval(euler_polynomial(1), Rational(1)), Rational(1, 2));
    EXPECT_EQ(euler_polynomial_eval(euler_polynomial(3), Rational(1)), Rational(-1, 4));
    EXPECT_EQ(euler_polynomial_eval(euler_polynomial(5), Rational(1)), Rational(1, 2));
    EXPECT_EQ(euler_polynomial_eval(euler_polynomial(7), Rational(1)), Rational(-17, 8));
}

TEST(EulerPolynomial, Reflection) {
    for (std::size_t m = 0; m <= 50; ++m) {
        const EulerPolynomial p = euler_polynomial(m);
        const Polynomial expected = m % 2 == 0 ? p.polynomial() : -p.polynomial();
        EXPECT_EQ(p.reflected(), expected) << "m=" << m;
    }
}

TEST(EulerPolynomial, RecurrenceMatchesGeneratingFunction) {
    const auto oracle = euler_by_series_division(30);
    const std::vector<Rational> points{Rational(0), Rational(1, 2), Rational(1), Rational(2)};
    for (std::size_t m = 0; m <= 30; ++m) {
        const EulerPolynomial p = euler_polynomial(m);
        EXPECT_EQ(p.polynomial(), oracle[m]) << "m=" << m;
        for (const auto& x : points) {
            EXPECT_EQ(euler_polynomial_eval(p, x), oracle[m](x)) << "m=" << m << " x=" << x;
        }
    }
}

TEST(EulerFormula, SmallValues) {
    EXPECT_EQ(zeta_even_via_euler(1), Rational(1, 6));
    EXPECT_EQ(zeta_even_via_euler(2), Rational(1, 90));
    // B_6 = 1/42: 2^5 * (1/42) / 720
    EXPECT_EQ(bernoulli(6), Rational(1, 42));
    EXPECT_EQ(zeta_even_via_euler(3), Rational(1, 945));
}

TEST(EulerFormula, RejectsZero) { EXPECT_THROW(zeta_even_via_euler(0), DomainError); }

}  // namespace
}  // namespace evenzeta
