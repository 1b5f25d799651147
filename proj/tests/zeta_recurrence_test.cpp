#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "evenzeta/bernoulli.hpp"
#include "evenzeta/series_verifier.hpp"
#include "evenzeta/zeta_recurrence.hpp"

namespace evenzeta {
namespace {

TEST(ZetaRecurrence, WorkedCases) {
    ZetaEvenTable table;
    EXPECT_EQ(zeta_even_ratio(1, table), Rational(1, 6));
    EXPECT_EQ(zeta_even_ratio(2, table), Rational(1, 90));
    EXPECT_EQ(zeta_even_ratio(3, table), zeta_even_via_euler(3));
    EXPECT_EQ(zeta_even_ratio(3, table), Rational(1, 945));
    EXPECT_EQ(zeta_even_ratio(4, table), zeta_even_via_euler(4));
    EXPECT_EQ(zeta_even_ratio(4, table), Rational(1, 9450));
}

TEST(ZetaRecurrence, FourthPowerIntermediateLine) {
    // 15 zeta(4) = pi^4 / 6
    EXPECT_EQ(Rational(15) * zeta_even_ratio(2), Rational(1, 6));
}

TEST(ZetaRecurrence, RejectsZeroIndex) {
    ZetaEvenTable table;
    EXPECT_THROW(table.ratio(0), DomainError);
    EXPECT_THROW(zeta_even_table(0), DomainError);
}

TEST(ZetaEvenTable, SmallTables) {
    auto t1 = zeta_even_table(1);
    const auto e1 = t1.entries(1);
    ASSERT_EQ(e1.size(), 1u);
    EXPECT_EQ(e1[0].ratio, Rational(1, 6));
    EXPECT_EQ(e1[0].source, ZetaSource::recurrence);

    auto t2 = zeta_even_table(2);
    const auto e2 = t2.entries(2);
    EXPECT_EQ(e2[0].ratio, Rational(1, 6));
    EXPECT_EQ(e2[1].ratio, Rational(1, 90));

    auto t5 = zeta_even_table(5);
    EXPECT_EQ(t5.max_k(), 5u);
    const auto e5 = t5.entries(5);
    for (std::size_t k = 3; k <= 5; ++k) {
        EXPECT_EQ(e5[k - 1].ratio, zeta_even_via_euler(k));
        EXPECT_EQ(e5[k - 1].source, ZetaSource::recurrence);
    }
}

TEST(ZetaEvenTable, EulerSourcedTableAgrees) {
    ZetaEvenTable euler(ZetaSource::euler_formula);
    ZetaEvenTable rec;
    for (std::size_t k = 1; k <= 30; ++k) {
        const ZetaEntry e = euler.entry(k);
        EXPECT_EQ(e.source, ZetaSource::euler_formula);
        EXPECT_EQ(e.ratio, rec.ratio(k));
    }
}

TEST(ZetaEvenTable, ExtendsWithoutRecomputing) {
    ZetaEvenTable table;
    (void)table.ratio(7);
    EXPECT_EQ(table.max_k(), 7u);
    (void)table.ratio(3);
    EXPECT_EQ(table.max_k(), 7u);
    EXPECT_EQ(table.even_factorial(5), factorial(10));
}

TEST(ZetaRecurrence, MatchesEulerFormulaThrough200) {
    ZetaEvenTable table;
    BernoulliTable bern;
    for (std::size_t k = 1; k <= 200; ++k) {
        ASSERT_EQ(table.ratio(k), zeta_even_via_euler(k, bern)) << "k=" << k;
    }
}

TEST(ZetaRecurrence, PositiveAndStrictlyDecreasing) {
    auto table = zeta_even_table(200);
    const auto entries = table.entries(200);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        EXPECT_GT(entries[i].ratio, Rational(0));
        if (i > 0) {
            EXPECT_LT(entries[i].ratio, entries[i - 1].ratio) << "k=" << i + 1;
        }
    }
}

TEST(ZetaRecurrence, RepeatedBuildsAreIdentical) {
    auto a = zeta_even_table(60);
    auto b = zeta_even_table(60);
    const auto ea = a.entries(60);
    const auto eb = b.entries(60);
    for (std::size_t i = 0; i < ea.size(); ++i) {
        EXPECT_EQ(ea[i].ratio, eb[i].ratio);
    }
}

TEST(ZetaEvenTable, ConcurrentExtensionIsConsistent) {
    ZetaEvenTable shared;
    std::vector<std::vector<Rational>> seen(4);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < seen.size(); ++t) {
        threads.emplace_back([&, t] {
            for (std::size_t k = 1; k <= 80; ++k) {
                seen[t].push_back(shared.ratio(k));
            }
        });
    }
    for (auto& th : threads) {
        th.join();
    }
    ZetaEvenTable serial;
    for (std::size_t k = 1; k <= 80; ++k) {
        for (const auto& s : seen) {
            ASSERT_EQ(s[k - 1], serial.ratio(k));
        }
    }
}

TEST(ZetaDecimal, TwelveDigitValues) {
    EXPECT_EQ(zeta_even_decimal(1, 12), "1.64493406685");
    EXPECT_EQ(zeta_even_decimal(2, 12), "1.08232323371");
}

TEST(ZetaDecimal, TwentyIsJustAboveOne) {
    // 1 < zeta(20) < 1 + 2^-19
    const HighPrecisionReal z = HighPrecisionReal::parse(zeta_even_decimal(10, 12), 30);
    EXPECT_GT(z, HighPrecisionReal(1L, 30));
    EXPECT_LT(z, HighPrecisionReal(1L, 30) + HighPrecisionReal(Rational(Integer(1), pow2(19)), 30));
}

TEST(ZetaDecimal, RejectsLowPrecision) { EXPECT_THROW(zeta_even_decimal(1, 5), DomainError); }

TEST(ZetaDecimal, BracketedByDirectSummation) {
    for (std::size_t k = 1; k <= 20; ++k) {
        const VerificationReport r = zeta_bracket_check(k, 1000, 50);
        EXPECT_TRUE(r.passed) << "k=" << k << " outside by " << r.residual;
    }
}

TEST(ZetaDecimal, BracketStrictlyContainsValueWhenWide) {
    // Where the bracket is wide compared with the rounding, containment is strict.
    for (std::size_t k = 1; k <= 4; ++k) {
        const ZetaBracket b = direct_zeta_partial(k, 1000, 60);
        const HighPrecisionReal z = zeta_even_value(k, 60, default_zeta_table());
        EXPECT_LT(b.value, z);
        EXPECT_LT(z, b.value + b.tail_high);
    }
}

TEST(CrossCheck, SmallAndMedium) {
    const VerificationReport r2 = recurrence_cross_check(2);
    EXPECT_TRUE(r2.passed);
    EXPECT_EQ(r2.lhs, "1/90");
    const VerificationReport r50 = recurrence_cross_check(50);
    EXPECT_TRUE(r50.passed);
    EXPECT_TRUE(r50.mismatches.empty());
    EXPECT_EQ(r50.parameter("kmax"), "50");
}

}  // namespace
}  // namespace evenzeta
