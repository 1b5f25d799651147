#pragma once

// Exact even zeta ratios r_k = zeta(2k) / pi^(2k) from the recurrence
//
//   (1 - 1/2^(2k)) r_k = sum_{m=1}^{k-1} (-1)^(k-m+1) / (2k-2m)! * (1/2 - 1/2^(2m)) r_m
//                        - (-1)^k / (4 (2k)!)
//
// which is the pi-free form of
//
//   (4 - 4/2^(2k)) zeta(2k) = sum_{m=1}^{k-1} (-1)^(k-m+1) / (2k-2m)! * (2 - 4/2^(2m)) pi^(2k-2m) zeta(2m)
//                             - (-1)^k pi^(2k) / (2k)!
//
// obtained by dividing through by 4 pi^(2k). For k = 1 the sum is empty and
// r_1 = 1/6. No Bernoulli numbers are involved; Euler's formula is kept in
// bernoulli.hpp as the independent cross-check.

#include <cmath>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "evenzeta/bernoulli.hpp"
#include "evenzeta/memo_table.hpp"
#include "evenzeta/pi.hpp"
#include "evenzeta/rational.hpp"
#include "evenzeta/real.hpp"
#include "evenzeta/verification_report.hpp"

namespace evenzeta {

enum class ZetaSource { recurrence, euler_formula };

inline const char* to_string(ZetaSource s) { return s == ZetaSource::recurrence ? "recurrence" : "euler_formula"; }

struct ZetaEntry {
    Rational ratio;
    ZetaSource source;
};

/// Memoized r_1, r_2, ... Entries are never recomputed; asking for k extends
/// the table through k. Safe for concurrent use.
class ZetaEvenTable {
public:
    explicit ZetaEvenTable(ZetaSource source = ZetaSource::recurrence)
        : state_(std::make_unique<State>(source)) {}

    ZetaSource source() const { return state_->source; }

    Rational ratio(std::size_t k) { return entry(k).ratio; }

    ZetaEntry entry(std::size_t k) {
        check_index(k);
        return state_->entries.at(k - 1);
    }

    void extend_to(std::size_t k_max) { state_->entries.ensure_size(k_max); }

    /// Largest k currently held.
    std::size_t max_k() const { return state_->entries.size(); }

    /// Entries for k = 1..k_max, in order.
    std::vector<ZetaEntry> entries(std::size_t k_max) { return state_->entries.prefix(k_max); }

    /// (2n)!, memoized alongside the table.
    Integer even_factorial(std::size_t n) { return state_->even_factorials.at(n); }

private:
    static void check_index(std::size_t k) {
        if (k < 1) {
            throw DomainError("zeta table index k must be >= 1");
        }
    }

    struct State {
        explicit State(ZetaSource s)
            : source(s),
              even_factorials(&next_even_factorial),
              entries([this](std::size_t i, std::span<const ZetaEntry> prefix) { return next_entry(i + 1, prefix); }) {}

        static Integer next_even_factorial(std::size_t n, std::span<const Integer> prefix) {
            if (n == 0) {
                return 1;
            }
            return prefix[n - 1] * static_cast<unsigned long>(2 * n - 1) * static_cast<unsigned long>(2 * n);
        }

        ZetaEntry next_entry(std::size_t k, std::span<const ZetaEntry> prefix) {
            if (source == ZetaSource::euler_formula) {
                return {zeta_even_via_euler(k), source};
            }
            even_factorials.ensure_size(k + 1);
            Rational sum;
            for (std::size_t m = 1; m < k; ++m) {
                // (1/2 - 1/4^m) = (2^(2m-1) - 1) / 4^m
                const Rational weight(pow2(2 * m - 1) - 1, pow2(2 * m) * even_factorials.at(k - m));
                const Rational term = weight * prefix[m - 1].ratio;
                if ((k - m + 1) % 2 == 0) {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            const Rational tail(Integer(1), 4 * even_factorials.at(k));
            if (k % 2 == 0) {
                sum -= tail;
            } else {
                sum += tail;
            }
            // 1 - 1/4^k = (4^k - 1) / 4^k
            const Integer four_k = pow2(2 * k);
            return {sum * Rational(four_k, four_k - 1), source};
        }

        ZetaSource source;
        MemoTable<Integer> even_factorials;
        MemoTable<ZetaEntry> entries;
    };

    std::unique_ptr<State> state_;
};

inline ZetaEvenTable& default_zeta_table() {
    static ZetaEvenTable table;
    return table;
}

/// r_k by the recurrence, extending `table` through k.
inline Rational zeta_even_ratio(std::size_t k, ZetaEvenTable& table) { return table.ratio(k); }
inline Rational zeta_even_ratio(std::size_t k) { return zeta_even_ratio(k, default_zeta_table()); }

/// A fresh table holding r_1..r_k_max, each tagged `recurrence`.
inline ZetaEvenTable zeta_even_table(std::size_t k_max) {
    if (k_max < 1) {
        throw DomainError("zeta_even_table: k_max must be >= 1");
    }
    ZetaEvenTable table(ZetaSource::recurrence);
    table.extend_to(k_max);
    return table;
}

/// zeta(2k) = r_k pi^(2k) as a `digits`-significant-digit decimal string.
inline HighPrecisionReal zeta_even_value(std::size_t k, int digits, ZetaEvenTable& table) {
    if (digits < kMinDigits) {
        throw DomainError("zeta_even_decimal: digits must be >= 10");
    }
    // pi^(2k) amplifies the relative error of pi by 2k.
    const int work = digits + kGuardDigits + static_cast<int>(std::ceil(std::log10(2.0 * static_cast<double>(k) + 1.0)));
    const HighPrecisionReal pi = compute_pi(work);
    const HighPrecisionReal value = HighPrecisionReal(table.ratio(k), work) * pow(pi, static_cast<long>(2 * k));
    return value.with_digits(digits);
}

inline std::string zeta_even_decimal(std::size_t k, int digits, ZetaEvenTable& table) {
    return zeta_even_value(k, digits, table).to_string(digits);
}
inline std::string zeta_even_decimal(std::size_t k, int digits) {
    return zeta_even_decimal(k, digits, default_zeta_table());
}

/// Exact comparison of the recurrence against Euler's formula for k <= k_max.
/// The residual is the number of mismatching indices; tolerance is zero.
inline VerificationReport recurrence_cross_check(std::size_t k_max, ZetaEvenTable& table, BernoulliTable& bernoulli_table) {
    if (k_max < 1) {
        throw DomainError("recurrence_cross_check: k_max must be >= 1");
    }
    VerificationReport report;
    report.identity = "recurrence_vs_euler";
    report.parameters = {{"kmax", std::to_string(k_max)}};
    for (std::size_t k = 1; k <= k_max; ++k) {
        const Rational via_recurrence = table.ratio(k);
        const Rational via_euler = zeta_even_via_euler(k, bernoulli_table);
        if (via_recurrence != via_euler) {
            report.mismatches.push_back(k);
        }
        if (k == k_max) {
            report.lhs = via_recurrence.to_string();
            report.rhs = via_euler.to_string();
        }
    }
    report.residual = HighPrecisionReal(static_cast<long>(report.mismatches.size()), kDefaultDigits);
    report.tolerance = HighPrecisionReal(0L, kDefaultDigits);
    report.passed = within_tolerance(report.residual, report.tolerance);
    return report;
}

inline VerificationReport recurrence_cross_check(std::size_t k_max) {
    return recurrence_cross_check(k_max, default_zeta_table(), default_bernoulli_table());
}

}  // namespace evenzeta
