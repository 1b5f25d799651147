#pragma once

// Numerical checks of the series identities behind the even-zeta recurrence.
//
//   phi_m(u):   2 e^t / (e^t + u) = sum_m phi_m(u) t^m / m!,   |t| < pi
//               phi_m(u) = -2 sum_{n>=1} n^m / (-u)^n          (u > 1, any integer m)
//   f_k(u):     sum_{n>=1} u^{-n} / n^{2k}
//   expansion:  f_k(u) = sum_{j>=0} (-1)^j pi^{2j} / (2j)! * phi_{2j-2k}(u) / (-2)
//
// Limits u -> 1+ are checked as residual sequences over shrinking deltas.
// Every truncation carries a stated bound:
//   phi / f_k series  geometric majorant once terms decrease monotonically
//   eta partial sums  first omitted term (alternating series)
//   direct zeta       integral test, N^{1-2k} / (2k-1)

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evenzeta/pi.hpp"
#include "evenzeta/rational.hpp"
#include "evenzeta/real.hpp"
#include "evenzeta/truncated_series.hpp"
#include "evenzeta/verification_report.hpp"
#include "evenzeta/zeta_recurrence.hpp"

namespace evenzeta {

struct PhiEvaluation {
    long m = 0;
    Rational u;
    HighPrecisionReal value;
    /// Set when the value came from exact coefficient extraction.
    std::optional<Rational> exact;
    std::size_t terms_used = 0;
    HighPrecisionReal error_bound;
};

/// A truncated sum with a two-sided enclosure of the true value:
/// value - error_bound <= true <= value + error_bound.
struct BoundedSum {
    HighPrecisionReal value;
    HighPrecisionReal error_bound;
    std::size_t terms = 0;
};

/// value < zeta(2k) < value + tail_high.
struct ZetaBracket {
    HighPrecisionReal value;
    HighPrecisionReal tail_low;
    HighPrecisionReal tail_high;
};

namespace detail {

inline int log10_ceil(double x) { return x <= 0 ? 0 : static_cast<int>(std::ceil(x)); }

// sum_{n>=1} s_n n^power u^{-n} with s_n = (-1)^{n+1} (alternating) or 1.
// Absolute accuracy target 10^{-precision}. The returned bound covers both
// the truncated tail and accumulated rounding.
inline BoundedSum power_geometric_sum(long power, const Rational& u, bool alternating, int precision) {
    if (u <= Rational(1)) {
        throw DomainError("series requires u > 1");
    }
    const double ln_u = std::log(u.to_double());
    const double log10_u = ln_u / std::log(10.0);
    // Terms grow until n = power / ln u when power > 0.
    const double monotone_from = power > 0 ? static_cast<double>(power) / ln_u : 0.0;
    double peak_log10 = -log10_u;
    if (power > 0) {
        const double n_star = std::max(1.0, monotone_from);
        peak_log10 = std::max(peak_log10, static_cast<double>(power) * std::log10(n_star) - n_star * log10_u);
    }
    const int work = precision + kGuardDigits + log10_ceil(peak_log10) + 8;
    const mpfr_prec_t bits = bits_for_digits(work);

    HighPrecisionReal uinv(Rational(1) / u, work);
    HighPrecisionReal power_u = uinv;  // u^{-n}
    HighPrecisionReal sum(work);
    HighPrecisionReal abs_sum(work);
    HighPrecisionReal term(work);
    const HighPrecisionReal target = HighPrecisionReal::pow10(-precision, work) * HighPrecisionReal(Rational(1, 2), work);

    const auto nth_power = [&](mpfr_ptr out, unsigned long n) {
        mpfr_set_ui(out, n, MPFR_RNDN);
        mpfr_pow_si(out, out, power, MPFR_RNDN);
    };

    HighPrecisionReal tail(work);
    std::size_t n = 1;
    for (;; ++n) {
        nth_power(term.get(), n);
        mpfr_mul(term.get(), term.get(), power_u.get(), MPFR_RNDN);
        mpfr_add(abs_sum.get(), abs_sum.get(), term.get(), MPFR_RNDN);
        if (alternating && n % 2 == 0) {
            mpfr_sub(sum.get(), sum.get(), term.get(), MPFR_RNDN);
        } else {
            mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
        }
        mpfr_mul(power_u.get(), power_u.get(), uinv.get(), MPFR_RNDN);

        if (static_cast<double>(n) <= monotone_from) {
            continue;
        }
        // Cheap screen in doubles before the rigorous check.
        const double next_log10 = static_cast<double>(power) * std::log10(static_cast<double>(n + 1)) -
                                  static_cast<double>(n + 1) * log10_u;
        if (next_log10 > -precision + 2) {
            continue;
        }
        // For n' >= n+1: a_{n'+1}/a_{n'} = ((n'+1)/n')^power / u <= rho.
        HighPrecisionReal rho(work);
        if (power > 0) {
            mpfr_set_ui(rho.get(), n + 2, MPFR_RNDU);
            mpfr_div_ui(rho.get(), rho.get(), n + 1, MPFR_RNDU);
            mpfr_pow_si(rho.get(), rho.get(), power, MPFR_RNDU);
            mpfr_mul(rho.get(), rho.get(), uinv.get(), MPFR_RNDU);
        } else {
            mpfr_set(rho.get(), uinv.get(), MPFR_RNDU);
        }
        if (mpfr_cmp_ui(rho.get(), 1) >= 0) {
            continue;
        }
        nth_power(tail.get(), n + 1);
        mpfr_mul(tail.get(), tail.get(), power_u.get(), MPFR_RNDU);
        HighPrecisionReal one_minus(1L, work);
        mpfr_sub(one_minus.get(), one_minus.get(), rho.get(), MPFR_RNDD);
        mpfr_div(tail.get(), tail.get(), one_minus.get(), MPFR_RNDU);
        if (tail < target) {
            break;
        }
    }

    // Rounding: u^{-n} carries at most n roundings, each term a few more,
    // and every partial sum one more; all relative 2^{-bits}.
    HighPrecisionReal rounding(work);
    mpfr_mul_ui(rounding.get(), abs_sum.get(), 2 * n + 8, MPFR_RNDU);
    mpfr_mul_2si(rounding.get(), rounding.get(), 1 - bits, MPFR_RNDU);

    BoundedSum out{sum.with_digits(precision), tail + rounding, n};
    // Re-rounding to `precision` digits adds one more relative error.
    HighPrecisionReal reround = abs(out.value);
    mpfr_mul_2si(reround.get(), reround.get(), 1 - bits_for_digits(precision), MPFR_RNDU);
    out.error_bound = (out.error_bound + reround).with_digits(precision);
    return out;
}

/// Upper bound for zeta(2k) - f_k(1 + delta) (and for the analogous phi
/// deficit): with M = floor(1/delta), 1 - u^{-n} <= min(1, n delta) gives
/// delta (1 + ln M) + 1/M.
inline HighPrecisionReal abel_deficit_bound(const Rational& delta, int digits) {
    if (delta >= Rational(1)) {
        return HighPrecisionReal(2L, digits);
    }
    const Rational inv = Rational(1) / delta;
    const Integer m_floor = inv.numerator() / inv.denominator();
    const HighPrecisionReal m_real(m_floor, digits);
    const HighPrecisionReal d(delta, digits);
    return d * (HighPrecisionReal(1L, digits) + log(m_real)) + HighPrecisionReal(1L, digits) / m_real;
}

/// One ulp of `x` rounded to `digits`: covers the rounding of an exact
/// comparison value.
inline HighPrecisionReal conversion_slack(const Rational& x, int digits) {
    HighPrecisionReal out = abs(HighPrecisionReal(x, digits));
    mpfr_mul_2si(out.get(), out.get(), 1 - bits_for_digits(digits), MPFR_RNDU);
    return out;
}

inline std::string join_rationals(const std::vector<Rational>& values) {
    std::string out;
    for (const auto& v : values) {
        out += (out.empty() ? "" : ",") + v.to_string();
    }
    return out;
}

}  // namespace detail

/// phi_m(u) = -2 sum n^m / (-u)^n for u > 1 and any integer m.
inline PhiEvaluation phi_series(long m, const Rational& u, int precision = kDefaultDigits) {
    if (u <= Rational(1)) {
        throw DomainError("phi_series: requires u > 1");
    }
    BoundedSum s = detail::power_geometric_sum(m, u, /*alternating=*/true, precision + 1);
    const HighPrecisionReal two(2L, precision);
    PhiEvaluation out;
    out.m = m;
    out.u = u;
    out.value = (two * s.value).with_digits(precision);
    out.terms_used = s.terms;
    out.error_bound = (two * s.error_bound).with_digits(precision);
    return out;
}

/// phi_0(u) .. phi_order(u) as exact rationals, from the series quotient
/// 2 exp(t) / (exp(t) + u) scaled by m!.
inline std::vector<Rational> phi_taylor_coeffs(const Rational& u, std::size_t order) {
    TruncatedSeries<Rational> num = exp_series(order);
    TruncatedSeries<Rational> den = num;
    for (std::size_t n = 0; n <= order; ++n) {
        num[n] *= Rational(2);
    }
    den[0] += u;
    const TruncatedSeries<Rational> quotient = divide(num, den);
    std::vector<Rational> out;
    out.reserve(order + 1);
    Integer fact = 1;
    for (std::size_t m = 0; m <= order; ++m) {
        if (m > 0) {
            fact *= static_cast<unsigned long>(m);
        }
        out.push_back(quotient[m] * Rational(fact));
    }
    return out;
}

inline Rational phi_taylor_coeff(std::size_t m, const Rational& u, std::size_t order) {
    if (order < m) {
        throw DomainError("phi_taylor_coeff: order must be >= m");
    }
    if (u < Rational(1)) {
        throw DomainError("phi_taylor_coeff: requires u >= 1");
    }
    return phi_taylor_coeffs(u, order)[m];
}

/// sum_{n=1}^{N} (-1)^n / n^m with error bound 1/(N+1)^m.
inline BoundedSum eta_partial(long m, std::size_t terms, int precision = kDefaultDigits) {
    if (m < 2) {
        throw DomainError("eta_partial: requires m >= 2");
    }
    if (terms < 1) {
        throw DomainError("eta_partial: requires N >= 1");
    }
    const int work = precision + kGuardDigits;
    HighPrecisionReal sum(work);
    HighPrecisionReal term(work);
    for (std::size_t n = 1; n <= terms; ++n) {
        mpfr_set_ui(term.get(), n, MPFR_RNDN);
        mpfr_pow_si(term.get(), term.get(), -m, MPFR_RNDN);
        if (n % 2 == 0) {
            mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
        } else {
            mpfr_sub(sum.get(), sum.get(), term.get(), MPFR_RNDN);
        }
    }
    HighPrecisionReal bound(static_cast<long>(terms + 1), precision);
    bound = pow(bound, -m);
    return {sum.with_digits(precision), bound, terms};
}

/// sum_{n=1}^{N} n^{-2k} with the integral-test tail bound N^{1-2k}/(2k-1).
inline ZetaBracket direct_zeta_partial(std::size_t k, std::size_t terms, int precision = kDefaultDigits) {
    if (k < 1 || terms < 1) {
        throw DomainError("direct_zeta_partial: requires k >= 1 and N >= 1");
    }
    const int work = precision + kGuardDigits;
    const long p = static_cast<long>(2 * k);
    HighPrecisionReal sum(work);
    HighPrecisionReal term(work);
    for (std::size_t n = terms; n >= 1; --n) {  // smallest terms first
        mpfr_set_ui(term.get(), n, MPFR_RNDN);
        mpfr_pow_si(term.get(), term.get(), -p, MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    }
    HighPrecisionReal tail(static_cast<long>(terms), precision);
    tail = pow(tail, 1 - p) / HighPrecisionReal(p - 1, precision);
    return {sum.with_digits(precision), HighPrecisionReal(0L, precision), tail};
}

/// f_k(u) = sum u^{-n} / n^{2k}, u > 1.
inline BoundedSum abel_series(std::size_t k, const Rational& u, int precision = kDefaultDigits) {
    return detail::power_geometric_sum(-static_cast<long>(2 * k), u, /*alternating=*/false, precision);
}

/// Checks f_k(1 + delta) -> zeta(2k) from below with strictly shrinking
/// residuals; the final residual must sit under the deficit bound of the
/// smallest delta. `passed` requires all three.
inline VerificationReport abel_limit_check(std::size_t k, const std::vector<Rational>& deltas,
                                           int precision = kDefaultDigits) {
    if (deltas.empty()) {
        throw DomainError("abel_limit_check: empty delta sequence");
    }
    for (const auto& d : deltas) {
        if (d <= Rational(0)) {
            throw DomainError("abel_limit_check: deltas must be positive");
        }
    }
    const HighPrecisionReal target = zeta_even_value(k, precision, default_zeta_table());

    VerificationReport report;
    report.identity = "abel_limit";
    report.parameters = {{"k", std::to_string(k)},
                         {"deltas", detail::join_rationals(deltas)},
                         {"digits", std::to_string(precision)}};
    bool monotone = true;
    bool from_below = true;
    std::size_t terms = 0;
    HighPrecisionReal last_value(precision);
    for (const auto& d : deltas) {
        const BoundedSum f = abel_series(k, Rational(1) + d, precision);
        const HighPrecisionReal residual = target - f.value;
        if (residual - f.error_bound <= HighPrecisionReal(0L, precision)) {
            from_below = false;
        }
        if (!report.residual_sequence.empty() && !(residual < report.residual_sequence.back())) {
            monotone = false;
        }
        report.residual_sequence.push_back(residual);
        last_value = f.value;
        terms = f.terms;
    }
    report.parameters.emplace_back("terms", std::to_string(terms));
    report.lhs = last_value.to_string();
    report.rhs = target.to_string();
    report.residual = report.residual_sequence.back();
    const Rational smallest = *std::min_element(deltas.begin(), deltas.end());
    report.tolerance = detail::abel_deficit_bound(smallest, precision);
    report.passed = monotone && from_below && within_tolerance(report.residual, report.tolerance);
    return report;
}

/// Tolerance used by identity_check_expansion: 10^{-floor(3 precision / 5)}.
inline HighPrecisionReal expansion_tolerance(int precision) {
    return HighPrecisionReal::pow10(-(3L * precision) / 5, precision);
}

/// Compares f_k(u) by direct summation with the truncated j-sum
/// sum_{j=0}^{J} (-1)^j pi^{2j} / (2j)! * phi_{2j-2k}(u) / (-2).
/// Negative phi indices come from the series, nonnegative ones are exact
/// Taylor coefficients. The report also records the first omitted term.
inline VerificationReport identity_check_expansion(std::size_t k, const Rational& u, std::size_t j_max,
                                                   int precision = kDefaultDigits) {
    if (u <= Rational(1)) {
        throw DomainError("identity_check_expansion: requires u > 1");
    }
    if (k < 1) {
        throw DomainError("identity_check_expansion: requires k >= 1");
    }
    const int work = precision + kGuardDigits;
    const HighPrecisionReal pi = compute_pi(work);
    const HighPrecisionReal pi2 = pi * pi;

    const std::size_t top_index = 2 * (j_max + 1) >= 2 * k ? 2 * (j_max + 1) - 2 * k : 0;
    const std::vector<Rational> taylor = phi_taylor_coeffs(u, top_index);

    HighPrecisionReal bound_sum(0L, work);
    const auto phi_at = [&](std::size_t j) {
        const long index = 2 * static_cast<long>(j) - 2 * static_cast<long>(k);
        if (index >= 0) {
            return HighPrecisionReal(taylor[static_cast<std::size_t>(index)], work);
        }
        PhiEvaluation e = phi_series(index, u, work);
        bound_sum += e.error_bound;
        return e.value;
    };
    // (-1)^j pi^{2j} / (2j)! / (-2)
    const auto term_at = [&](std::size_t j, const HighPrecisionReal& pi_pow) {
        HighPrecisionReal t = pi_pow * phi_at(j) / HighPrecisionReal(factorial(2 * j), work);
        t = t / HighPrecisionReal(-2L, work);
        return j % 2 == 0 ? t : -t;
    };

    HighPrecisionReal rhs(0L, work);
    HighPrecisionReal pi_pow(1L, work);
    for (std::size_t j = 0; j <= j_max; ++j) {
        rhs += term_at(j, pi_pow);
        pi_pow *= pi2;
    }
    const HighPrecisionReal first_omitted = term_at(j_max + 1, pi_pow);

    const BoundedSum lhs = abel_series(k, u, work);

    VerificationReport report;
    report.identity = "expansion";
    report.parameters = {{"k", std::to_string(k)},
                         {"u", u.to_string()},
                         {"jmax", std::to_string(j_max)},
                         {"digits", std::to_string(precision)},
                         {"terms", std::to_string(lhs.terms)},
                         {"first_omitted", first_omitted.to_string(precision)},
                         {"numeric_bound", (lhs.error_bound + bound_sum).to_string(12)}};
    report.lhs = lhs.value.to_string(precision);
    report.rhs = rhs.to_string(precision);
    report.residual = (lhs.value - rhs).with_digits(precision);
    report.tolerance = expansion_tolerance(precision);
    report.passed = within_tolerance(report.residual, report.tolerance);
    return report;
}

/// phi_m(u) by the series against the exact Taylor coefficient. Passes when
/// they agree within the series' error bound.
inline VerificationReport phi_route_check(std::size_t m, const Rational& u, int precision = kDefaultDigits) {
    const PhiEvaluation series = phi_series(static_cast<long>(m), u, precision);
    const Rational exact = phi_taylor_coeff(m, u, m);
    VerificationReport report;
    report.identity = "phi_series_vs_taylor";
    report.parameters = {{"m", std::to_string(m)},
                         {"u", u.to_string()},
                         {"digits", std::to_string(precision)},
                         {"terms", std::to_string(series.terms_used)}};
    report.lhs = series.value.to_string();
    report.rhs = exact.to_string();
    report.residual = series.value - HighPrecisionReal(exact, precision);
    report.tolerance = series.error_bound + detail::conversion_slack(exact, precision);
    report.passed = within_tolerance(report.residual, report.tolerance);
    return report;
}

/// phi_0(u) by the series against the closed form 2/(u+1).
inline VerificationReport phi_closed_form_check(const Rational& u, int precision = kDefaultDigits) {
    const PhiEvaluation series = phi_series(0, u, precision);
    const Rational closed = Rational(2) / (u + Rational(1));
    VerificationReport report;
    report.identity = "phi0_closed_form";
    report.parameters = {{"m", "0"},
                         {"u", u.to_string()},
                         {"digits", std::to_string(precision)},
                         {"terms", std::to_string(series.terms_used)}};
    report.lhs = series.value.to_string();
    report.rhs = closed.to_string();
    report.residual = series.value - HighPrecisionReal(closed, precision);
    report.tolerance = series.error_bound + detail::conversion_slack(closed, precision);
    report.passed = within_tolerance(report.residual, report.tolerance);
    return report;
}

/// phi_{-m}(1 + delta) -> 2 (1 - 2^{1-m}) zeta(m) as delta shrinks. The target
/// is the exact even zeta value for even m, and -2 times an eta partial sum
/// of `eta_terms` terms for odd m.
inline VerificationReport phi_boundary_check(long m, const std::vector<Rational>& deltas,
                                             int precision = kDefaultDigits, std::size_t eta_terms = 10000) {
    if (m < 2) {
        throw DomainError("phi_boundary_check: requires m >= 2");
    }
    if (deltas.empty()) {
        throw DomainError("phi_boundary_check: empty delta sequence");
    }
    HighPrecisionReal target(precision);
    HighPrecisionReal target_bound(0L, precision);
    if (m % 2 == 0) {
        const Rational factor = Rational(2) * (Rational(1) - Rational(Integer(1), pow2(static_cast<unsigned long>(m - 1))));
        target = HighPrecisionReal(factor, precision) *
                 zeta_even_value(static_cast<std::size_t>(m / 2), precision, default_zeta_table());
    } else {
        const BoundedSum eta = eta_partial(m, eta_terms, precision);
        target = HighPrecisionReal(-2L, precision) * eta.value;
        target_bound = HighPrecisionReal(2L, precision) * eta.error_bound;
    }

    VerificationReport report;
    report.identity = "phi_boundary_limit";
    report.parameters = {{"m", std::to_string(-m)},
                         {"deltas", detail::join_rationals(deltas)},
                         {"digits", std::to_string(precision)}};
    if (m % 2 != 0) {
        report.parameters.emplace_back("terms", std::to_string(eta_terms));
    }
    bool monotone = true;
    HighPrecisionReal last(precision);
    for (const auto& d : deltas) {
        const PhiEvaluation e = phi_series(-m, Rational(1) + d, precision);
        const HighPrecisionReal residual = abs(e.value - target);
        if (!report.residual_sequence.empty() && !(residual < report.residual_sequence.back())) {
            monotone = false;
        }
        report.residual_sequence.push_back(residual);
        last = e.value;
    }
    report.lhs = last.to_string();
    report.rhs = target.to_string();
    report.residual = report.residual_sequence.back();
    const Rational smallest = *std::min_element(deltas.begin(), deltas.end());
    report.tolerance = HighPrecisionReal(2L, precision) * detail::abel_deficit_bound(smallest, precision) + target_bound;
    report.passed = monotone && within_tolerance(report.residual, report.tolerance);
    return report;
}

/// Does [S_N, S_N + N^{1-2k}/(2k-1)] contain the `digits`-digit decimal of
/// zeta(2k)? The decimal is only known to half a unit in its last place, so
/// containment is judged up to that amount: residual is the distance outside
/// the bracket, tolerance the half unit.
inline VerificationReport zeta_bracket_check(std::size_t k, std::size_t terms, int digits = kDefaultDigits) {
    const std::string decimal = zeta_even_decimal(k, digits);
    const int work = digits + kGuardDigits;
    const ZetaBracket bracket = direct_zeta_partial(k, terms, work);
    const HighPrecisionReal z = HighPrecisionReal::parse(decimal, work);
    const HighPrecisionReal low = bracket.value;
    const HighPrecisionReal high = bracket.value + bracket.tail_high;

    HighPrecisionReal outside(0L, work);
    if (z < low) {
        outside = low - z;
    } else if (z > high) {
        outside = z - high;
    }
    VerificationReport report;
    report.identity = "zeta_bracket";
    report.parameters = {{"k", std::to_string(k)}, {"terms", std::to_string(terms)}, {"digits", std::to_string(digits)}};
    report.lhs = decimal;
    report.rhs = "[" + low.to_string(digits + 5) + ", " + high.to_string(digits + 5) + "]";
    report.residual = outside;
    report.tolerance = HighPrecisionReal::pow10(z.decimal_exponent() - digits, work) * HighPrecisionReal(Rational(1, 2), work);
    report.passed = within_tolerance(report.residual, report.tolerance);
    return report;
}

}  // namespace evenzeta
