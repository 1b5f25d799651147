#pragma once

// pi from two independent arctangent formulae evaluated in fixed point:
//
//   Machin:  pi/4 = 4 arccot 5 - arccot 239
//   Gauss:   pi/4 = 12 arccot 18 + 8 arccot 57 - 5 arccot 239
//
// Both must agree within their combined truncation bound before a value is
// returned.

#include <array>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "evenzeta/rational.hpp"
#include "evenzeta/real.hpp"

namespace evenzeta {

class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

struct ArccotTerm {
    long weight;
    unsigned long x;
};

inline constexpr std::array<ArccotTerm, 2> kMachin{{{4, 5}, {-1, 239}}};
inline constexpr std::array<ArccotTerm, 3> kGauss{{{12, 18}, {8, 57}, {-5, 239}}};

struct FixedPoint {
    Integer value;       // scaled by 10^scale_digits
    Integer error_units; // |value - exact * 10^scale_digits| <= error_units
};

/// arccot(x) * 10^scale_digits, truncated term by term.
inline FixedPoint arccot_fixed(unsigned long x, long scale_digits) {
    Integer unit;
    mpz_ui_pow_ui(unit.get_mpz_t(), 10, static_cast<unsigned long>(scale_digits));
    const Integer x2 = Integer(x) * x;
    Integer power = unit / x;  // 10^D / x^(2k+1)
    Integer sum = power;
    Integer terms = 1;
    for (unsigned long k = 1; power != 0; ++k) {
        power /= x2;
        const Integer term = power / (2 * k + 1);
        if (k % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
        ++terms;
    }
    // Each truncated quotient is off by < 1 unit (two divisions per term),
    // and the first omitted term is below 1 unit as well.
    return {sum, 2 * terms + 1};
}

template <std::size_t N>
FixedPoint pi_fixed(const std::array<ArccotTerm, N>& formula, long scale_digits) {
    FixedPoint out{0, 0};
    for (const auto& t : formula) {
        const FixedPoint a = arccot_fixed(t.x, scale_digits);
        out.value += t.weight * 4 * a.value;
        out.error_units += std::abs(t.weight) * 4 * a.error_units;
    }
    return out;
}

struct PiCache {
    std::mutex mutex;
    std::optional<HighPrecisionReal> value;
};

inline PiCache& pi_cache() {
    static PiCache cache;
    return cache;
}

inline HighPrecisionReal compute_pi_uncached(int digits) {
    const long scale = digits + kGuardDigits + 10;
    const FixedPoint machin = pi_fixed(kMachin, scale);
    const FixedPoint gauss = pi_fixed(kGauss, scale);
    const Integer gap = abs(machin.value - gauss.value);
    if (gap > machin.error_units + gauss.error_units) {
        throw ComputationError("pi: arctangent formulae disagree beyond their truncation bound");
    }
    Integer unit;
    mpz_ui_pow_ui(unit.get_mpz_t(), 10, static_cast<unsigned long>(scale));
    return HighPrecisionReal(Rational(machin.value, unit), digits);
}

}  // namespace detail

/// pi to `digits` significant digits (digits >= 10). Results are cached;
/// a request at or below the cached precision is re-rounded from it.
inline HighPrecisionReal compute_pi(int digits) {
    if (digits < kMinDigits) {
        throw DomainError("compute_pi: digits must be >= 10");
    }
    auto& cache = detail::pi_cache();
    std::lock_guard lock(cache.mutex);
    if (!cache.value || cache.value->digits() < digits) {
        cache.value = detail::compute_pi_uncached(digits);
    }
    return cache.value->with_digits(digits);
}

}  // namespace evenzeta
