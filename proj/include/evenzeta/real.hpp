#pragma once

// Decimal-precision real numbers over MPFR. A value carries the number of
// significant decimal digits it guarantees; the binary working precision
// adds kGuardDigits on top of that.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <string>
#include <utility>

#include <mpfr.h>

#include "evenzeta/rational.hpp"

namespace evenzeta {

inline constexpr int kMinDigits = 10;
inline constexpr int kGuardDigits = 10;
inline constexpr int kDefaultDigits = 50;

inline mpfr_prec_t bits_for_digits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil((digits + kGuardDigits) * 3.321928094887362)) + 4;
}

class HighPrecisionReal {
public:
    HighPrecisionReal() : HighPrecisionReal(kDefaultDigits) {}

    explicit HighPrecisionReal(int digits) : digits_(checked(digits)) {
        mpfr_init2(v_, bits_for_digits(digits_));
        mpfr_set_zero(v_, 1);
    }

    HighPrecisionReal(long value, int digits) : HighPrecisionReal(digits) { mpfr_set_si(v_, value, MPFR_RNDN); }

    HighPrecisionReal(const Rational& value, int digits) : HighPrecisionReal(digits) {
        mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
    }

    HighPrecisionReal(const Integer& value, int digits) : HighPrecisionReal(digits) {
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }

    /// Parses a decimal literal such as "1.25e-3".
    static HighPrecisionReal parse(const std::string& text, int digits) {
        HighPrecisionReal out(digits);
        if (mpfr_set_str(out.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
            throw DomainError("malformed decimal literal: '" + text + "'");
        }
        return out;
    }

    /// 10^exponent.
    static HighPrecisionReal pow10(long exponent, int digits) {
        HighPrecisionReal out(10, digits);
        mpfr_pow_si(out.v_, out.v_, exponent, MPFR_RNDN);
        return out;
    }

    HighPrecisionReal(const HighPrecisionReal& o) : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    HighPrecisionReal(HighPrecisionReal&& o) noexcept : HighPrecisionReal(o.digits_, uninitialized{}) {
        mpfr_swap(v_, o.v_);
    }
    HighPrecisionReal& operator=(const HighPrecisionReal& o) {
        if (this != &o) {
            digits_ = o.digits_;
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    HighPrecisionReal& operator=(HighPrecisionReal&& o) noexcept {
        std::swap(digits_, o.digits_);
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~HighPrecisionReal() { mpfr_clear(v_); }

    int digits() const { return digits_; }
    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    /// Same value re-rounded to a different digit budget.
    HighPrecisionReal with_digits(int digits) const {
        HighPrecisionReal out(digits);
        mpfr_set(out.v_, v_, MPFR_RNDN);
        return out;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    /// Decimal exponent e with 10^(e-1) <= |x| < 10^e, for nonzero x.
    long decimal_exponent() const {
        char* s = nullptr;
        mpfr_exp_t e = 0;
        s = mpfr_get_str(nullptr, &e, 10, 2, v_, MPFR_RNDN);
        mpfr_free_str(s);
        return static_cast<long>(e);
    }

    /// Rounds to `sig_digits` significant digits (ties to even). Uses fixed
    /// notation for moderate exponents, scientific otherwise.
    std::string to_string(int sig_digits) const;
    std::string to_string() const { return to_string(digits_); }

    HighPrecisionReal operator-() const {
        HighPrecisionReal out(*this);
        mpfr_neg(out.v_, out.v_, MPFR_RNDN);
        return out;
    }

    friend HighPrecisionReal operator+(const HighPrecisionReal& a, const HighPrecisionReal& b) {
        return binary(a, b, mpfr_add);
    }
    friend HighPrecisionReal operator-(const HighPrecisionReal& a, const HighPrecisionReal& b) {
        return binary(a, b, mpfr_sub);
    }
    friend HighPrecisionReal operator*(const HighPrecisionReal& a, const HighPrecisionReal& b) {
        return binary(a, b, mpfr_mul);
    }
    friend HighPrecisionReal operator/(const HighPrecisionReal& a, const HighPrecisionReal& b) {
        if (b.is_zero()) {
            throw DomainError("real division by zero");
        }
        return binary(a, b, mpfr_div);
    }
    HighPrecisionReal& operator+=(const HighPrecisionReal& o) { return *this = *this + o; }
    HighPrecisionReal& operator-=(const HighPrecisionReal& o) { return *this = *this - o; }
    HighPrecisionReal& operator*=(const HighPrecisionReal& o) { return *this = *this * o; }
    HighPrecisionReal& operator/=(const HighPrecisionReal& o) { return *this = *this / o; }

    friend bool operator==(const HighPrecisionReal& a, const HighPrecisionReal& b) {
        return mpfr_equal_p(a.v_, b.v_) != 0;
    }
    friend std::partial_ordering operator<=>(const HighPrecisionReal& a, const HighPrecisionReal& b) {
        if (mpfr_unordered_p(a.v_, b.v_)) {
            return std::partial_ordering::unordered;
        }
        const int c = mpfr_cmp(a.v_, b.v_);
        return c < 0 ? std::partial_ordering::less
             : c > 0 ? std::partial_ordering::greater
                     : std::partial_ordering::equivalent;
    }

    friend HighPrecisionReal abs(const HighPrecisionReal& x) {
        HighPrecisionReal out(x);
        mpfr_abs(out.v_, out.v_, MPFR_RNDN);
        return out;
    }
    friend HighPrecisionReal pow(const HighPrecisionReal& x, long e) {
        HighPrecisionReal out(x.digits_);
        mpfr_pow_si(out.v_, x.v_, e, MPFR_RNDN);
        return out;
    }
    friend HighPrecisionReal log(const HighPrecisionReal& x) {
        if (x.sign() <= 0) {
            throw DomainError("log of a non-positive value");
        }
        HighPrecisionReal out(x.digits_);
        mpfr_log(out.v_, x.v_, MPFR_RNDN);
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const HighPrecisionReal& x) { return os << x.to_string(); }

private:
    struct uninitialized {};
    HighPrecisionReal(int digits, uninitialized) : digits_(digits) { mpfr_init2(v_, MPFR_PREC_MIN); }

    static int checked(int digits) {
        if (digits < kMinDigits) {
            throw DomainError("precision below " + std::to_string(kMinDigits) + " digits");
        }
        return digits;
    }

    template <typename Fn>
    static HighPrecisionReal binary(const HighPrecisionReal& a, const HighPrecisionReal& b, Fn fn) {
        HighPrecisionReal out(std::min(a.digits_, b.digits_));
        fn(out.v_, a.v_, b.v_, MPFR_RNDN);
        return out;
    }

    int digits_;
    mpfr_t v_;
};

inline std::string HighPrecisionReal::to_string(int sig_digits) const {
    if (sig_digits < 1) {
        throw DomainError("to_string needs at least one digit");
    }
    if (mpfr_nan_p(v_)) {
        return "nan";
    }
    if (mpfr_inf_p(v_)) {
        return sign() < 0 ? "-inf" : "inf";
    }
    if (is_zero()) {
        return "0";
    }
    mpfr_exp_t exp10 = 0;
    std::unique_ptr<char, void (*)(char*)> raw(
        mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(sig_digits), v_, MPFR_RNDN), mpfr_free_str);
    std::string mant(raw.get());
    std::string sign_str;
    if (mant[0] == '-') {
        sign_str = "-";
        mant.erase(0, 1);
    }
    const long e = static_cast<long>(exp10);
    const long n = static_cast<long>(mant.size());
    if (e > 0 && e <= n) {
        std::string out = sign_str + mant.substr(0, e);
        if (e < n) {
            out += "." + mant.substr(e);
        }
        return out;
    }
    if (e <= 0 && e > -6) {
        return sign_str + "0." + std::string(static_cast<std::size_t>(-e), '0') + mant;
    }
    std::string out = sign_str + mant.substr(0, 1);
    if (n > 1) {
        out += "." + mant.substr(1);
    }
    return out + "e" + std::to_string(e - 1);
}

}  // namespace evenzeta
