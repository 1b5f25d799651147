#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and reduced
// fractions, backed by GMP.

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace evenzeta {

using Integer = mpz_class;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
public:
    DivisionByZero() : DomainError("rational division by zero") {}
};

/// Reduced fraction num/den with den > 0. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(Integer v) : q_(std::move(v)) {}

    Rational(Integer num, Integer den) {
        if (den == 0) {
            throw DivisionByZero();
        }
        q_.get_num() = std::move(num);
        q_.get_den() = std::move(den);
        q_.canonicalize();
    }

    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Accepts "a", "a/b" and plain decimals such as "-1.25".
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return from_raw(-q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw DivisionByZero();
        }
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { return from_raw(::abs(q_)); }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const { return q_.get_str(10); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    static Rational from_raw(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

    mpq_class q_{0};
};

inline Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw DomainError("empty rational literal");
    }
    const auto fail = [&] { return DomainError("malformed rational literal: '" + s + "'"); };
    const auto valid_int = [](std::string_view d) {
        std::size_t i = (!d.empty() && (d[0] == '-' || d[0] == '+')) ? 1 : 0;
        if (i == d.size()) {
            return false;
        }
        for (; i < d.size(); ++i) {
            if (d[i] < '0' || d[i] > '9') {
                return false;
            }
        }
        return true;
    };
    const auto to_int = [](std::string_view d) {
        if (!d.empty() && d[0] == '+') {
            d.remove_prefix(1);
        }
        return Integer(std::string(d), 10);
    };

    if (const auto slash = s.find('/'); slash != std::string::npos) {
        const std::string_view num = std::string_view(s).substr(0, slash);
        const std::string_view den = std::string_view(s).substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
            throw fail();
        }
        return Rational(to_int(num), to_int(den));
    }
    if (const auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        const std::string frac = s.substr(dot + 1);
        if (frac.empty() || !valid_int(frac) || frac[0] == '-' || frac[0] == '+') {
            throw fail();
        }
        const bool negative = !whole.empty() && whole[0] == '-';
        if (whole.empty() || whole == "-" || whole == "+") {
            whole += "0";
        }
        if (!valid_int(whole)) {
            throw fail();
        }
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Integer magnitude = ::abs(to_int(whole)) * scale + Integer(frac, 10);
        return Rational(negative ? Integer(-magnitude) : magnitude, scale);
    }
    if (!valid_int(s)) {
        throw fail();
    }
    return Rational(to_int(s));
}

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Integer binomial(unsigned long n, unsigned long j) {
    if (j > n) {
        throw DomainError("binomial: j > n");
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, j);
    return out;
}

inline Integer pow2(unsigned long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

}  // namespace evenzeta
