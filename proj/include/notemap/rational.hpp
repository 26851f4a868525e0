#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "notemap/errors.hpp"

namespace notemap {

/// Exact fraction over arbitrary-precision integers; the universal scalar.
/// Always canonical: denominator > 0 and gcd(|num|, den) = 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, integers are rationals
    Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// floor(num/den) as an integer.
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    /// Integer part truncated toward zero.
    mpz_class trunc() const {
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    static Rational pow(const Rational& base, unsigned long exp) {
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), base.v_.get_num().get_mpz_t(), exp);
        mpz_pow_ui(d.get_mpz_t(), base.v_.get_den().get_mpz_t(), exp);
        return Rational(n, d);
    }

    /// Canonical text: "p" for integers, "p/q" otherwise.
    std::string to_string() const { return v_.get_str(); }

    /// Accepts a signed integer, a `p/q` fraction, or a terminating decimal.
    /// Decimals convert exactly (2.50 -> 5/2). Anything else -> nullopt.
    static std::optional<Rational> try_parse(std::string_view text);

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; v_.canonicalize(); return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; v_.canonicalize(); return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; v_.canonicalize(); return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class v_;
};

inline std::optional<Rational> Rational::try_parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '-') {
        negative = true;
        ++pos;
    }
    auto digits = [&](std::string& out) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') out += text[pos++];
        return pos > start;
    };
    std::string whole;
    if (!digits(whole)) return std::nullopt;

    mpz_class num(whole), den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::string d;
        if (!digits(d) || pos != text.size()) return std::nullopt;
        den = mpz_class(d);
        if (den == 0) return std::nullopt;
    } else if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::string frac;
        if (!digits(frac) || pos != text.size()) return std::nullopt;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        num = mpz_class(whole) * den + mpz_class(frac);
    } else if (pos != text.size()) {
        return std::nullopt;
    }
    if (negative) num = -num;
    return Rational(num, den);
}

}  // namespace notemap
