#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "notemap/rational.hpp"

namespace notemap {

/// f(n) = sum c_i n^i, coefficients ascending (index i holds c_i).
///
/// An empty coefficient list is the zero polynomial. Ordinary construction
/// trims trailing zeros; interpolation with explicit pinning keeps them so
/// the declared degree stays visible. Equality is mathematical (trailing
/// zeros never matter).
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs, bool keep_trailing_zeros = false)
        : coeffs_(std::move(coeffs)) {
        if (!keep_trailing_zeros)
            while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    static RationalPolynomial constant(Rational c) {
        return RationalPolynomial(std::vector<Rational>{std::move(c)});
    }
    /// The polynomial n (handy as the identity mapping).
    static RationalPolynomial identity() {
        return RationalPolynomial({Rational(0), Rational(1)});
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Highest stored index; -1 for the zero polynomial. With pinned
    /// trailing zeros retained this is the declared degree, not the
    /// mathematical one.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Highest index with a nonzero coefficient; -1 for zero.
    int math_degree() const {
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            if (!coeffs_[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    Rational coefficient(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    /// Exact Horner evaluation.
    Rational operator()(const Rational& n) const {
        if (coeffs_.empty()) return Rational(0);
        Rational acc = coeffs_.back();
        for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * n + coeffs_[i];
        return acc;
    }

    RationalPolynomial trimmed() const {
        return RationalPolynomial(coeffs_);  // ctor trims
    }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a.coefficient(i) != b.coefficient(i)) return false;
        return true;
    }
    friend bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) {
        return !(a == b);
    }

private:
    std::vector<Rational> coeffs_;
};

inline RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> c(std::max(a.coefficients().size(), b.coefficients().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return RationalPolynomial(std::move(c));
}

inline RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coefficients().size() + b.coefficients().size() - 1);
    for (std::size_t i = 0; i < a.coefficients().size(); ++i)
        for (std::size_t j = 0; j < b.coefficients().size(); ++j)
            c[i + j] += a.coefficient(i) * b.coefficient(j);
    return RationalPolynomial(std::move(c));
}

/// compose(outer, inner)(n) = outer(inner(n)), by Horner over polynomials.
inline RationalPolynomial compose(const RationalPolynomial& outer, const RationalPolynomial& inner) {
    const auto& c = outer.coefficients();
    if (c.empty()) return {};
    RationalPolynomial acc = RationalPolynomial::constant(c.back());
    for (std::size_t i = c.size() - 1; i-- > 0;)
        acc = acc * inner + RationalPolynomial::constant(c[i]);
    return acc;
}

/// Denominators of the non-integer coefficients, reported leading
/// coefficient first. Integer coefficients are excluded; an all-integer
/// polynomial yields ([], 1, 1, 0).
struct DenominatorProfile {
    std::vector<mpz_class> denominators;  // descending coefficient order
    mpz_class gcd = 1;
    mpz_class lcm = 1;
    std::size_t distinct_count = 0;
};

inline DenominatorProfile denominator_profile(const RationalPolynomial& p) {
    DenominatorProfile out;
    std::set<mpz_class> distinct;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        mpz_class den = c[i].denominator();
        if (den == 1) continue;
        out.denominators.push_back(den);
        distinct.insert(den);
    }
    out.distinct_count = distinct.size();
    if (!out.denominators.empty()) {
        out.gcd = out.denominators.front();
        out.lcm = out.denominators.front();
        for (std::size_t i = 1; i < out.denominators.size(); ++i) {
            mpz_gcd(out.gcd.get_mpz_t(), out.gcd.get_mpz_t(), out.denominators[i].get_mpz_t());
            mpz_lcm(out.lcm.get_mpz_t(), out.lcm.get_mpz_t(), out.denominators[i].get_mpz_t());
        }
    }
    return out;
}

}  // namespace notemap
