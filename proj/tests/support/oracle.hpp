#pragma once

// Test-only oracles, deliberately independent of the library's solve path:
// interpolation via Lagrange basis expansion (the library uses Vandermonde +
// elimination), determinants via the product formula, random inputs from a
// fixed-seed generator so failures reproduce.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "notemap/polynomial.hpp"
#include "notemap/rational.hpp"

namespace oracle {

using notemap::Rational;
using notemap::RationalPolynomial;

/// Minimal-degree interpolant through the distinct (s, t) pairs, by summing
/// expanded Lagrange basis polynomials. Duplicate nodes must agree.
inline RationalPolynomial lagrange_interpolate(
    const std::vector<std::pair<Rational, Rational>>& pairs) {
    std::map<Rational, Rational> graph;
    for (const auto& [s, t] : pairs) {
        auto [it, inserted] = graph.emplace(s, t);
        if (!inserted && it->second != t) throw std::runtime_error("oracle: not a function");
    }
    std::vector<Rational> nodes;
    for (const auto& [s, t] : graph) nodes.push_back(s);

    std::vector<Rational> acc(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::vector<Rational> basis = {Rational(1)};
        Rational denom(1);
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (i == j) continue;
            // basis *= (x - nodes[j])
            std::vector<Rational> next(basis.size() + 1);
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d] += basis[d] * (-nodes[j]);
                next[d + 1] += basis[d];
            }
            basis = std::move(next);
            denom *= nodes[i] - nodes[j];
        }
        Rational w = graph.at(nodes[i]) / denom;
        for (std::size_t d = 0; d < basis.size(); ++d) acc[d] += w * basis[d];
    }
    return RationalPolynomial(std::move(acc));
}

/// Determinant of the descending-power Vandermonde over the given nodes:
/// prod over i<j of (x_i - x_j).
inline Rational vandermonde_det_product(const std::vector<Rational>& nodes) {
    Rational prod(1);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) prod *= nodes[i] - nodes[j];
    return prod;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(engine_);
    }

    /// Rational with |numerator| <= mag and denominator in [1, mag].
    Rational rational(long mag = 100) {
        return Rational(integer(-mag, mag), integer(1, mag));
    }

    /// Distinct rational nodes, numerators/denominators bounded by mag.
    std::vector<Rational> distinct_rationals(std::size_t count, long mag = 100) {
        std::vector<Rational> out;
        while (out.size() < count) {
            Rational candidate = rational(mag);
            bool fresh = true;
            for (const auto& v : out)
                if (v == candidate) fresh = false;
            if (fresh) out.push_back(candidate);
        }
        return out;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace oracle
