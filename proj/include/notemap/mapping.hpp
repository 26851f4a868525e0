#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "notemap/errors.hpp"
#include "notemap/matrix.hpp"
#include "notemap/note_set.hpp"
#include "notemap/polynomial.hpp"
#include "notemap/rational.hpp"

namespace notemap {

/// Which coefficients get forced to zero when the interpolation system is
/// not square. Defaults (both unset) pin the highest indices until the
/// system is square over the distinct nodes, i.e. the minimal-degree
/// interpolant.
struct PinPolicy {
    std::optional<std::size_t> target_degree;          // default: |pairs| - 1
    std::optional<std::set<std::size_t>> pinned_zero;  // default: minimal degree

    bool is_default() const { return !target_degree && !pinned_zero; }
};

struct InterpolationProblem {
    std::vector<std::pair<Rational, Rational>> pairs;  // (s_i, t_i)
    PinPolicy pin;
};

/// Solve f(s_i) = t_i exactly.
///
/// Duplicate s-values must carry equal targets (NotAFunction otherwise).
/// With the default policy the result is the minimal-degree interpolant;
/// with explicit pinning the pinned zeros are retained in the coefficient
/// list so the declared degree stays visible. Explicit constraints that
/// admit no solution raise OverconstrainedInconsistent.
inline RationalPolynomial interpolate(const InterpolationProblem& problem) {
    if (problem.pairs.empty()) fail(ErrorCode::EmptyInput, "no interpolation pairs");

    std::map<Rational, Rational> graph;
    for (const auto& [s, t] : problem.pairs) {
        auto [it, inserted] = graph.emplace(s, t);
        if (!inserted && it->second != t)
            fail(ErrorCode::NotAFunction,
                 "node " + s.to_string() + " maps to both " + it->second.to_string() +
                     " and " + t.to_string());
    }
    const std::size_t distinct = graph.size();

    const std::size_t target_degree =
        problem.pin.target_degree.value_or(problem.pairs.size() - 1);

    std::set<std::size_t> pinned;
    if (problem.pin.pinned_zero) {
        pinned = *problem.pin.pinned_zero;
        for (std::size_t idx : pinned)
            if (idx > target_degree)
                fail(ErrorCode::InvalidArgument,
                     "pinned index " + std::to_string(idx) + " exceeds target degree " +
                         std::to_string(target_degree));
    } else {
        // pin highest indices until the unknown count equals the number of
        // distinct nodes
        for (std::size_t idx = target_degree; idx + 1 > distinct && idx > 0; --idx)
            pinned.insert(idx);
    }

    std::vector<std::size_t> unknowns;  // descending power, mirroring the matrix layout
    for (std::size_t c = target_degree + 1; c-- > 0;)
        if (!pinned.count(c)) unknowns.push_back(c);
    if (unknowns.empty()) {
        for (const auto& [s, t] : problem.pairs)
            if (!t.is_zero())
                fail(ErrorCode::OverconstrainedInconsistent,
                     "every coefficient is pinned but targets are nonzero");
        return RationalPolynomial(std::vector<Rational>(target_degree + 1),
                                  /*keep_trailing_zeros=*/true);
    }

    RMatrix a(problem.pairs.size(), unknowns.size());
    RVector b;
    b.reserve(problem.pairs.size());
    for (std::size_t r = 0; r < problem.pairs.size(); ++r) {
        const Rational& s = problem.pairs[r].first;
        for (std::size_t c = 0; c < unknowns.size(); ++c)
            a.at(r, c) = Rational::pow(s, static_cast<unsigned long>(unknowns[c]));
        b.push_back(problem.pairs[r].second);
    }

    SolveOutcome outcome = gaussian_solve(std::move(a), std::move(b));
    if (outcome.kind == SolveKind::Inconsistent)
        fail(ErrorCode::OverconstrainedInconsistent,
             "no polynomial satisfies the pairs under the given degree/pinning");

    std::vector<Rational> coeffs(target_degree + 1);
    for (std::size_t c = 0; c < unknowns.size(); ++c)
        coeffs[unknowns[c]] = outcome.solution[c];
    // pinned slots stay zero
    return RationalPolynomial(std::move(coeffs), /*keep_trailing_zeros=*/!problem.pin.is_default());
}

/// Pair up two equal-cardinality sets elementwise, in listed order.
inline std::vector<std::pair<Rational, Rational>> make_pairs(const NoteSet& from,
                                                             const NoteSet& to) {
    if (from.size() != to.size())
        fail(ErrorCode::CardinalityMismatch,
             "sets have sizes " + std::to_string(from.size()) + " and " +
                 std::to_string(to.size()));
    std::vector<std::pair<Rational, Rational>> pairs;
    pairs.reserve(from.size());
    for (std::size_t i = 0; i < from.size(); ++i)
        pairs.emplace_back(from.values[i], to.values[i]);
    return pairs;
}

/// Elementwise application; order and cardinality preserved.
inline NoteSet apply_to_set(const RationalPolynomial& f, const NoteSet& s) {
    NoteSet out;
    out.values.reserve(s.values.size());
    for (const auto& v : s.values) out.values.push_back(f(v));
    return out;
}

/// Ordered pipeline of polynomials applied set-to-set.
struct FunctionAlgorithm {
    struct Step {
        std::string label;
        RationalPolynomial poly;
    };
    std::vector<Step> steps;

    void add_step(std::string label, RationalPolynomial poly) {
        for (const auto& s : steps)
            if (s.label == label)
                fail(ErrorCode::InvalidArgument, "duplicate step label '" + label + "'");
        steps.push_back({std::move(label), std::move(poly)});
    }
};

/// result[0] = start, result[k] = step_k(result[k-1]); length = steps + 1.
inline std::vector<NoteSet> run_algorithm(const FunctionAlgorithm& alg, const NoteSet& start) {
    std::vector<NoteSet> out;
    out.reserve(alg.steps.size() + 1);
    out.push_back(start);
    for (const auto& step : alg.steps) out.push_back(apply_to_set(step.poly, out.back()));
    return out;
}

/// All pairwise differences s_j - s_i for i < j, lexicographic (i, j).
inline std::vector<Rational> intervals(const NoteSet& s) {
    if (s.size() < 2)
        fail(ErrorCode::TooFew, "interval list needs at least two notes");
    std::vector<Rational> out;
    out.reserve(s.size() * (s.size() - 1) / 2);
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            out.push_back(s.values[j] - s.values[i]);
    return out;
}

}  // namespace notemap
