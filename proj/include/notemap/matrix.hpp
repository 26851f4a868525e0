#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "notemap/errors.hpp"
#include "notemap/rational.hpp"

namespace notemap {

using RVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RMatrix {
public:
    RMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0)
            fail(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
    }
    RMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows == 0 || cols == 0)
            fail(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
        if (entries_.size() != rows_ * cols_)
            fail(ErrorCode::InvalidArgument, "entry count does not match dimensions");
    }

    static RMatrix identity(std::size_t n) {
        RMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

inline RVector multiply(const RMatrix& a, const RVector& x) {
    if (x.size() != a.cols()) fail(ErrorCode::DimensionMismatch, "vector length != matrix columns");
    RVector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a.at(r, c) * x[c];
    return out;
}

/// Row i = [s_i^M, s_i^(M-1), ..., s_i, 1]: descending powers, one row per
/// node. Duplicate nodes are allowed and simply repeat rows.
inline RMatrix build_vandermonde(const RVector& nodes, std::size_t degree) {
    if (nodes.empty()) fail(ErrorCode::InvalidArgument, "vandermonde needs at least one node");
    RMatrix m(nodes.size(), degree + 1);
    for (std::size_t r = 0; r < nodes.size(); ++r) {
        Rational p(1);
        for (std::size_t c = 0; c <= degree; ++c) {
            m.at(r, degree - c) = p;  // constant column last
            p *= nodes[r];
        }
    }
    return m;
}

enum class SolveKind { Unique, Underdetermined, Inconsistent };

struct SolveOutcome {
    SolveKind kind = SolveKind::Inconsistent;
    RVector solution;                      // exact; free columns hold 0
    std::vector<std::size_t> free_columns; // Underdetermined only, ascending
    std::size_t rank = 0;
};

/// Exact Gauss-Jordan elimination, first nonzero pivot per column.
///
/// Columns are processed constant-term-first (right to left in the
/// descending-power layout), so in rank-deficient interpolation systems the
/// leading-power columns are the ones left free; zeroing them reproduces the
/// highest-order-coefficient-is-the-free-parameter convention.
inline SolveOutcome gaussian_solve(RMatrix a, RVector b) {
    if (a.rows() != b.size())
        fail(ErrorCode::DimensionMismatch, "right-hand side length != matrix rows");
    const std::size_t rows = a.rows(), cols = a.cols();

    std::vector<std::optional<std::size_t>> pivot_row(cols);
    std::size_t next = 0;
    for (std::size_t cc = 0; cc < cols && next < rows; ++cc) {
        std::size_t col = cols - 1 - cc;
        std::size_t found = rows;
        for (std::size_t r = next; r < rows; ++r)
            if (!a.at(r, col).is_zero()) {
                found = r;
                break;
            }
        if (found == rows) continue;  // free column
        a.swap_rows(found, next);
        std::swap(b[found], b[next]);

        Rational inv = Rational(1) / a.at(next, col);
        for (std::size_t c = 0; c < cols; ++c) a.at(next, c) *= inv;
        b[next] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next || a.at(r, col).is_zero()) continue;
            Rational f = a.at(r, col);
            for (std::size_t c = 0; c < cols; ++c) a.at(r, c) -= f * a.at(next, c);
            b[r] -= f * b[next];
        }
        pivot_row[col] = next;
        ++next;
    }

    SolveOutcome out;
    out.rank = next;
    for (std::size_t r = next; r < rows; ++r)
        if (!b[r].is_zero()) {
            out.kind = SolveKind::Inconsistent;
            return out;
        }

    out.solution.assign(cols, Rational(0));
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_row[c])
            out.solution[c] = b[*pivot_row[c]];
        else
            out.free_columns.push_back(c);
    }
    out.kind = out.free_columns.empty() ? SolveKind::Unique : SolveKind::Underdetermined;
    return out;
}

namespace detail {

inline Rational det_by_elimination(RMatrix m) {
    const std::size_t n = m.rows();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            m.swap_rows(pivot, col);
            det = -det;
        }
        det *= m.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col) / m.at(col, col);
            for (std::size_t c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return det;
}

}  // namespace detail

/// Cofactor expansion for n <= 3, elimination beyond.
inline Rational determinant(const RMatrix& m) {
    if (!m.square()) fail(ErrorCode::NotSquare, "determinant of a non-square matrix");
    switch (m.rows()) {
        case 1:
            return m.at(0, 0);
        case 2:
            return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
        case 3:
            return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                   m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                   m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
        default:
            return detail::det_by_elimination(m);
    }
}

/// Determinant-ratio solution x_i = det(A_i) / det(A), the closed-form path
/// for 4x4 systems. Agrees with gaussian_solve exactly on every nonsingular
/// input; kept separate as a cross-check.
inline RVector cramer_solve_4x4(const RMatrix& a, const RVector& b) {
    if (a.rows() != 4 || a.cols() != 4 || b.size() != 4)
        fail(ErrorCode::NotFourByFour, "cramer_solve_4x4 requires a 4x4 system");
    Rational d = determinant(a);
    if (d.is_zero()) fail(ErrorCode::SingularMatrix, "matrix determinant is zero");
    RVector x(4);
    for (std::size_t i = 0; i < 4; ++i) {
        RMatrix ai = a;
        for (std::size_t r = 0; r < 4; ++r) ai.at(r, i) = b[r];
        x[i] = determinant(ai) / d;
    }
    return x;
}

}  // namespace notemap
