#include "notemap/matrix.hpp"

#include <catch2/catch.hpp>

#include "support/oracle.hpp"

using namespace notemap;

namespace {
Rational r(long n, long d = 1) { return Rational(n, d); }
}  // namespace

TEST_CASE("build_vandermonde lays out descending powers", "[matrix]") {
    SECTION("degree 0 is a single constant column") {
        RMatrix m = build_vandermonde({r(0)}, 0);
        CHECK(m.rows() == 1);
        CHECK(m.cols() == 1);
        CHECK(m.at(0, 0) == r(1));
    }
    SECTION("first row of the worked 4x4 system") {
        RMatrix m = build_vandermonde({r(-7), r(-2), r(2), r(8)}, 3);
        CHECK(m.at(0, 0) == r(-343));
        CHECK(m.at(0, 1) == r(49));
        CHECK(m.at(0, 2) == r(-7));
        CHECK(m.at(0, 3) == r(1));
        CHECK(m.at(3, 0) == r(512));
    }
    SECTION("duplicate nodes duplicate rows") {
        RMatrix m = build_vandermonde({r(0), r(4), r(7), r(0)}, 3);
        for (std::size_t c = 0; c < 4; ++c) CHECK(m.at(0, c) == m.at(3, c));
    }
    SECTION("rational nodes stay exact") {
        RMatrix m = build_vandermonde({r(-5, 2)}, 2);
        CHECK(m.at(0, 0) == r(25, 4));
        CHECK(m.at(0, 1) == r(-5, 2));
        CHECK(m.at(0, 2) == r(1));
    }
}

TEST_CASE("gaussian_solve classifies unique systems", "[matrix]") {
    SECTION("identity") {
        SolveOutcome out = gaussian_solve(RMatrix::identity(3), {r(1), r(2), r(3)});
        REQUIRE(out.kind == SolveKind::Unique);
        CHECK(out.solution == RVector{r(1), r(2), r(3)});
        CHECK(out.rank == 3);
        CHECK(out.free_columns.empty());
    }
    SECTION("the worked augmented-sixth resolution system") {
        RMatrix a = build_vandermonde({r(-7), r(-2), r(2), r(8)}, 3);
        RVector b = {r(-5), r(-2), r(3), r(7)};
        SolveOutcome out = gaussian_solve(a, b);
        REQUIRE(out.kind == SolveKind::Unique);
        // descending powers; constant term 307/675
        CHECK(out.solution == RVector{r(-47, 5400), r(61, 5400), r(3469, 2700), r(307, 675)});
        CHECK(multiply(a, out.solution) == b);

        // cross-check against the independent Lagrange oracle
        auto poly = oracle::lagrange_interpolate(
            {{r(-7), r(-5)}, {r(-2), r(-2)}, {r(2), r(3)}, {r(8), r(7)}});
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(out.solution[3 - i] == poly.coefficient(i));
    }
}

TEST_CASE("gaussian_solve reports rank deficiency with leading powers free", "[matrix]") {
    RMatrix a = build_vandermonde({r(0), r(4), r(7), r(0)}, 3);
    RVector b = {r(0), r(5), r(8), r(0)};
    SolveOutcome out = gaussian_solve(a, b);
    REQUIRE(out.kind == SolveKind::Underdetermined);
    CHECK(out.rank == 3);
    CHECK(out.free_columns == std::vector<std::size_t>{0});  // the cubic column
    CHECK(out.solution[0] == r(0));                          // free parameter pinned to 0
    CHECK(multiply(a, out.solution) == b);                   // still an exact solution
    // with the cubic pinned this is the quadratic -1/28 x^2 + 39/28 x
    CHECK(out.solution == RVector{r(0), r(-1, 28), r(39, 28), r(0)});
}

TEST_CASE("gaussian_solve detects inconsistency", "[matrix]") {
    // duplicate node, contradictory targets
    RMatrix a = build_vandermonde({r(0), r(0)}, 1);
    SolveOutcome out = gaussian_solve(a, {r(1), r(2)});
    CHECK(out.kind == SolveKind::Inconsistent);

    SECTION("dimension mismatch throws") {
        CHECK_THROWS_AS(gaussian_solve(RMatrix::identity(2), {r(1)}), Error);
    }
}

TEST_CASE("determinant small and large paths agree with the product oracle", "[matrix]") {
    CHECK(determinant(RMatrix::identity(4)) == r(1));
    CHECK(determinant(RMatrix::identity(1)) == r(1));

    SECTION("descending Vandermonde over {0,1,2}") {
        // product formula: (0-1)(0-2)(1-2) = -2
        CHECK(oracle::vandermonde_det_product({r(0), r(1), r(2)}) == r(-2));
        CHECK(determinant(build_vandermonde({r(0), r(1), r(2)}, 2)) == r(-2));
    }
    SECTION("two equal rows give zero") {
        CHECK(determinant(build_vandermonde({r(0), r(4), r(7), r(0)}, 3)) == r(0));
    }
    SECTION("non-square throws") {
        CHECK_THROWS_AS(determinant(RMatrix(2, 3)), Error);
    }
    SECTION("cofactor path (n=3) equals elimination path") {
        oracle::Rng rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            RMatrix m(3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = rng.rational(9);
            CHECK(determinant(m) == notemap::detail::det_by_elimination(m));
        }
    }
}

TEST_CASE("cramer_solve_4x4 equals gaussian_solve exactly", "[matrix]") {
    SECTION("identity") {
        RVector x = cramer_solve_4x4(RMatrix::identity(4), {r(1), r(2), r(3), r(4)});
        CHECK(x == RVector{r(1), r(2), r(3), r(4)});
    }
    SECTION("worked system") {
        RMatrix a = build_vandermonde({r(-7), r(-2), r(2), r(8)}, 3);
        RVector b = {r(-5), r(-2), r(3), r(7)};
        CHECK(cramer_solve_4x4(a, b) == gaussian_solve(a, b).solution);
    }
    SECTION("singular and shape errors") {
        RMatrix dup = build_vandermonde({r(0), r(4), r(7), r(0)}, 3);
        CHECK_THROWS_AS(cramer_solve_4x4(dup, {r(0), r(5), r(8), r(0)}), Error);
        CHECK_THROWS_AS(cramer_solve_4x4(RMatrix::identity(3), {r(1), r(2), r(3)}), Error);
    }
    SECTION("random nonsingular systems, bit-for-bit") {
        oracle::Rng rng(17);
        int done = 0;
        while (done < 50) {
            RMatrix a(4, 4);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) a.at(i, j) = rng.rational(20);
            if (determinant(a).is_zero()) continue;
            RVector b = {rng.rational(20), rng.rational(20), rng.rational(20), rng.rational(20)};
            SolveOutcome gauss = gaussian_solve(a, b);
            REQUIRE(gauss.kind == SolveKind::Unique);
            CHECK(cramer_solve_4x4(a, b) == gauss.solution);
            ++done;
        }
    }
}

TEST_CASE("vandermonde determinant property against the product formula", "[matrix][property]") {
    oracle::Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        auto n = static_cast<std::size_t>(rng.integer(1, 6));
        auto nodes = rng.distinct_rationals(n, 12);
        RMatrix v = build_vandermonde(nodes, n - 1);
        CHECK(determinant(v) == oracle::vandermonde_det_product(nodes));
    }
}
