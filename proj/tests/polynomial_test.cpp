#include "notemap/polynomial.hpp"

#include <catch2/catch.hpp>

#include "notemap/function_expr.hpp"

using namespace notemap;

namespace {
Rational r(long n, long d = 1) { return Rational(n, d); }
RationalPolynomial poly(std::vector<Rational> c) { return RationalPolynomial(std::move(c)); }
}  // namespace

TEST_CASE("evaluation is exact Horner", "[polynomial]") {
    RationalPolynomial f = poly({r(4), r(1)});  // n + 4
    CHECK(f(r(-10)) == r(-6));

    RationalPolynomial zero;
    CHECK(zero(r(123)) == r(0));
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);

    // the printed Figure-1 quartic-free cubic k(n)
    RationalPolynomial k = poly({r(-35, 176), r(1105, 924), r(5, 1232), r(-1, 924)});
    CHECK(k(r(-7)) == r(-8));
    CHECK(k(r(1)) == r(1));
    CHECK(k(r(7)) == r(8));
    CHECK(k(r(15)) == r(15));
    CHECK(k(r(5)) == r(885, 154));  // NOT 15: rules out a 5 in the source set

    // the quadratic with constant 11 sends 5 to 2
    RationalPolynomial f2 = poly({r(11), r(-119, 30), r(13, 30)});
    CHECK(f2(r(5)) == r(2));
    CHECK(f2(r(-5, 2)) == r(189, 8));  // rational arguments stay exact
}

TEST_CASE("trailing zeros trim on normal construction, persist when kept", "[polynomial]") {
    RationalPolynomial trimmed = poly({r(1), r(2), r(0), r(0)});
    CHECK(trimmed.degree() == 1);

    RationalPolynomial pinned({r(0), r(39, 28), r(-1, 28), r(0)}, /*keep_trailing_zeros=*/true);
    CHECK(pinned.degree() == 3);       // declared degree stays visible
    CHECK(pinned.math_degree() == 2);
    CHECK(pinned == poly({r(0), r(39, 28), r(-1, 28)}));  // equality is mathematical
}

TEST_CASE("compose substitutes polynomials", "[polynomial]") {
    RationalPolynomial f = poly({r(-5), r(1)});      // n - 5
    RationalPolynomial g = poly({r(6), r(-1)});      // -n + 6
    RationalPolynomial gf = compose(g, f);           // g(f(n)) = -(n-5)+6 = -n+11
    CHECK(gf == poly({r(11), r(-1)}));

    RationalPolynomial sq = poly({r(0), r(0), r(1)});  // n^2
    CHECK(compose(sq, f)(r(7)) == r(4));               // (7-5)^2
    CHECK(compose(f, RationalPolynomial::identity()) == f);
}

TEST_CASE("denominator_profile excludes integer coefficients", "[polynomial]") {
    SECTION("worked cubic with constant 307/675") {
        RationalPolynomial f =
            poly({r(307, 675), r(3469, 2700), r(61, 5400), r(-47, 5400)});
        DenominatorProfile p = denominator_profile(f);
        REQUIRE(p.denominators.size() == 4);  // leading coefficient first
        CHECK(p.denominators[0] == 5400);
        CHECK(p.denominators[1] == 5400);
        CHECK(p.denominators[2] == 2700);
        CHECK(p.denominators[3] == 675);
        CHECK(p.gcd == 675);
        CHECK(p.lcm == 5400);
        CHECK(p.distinct_count == 3);
    }
    SECTION("quadratic with integer constant 11") {
        RationalPolynomial f2 = poly({r(11), r(-119, 30), r(13, 30)});
        DenominatorProfile p = denominator_profile(f2);
        CHECK(p.denominators == std::vector<mpz_class>{30, 30});
        CHECK(p.gcd == 30);
        CHECK(p.lcm == 30);
        CHECK(p.distinct_count == 1);
    }
    SECTION("integer polynomial yields the empty profile") {
        DenominatorProfile p = denominator_profile(poly({r(4), r(1)}));
        CHECK(p.denominators.empty());
        CHECK(p.gcd == 1);
        CHECK(p.lcm == 1);
        CHECK(p.distinct_count == 0);
    }
}

TEST_CASE("parse_function_expr reads the worked function texts", "[expr]") {
    CHECK(parse_function_expr("n - 5") == poly({r(-5), r(1)}));
    CHECK(parse_function_expr("-n + 6") == poly({r(6), r(-1)}));
    CHECK(parse_function_expr("2n") == poly({r(0), r(2)}));
    CHECK(parse_function_expr("n + 1") == poly({r(1), r(1)}));
    CHECK(parse_function_expr("n/2") == poly({r(0), r(1, 2)}));
    CHECK(parse_function_expr("(1/2)n") == poly({r(0), r(1, 2)}));
    CHECK(parse_function_expr("1/2n") == poly({r(0), r(1, 2)}));
    CHECK(parse_function_expr("x") == poly({r(0), r(1)}));
    CHECK(parse_function_expr("7") == poly({r(7)}));
    CHECK(parse_function_expr("0") == RationalPolynomial());
    CHECK(parse_function_expr("2.5n") == poly({r(0), r(5, 2)}));
    CHECK(parse_function_expr("3 * n^2") == poly({r(0), r(0), r(3)}));
    CHECK(parse_function_expr("n + n") == poly({r(0), r(2)}));     // like terms combine
    CHECK(parse_function_expr("n^2 - n^2") == RationalPolynomial());

    CHECK(parse_function_expr("(-1/924)n^3 + (5/1232)n^2 + (1105/924)n - 35/176") ==
          poly({r(-35, 176), r(1105, 924), r(5, 1232), r(-1, 924)}));
    CHECK(parse_function_expr("(1/450)n^3 + (7/450)n^2 + (223/225)n - 239/225") ==
          poly({r(-239, 225), r(223, 225), r(7, 450), r(1, 450)}));
    // the ambiguous printed "121/24x" reads as (121/24)x under this grammar
    CHECK(parse_function_expr("59/120x^2 - 121/24x + 271/20") ==
          poly({r(271, 20), r(-121, 24), r(59, 120)}));
}

TEST_CASE("parse_function_expr rejects non-polynomials and irrationals", "[expr]") {
    auto code_of = [](const char* text) {
        try {
            parse_function_expr(text);
        } catch (const Error& e) {
            return e.code();
        }
        throw std::runtime_error("expected a parse failure");
    };
    CHECK(code_of("n^-1") == ErrorCode::NonPolynomial);
    CHECK(code_of("n^1.5") == ErrorCode::NonPolynomial);
    CHECK(code_of("pi") == ErrorCode::IrrationalLiteral);
    CHECK(code_of("sqrt + 1") == ErrorCode::IrrationalLiteral);
    CHECK(code_of("") == ErrorCode::SyntaxError);
    CHECK(code_of("n +") == ErrorCode::SyntaxError);
    CHECK(code_of("3*") == ErrorCode::SyntaxError);
    CHECK(code_of("1/0") == ErrorCode::SyntaxError);
    CHECK(code_of("n n") == ErrorCode::SyntaxError);
    CHECK(code_of("(3") == ErrorCode::SyntaxError);
}

TEST_CASE("format_polynomial round-trips through the parser", "[expr]") {
    std::vector<RationalPolynomial> cases = {
        poly({r(-5), r(1)}),
        poly({r(6), r(-1)}),
        poly({r(0), r(1, 2)}),
        poly({r(-35, 176), r(1105, 924), r(5, 1232), r(-1, 924)}),
        poly({r(0), r(39, 28), r(-1, 28)}),
        poly({r(11), r(-119, 30), r(13, 30)}),
        poly({r(-1), r(0), r(1)}),
        poly({r(0), r(-1)}),
        poly({r(7)}),
        RationalPolynomial(),
    };
    for (const auto& p : cases) {
        std::string text = format_polynomial(p);
        INFO("formatted: " << text);
        CHECK(parse_function_expr(text) == p);
    }

    SECTION("frozen renderings") {
        CHECK(format_polynomial(poly({r(-5), r(1)})) == "n - 5");
        CHECK(format_polynomial(poly({r(6), r(-1)})) == "-n + 6");
        CHECK(format_polynomial(poly({r(0), r(2)})) == "2n");
        CHECK(format_polynomial(RationalPolynomial()) == "0");
        CHECK(format_polynomial(poly({r(0), r(39, 28), r(-1, 28)}), 'x') ==
              "-(1/28)x^2 + (39/28)x");
        CHECK(format_polynomial(poly({r(-239, 225), r(223, 225), r(7, 450), r(1, 450)})) ==
              "(1/450)n^3 + (7/450)n^2 + (223/225)n - 239/225");
    }
}
