#include "notemap/progression.hpp"

#include <catch2/catch.hpp>

#include "notemap/function_expr.hpp"

using namespace notemap;

namespace {
Rational r(long n, long d = 1) { return Rational(n, d); }

std::vector<Rational> values_of(const NoteSet& s) { return s.values; }
}  // namespace

TEST_CASE("registry carries the printed tables and generic shapes", "[progression]") {
    auto [printed_c, off_c] = resolve_template("I-IV64-V6-I@C");
    REQUIRE(printed_c->chords.size() == 4);
    CHECK(off_c == 0);
    CHECK(printed_c->source == TemplateSource::PrintedPaper);
    CHECK(printed_c->chords[1].representatives == std::vector<Rational>{r(0), r(5), r(8), r(0)});

    auto [neap_c, off_n] = resolve_template("NEAP@C");
    CHECK(off_n == 0);
    CHECK(neap_c->chords[0].representatives == std::vector<Rational>{r(5), r(8), r(1), r(5)});

    SECTION("every template keeps equal cardinality and mod-12 classes") {
        for (const auto& t : list_templates()) {
            REQUIRE(!t.chords.empty());
            std::size_t n = t.chords[0].representatives.size();
            for (const auto& chord : t.chords) {
                CHECK(chord.representatives.size() == n);
                for (const auto& rep : chord.representatives) {
                    CHECK(rep >= r(0));
                    CHECK(rep < r(12));
                }
            }
        }
    }
    SECTION("unknown ids throw") {
        CHECK_THROWS_AS(resolve_template("V-I"), Error);
        CHECK_THROWS_AS(resolve_template("I-IV64-V6-I@H"), Error);
    }
    SECTION("other keys fall back to the generic template") {
        auto [tpl, offset] = resolve_template("I-IV64-V6-I@E");
        CHECK(tpl->source == TemplateSource::Generic);
        CHECK(offset == 4);
        auto [tpl2, offset2] = resolve_template("NEAP@F#");
        CHECK(offset2 == 6);
    }
}

TEST_CASE("realize_progression transposes mod 12", "[progression]") {
    auto [printed_c, zero] = resolve_template("I-IV64-V6-I@C");

    SECTION("offset 0 reproduces the printed C-major sets") {
        auto sets = realize_progression(*printed_c, 0);
        REQUIRE(sets.size() == 4);
        CHECK(values_of(sets[0]) == std::vector<Rational>{r(0), r(4), r(7), r(0)});
        CHECK(values_of(sets[1]) == std::vector<Rational>{r(0), r(5), r(8), r(0)});
        CHECK(values_of(sets[2]) == std::vector<Rational>{r(11), r(2), r(7), r(11)});
        CHECK(values_of(sets[3]) == std::vector<Rational>{r(0), r(4), r(7), r(0)});
        CHECK(sets[0].label == "I");
        CHECK(sets[1].label == "IV64");
    }
    SECTION("offset 12 is the identity") {
        auto base = realize_progression(*printed_c, 0);
        auto octave = realize_progression(*printed_c, 12);
        for (std::size_t i = 0; i < base.size(); ++i)
            CHECK(values_of(base[i]) == values_of(octave[i]));
    }
    SECTION("generic major at offset 2 starts on {2, 6, 9, 2}") {
        auto [generic, off] = resolve_template("I-IV64-V6-I");
        auto sets = realize_progression(*generic, 2);
        CHECK(values_of(sets[0]) == std::vector<Rational>{r(2), r(6), r(9), r(2)});
        // the generic major IV64 in D is {2, 7, 11}: B natural, unlike printed C
        CHECK(values_of(sets[1]) == std::vector<Rational>{r(2), r(7), r(11), r(2)});
    }
    SECTION("realized sets stay inside [0, 12) for any offset") {
        for (int offset : {-7, 3, 11, 25})
            for (const auto& s : realize_progression(*printed_c, offset))
                for (const auto& v : s.values) {
                    CHECK(v >= r(0));
                    CHECK(v < r(12));
                }
    }
}

TEST_CASE("derive_algorithm reproduces the printed progressions", "[progression]") {
    SECTION("printed C-major table") {
        auto [tpl, off] = resolve_template("I-IV64-V6-I@C");
        auto sets = realize_progression(*tpl, 0);
        FunctionAlgorithm alg = derive_algorithm(sets);
        REQUIRE(alg.steps.size() == 3);
        CHECK(alg.steps[0].poly == parse_function_expr("-(1/28)x^2 + (39/28)x"));
        CHECK(alg.steps[1].poly == parse_function_expr("(13/30)x^2 - (119/30)x + 11"));
        CHECK(alg.steps[2].poly == parse_function_expr("-(47/180)x^2 + (59/20)x - 77/90"));

        SECTION("running the derived algorithm reconstructs the sets") {
            auto stages = run_algorithm(alg, sets[0]);
            REQUIRE(stages.size() == sets.size());
            for (std::size_t i = 0; i < sets.size(); ++i)
                CHECK(stages[i].values == sets[i].values);
        }
    }
    SECTION("printed D-major table (inferred sets)") {
        auto [tpl, off] = resolve_template("I-IV64-V6-I@D");
        FunctionAlgorithm alg = derive_algorithm(realize_progression(*tpl, 0));
        CHECK(alg.steps[0].poly == parse_function_expr("(1/84)x^2 + (97/84)x - 5/14"));
        CHECK(alg.steps[1].poly == parse_function_expr("(13/180)x^2 - (1/20)x + 73/90"));
        // printed leading coefficient is +11/120; the exact derivation flips the sign
        CHECK(alg.steps[2].poly == parse_function_expr("-(11/120)x^2 + (43/24)x + 3/10"));
    }
    SECTION("printed C Neapolitan and its natural D transposition") {
        auto [neap_c, offc] = resolve_template("NEAP@C");
        FunctionAlgorithm alg = derive_algorithm(realize_progression(*neap_c, 0));
        CHECK(alg.steps[0].poly == parse_function_expr("(47/84)x^2 - (157/28)x + 337/21"));
        CHECK(alg.steps[1].poly == parse_function_expr("-(1/180)x^2 + (17/20)x - 151/90"));

        auto [neap_d, offd] = resolve_template("NEAP@D");
        FunctionAlgorithm alg_d = derive_algorithm(realize_progression(*neap_d, 0));
        CHECK(alg_d.steps[0].poly == parse_function_expr("(11/84)x^2 - (47/84)x + 3/2"));
        CHECK(alg_d.steps[1].poly == parse_function_expr("(47/120)x^2 - (103/24)x + 129/10"));
    }
    SECTION("two identical sets derive the identity polynomial") {
        NoteSet a;
        a.values = {r(0), r(4), r(7)};
        FunctionAlgorithm alg = derive_algorithm({a, a});
        CHECK(alg.steps[0].poly == RationalPolynomial::identity());
    }
    SECTION("cardinality mismatch propagates") {
        NoteSet a, b;
        a.values = {r(0), r(1), r(2), r(3)};
        b.values = {r(0), r(1), r(2)};
        CHECK_THROWS_AS(derive_algorithm({a, b}), Error);
    }
}

TEST_CASE("reconstruction holds for every template and key", "[progression][property]") {
    for (const auto& tpl : list_templates())
        for (int offset : {0, 2, 5, 7, 9}) {
            auto sets = realize_progression(tpl, offset);
            FunctionAlgorithm alg = derive_algorithm(sets);
            auto stages = run_algorithm(alg, sets[0]);
            REQUIRE(stages.size() == sets.size());
            for (std::size_t i = 0; i < sets.size(); ++i)
                CHECK(stages[i].values == sets[i].values);
            // degree bound under default pinning
            for (std::size_t k = 0; k < alg.steps.size(); ++k) {
                std::set<Rational> distinct(sets[k].values.begin(), sets[k].values.end());
                CHECK(alg.steps[k].poly.degree() <= static_cast<int>(distinct.size()) - 1);
            }
        }
}

TEST_CASE("key_letter_offset reads letters and accidentals", "[progression]") {
    CHECK(key_letter_offset("C") == 0);
    CHECK(key_letter_offset("D") == 2);
    CHECK(key_letter_offset("B") == 11);
    CHECK(key_letter_offset("F#") == 6);
    CHECK(key_letter_offset("Bb") == 10);
    CHECK(key_letter_offset("Cb") == 11);  // wraps
    CHECK_THROWS_AS(key_letter_offset("H"), Error);
    CHECK_THROWS_AS(key_letter_offset("C##"), Error);
}
