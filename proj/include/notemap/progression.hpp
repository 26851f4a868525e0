#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "notemap/errors.hpp"
#include "notemap/mapping.hpp"
#include "notemap/note_set.hpp"
#include "notemap/pitch.hpp"
#include "notemap/rational.hpp"

namespace notemap {

enum class TemplateSource { PrintedPaper, Generic };

/// Named chord progression as mod-12 representative sets. All chords share
/// one cardinality so consecutive sets can be mapped functionally.
struct ProgressionTemplate {
    struct Chord {
        std::string figure;
        std::vector<Rational> representatives;  // pitch classes in [0, 12)
    };
    std::string name;
    std::vector<Chord> chords;
    TemplateSource source = TemplateSource::Generic;
};

namespace detail {

inline ProgressionTemplate make_template(std::string name, TemplateSource source,
                                         std::vector<std::pair<const char*, std::vector<long>>> chords) {
    ProgressionTemplate t;
    t.name = std::move(name);
    t.source = source;
    for (auto& [figure, reps] : chords) {
        ProgressionTemplate::Chord c;
        c.figure = figure;
        for (long v : reps) c.representatives.emplace_back(v);
        t.chords.push_back(std::move(c));
    }
    return t;
}

}  // namespace detail

/// The registry. The two printed keys are stored verbatim (they disagree
/// about the IV64 color: C uses {0,5,8}, D uses the major {2,7,11}); the
/// generic templates carry the regular transposable shapes.
inline const std::vector<ProgressionTemplate>& list_templates() {
    static const std::vector<ProgressionTemplate> registry = {
        detail::make_template("I-IV64-V6-I@C", TemplateSource::PrintedPaper,
                              {{"I", {0, 4, 7, 0}},
                               {"IV64", {0, 5, 8, 0}},
                               {"V6", {11, 2, 7, 11}},
                               {"I", {0, 4, 7, 0}}}),
        detail::make_template("I-IV64-V6-I@D", TemplateSource::PrintedPaper,
                              {{"I", {2, 6, 9, 2}},
                               {"IV64", {2, 7, 11, 2}},
                               {"V6", {1, 4, 9, 1}},
                               {"I", {2, 6, 9, 2}}}),
        detail::make_template("NEAP@C", TemplateSource::PrintedPaper,
                              {{"II6b", {5, 8, 1, 5}},
                               {"V64", {2, 7, 11, 2}},
                               {"I", {0, 4, 7, 0}}}),
        detail::make_template("NEAP@D", TemplateSource::Generic,  // natural transposition
                              {{"II6b", {7, 10, 3, 7}},
                               {"V64", {4, 9, 1, 4}},
                               {"I", {2, 6, 9, 2}}}),
        detail::make_template("I-IV64-V6-I", TemplateSource::Generic,
                              {{"I", {0, 4, 7, 0}},
                               {"IV64", {0, 5, 9, 0}},
                               {"V6", {11, 2, 7, 11}},
                               {"I", {0, 4, 7, 0}}}),
        detail::make_template("I-iv64-V6-I", TemplateSource::Generic,  // borrowed iv color
                              {{"I", {0, 4, 7, 0}},
                               {"iv64", {0, 5, 8, 0}},
                               {"V6", {11, 2, 7, 11}},
                               {"I", {0, 4, 7, 0}}}),
        detail::make_template("NEAP", TemplateSource::Generic,
                              {{"II6b", {5, 8, 1, 5}},
                               {"V64", {2, 7, 11, 2}},
                               {"I", {0, 4, 7, 0}}}),
    };
    return registry;
}

/// Key letter (optionally #/b) to semitone offset from C.
inline int key_letter_offset(std::string_view key) {
    if (key.empty()) fail(ErrorCode::UnknownTemplate, "empty key letter");
    int base = letter_base(static_cast<char>(key[0]));
    std::string_view rest = key.substr(1);
    if (rest == "")
        ;
    else if (rest == "#")
        base += 1;
    else if (rest == "b")
        base -= 1;
    else
        fail(ErrorCode::UnknownTemplate, "bad key '" + std::string(key) + "'");
    return (base % 12 + 12) % 12;
}

/// Resolve a template id: an exact registry name first (covers the printed
/// "@C"/"@D" tables); otherwise "NAME@KEY" falls back to the generic NAME
/// transposed by the key offset.
inline std::pair<const ProgressionTemplate*, int> resolve_template(std::string_view id) {
    for (const auto& t : list_templates())
        if (t.name == id) return {&t, 0};
    auto at = id.rfind('@');
    if (at != std::string_view::npos) {
        std::string base(id.substr(0, at));
        int offset = key_letter_offset(id.substr(at + 1));
        for (const auto& t : list_templates())
            if (t.name == base) return {&t, offset};
    }
    fail(ErrorCode::UnknownTemplate, "no progression template '" + std::string(id) + "'");
}

/// Transpose every representative by key_offset, reduced mod 12. Labels
/// carry the figure names.
inline std::vector<NoteSet> realize_progression(const ProgressionTemplate& t, int key_offset) {
    std::vector<NoteSet> out;
    out.reserve(t.chords.size());
    for (const auto& chord : t.chords) {
        NoteSet s;
        s.label = chord.figure;
        for (const auto& rep : chord.representatives)
            s.values.push_back(pitch_class(rep + Rational(key_offset)));
        out.push_back(std::move(s));
    }
    return out;
}

/// Interpolate consecutive sets into a pipeline f1, f2, ... such that
/// running it from sets[0] reproduces sets[1..] exactly.
inline FunctionAlgorithm derive_algorithm(const std::vector<NoteSet>& sets,
                                          const PinPolicy& pin = {}) {
    if (sets.size() < 2)
        fail(ErrorCode::InvalidArgument, "need at least two sets to derive an algorithm");
    FunctionAlgorithm alg;
    for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
        InterpolationProblem p{make_pairs(sets[i], sets[i + 1]), pin};
        alg.add_step("f" + std::to_string(i + 1), interpolate(p));
    }
    return alg;
}

}  // namespace notemap
