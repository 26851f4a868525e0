#pragma once

// Score document: the JSON interchange format plus the octave-ordering
// realization validator. Serialization is canonical (fixed key order,
// rationals as "p/q" strings, newline-terminated) so identical scores are
// byte-identical.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "notemap/errors.hpp"
#include "notemap/function_expr.hpp"
#include "notemap/mapping.hpp"
#include "notemap/note_set.hpp"
#include "notemap/polynomial.hpp"
#include "notemap/verify.hpp"

namespace notemap {

/// One sounding of a set element: octave_shift is in whole octaves
/// (x12 semitones) and onset is an ordering ordinal, not a duration.
struct RealizationEvent {
    std::size_t set_index = 0;
    std::size_t element_index = 0;
    int octave_shift = 0;
    std::size_t onset = 0;

    friend bool operator==(const RealizationEvent&, const RealizationEvent&) = default;
};

struct ScoreFunction {
    std::string label;
    RationalPolynomial poly;
    std::string from;
    std::string to;
};

struct Score {
    int version = 1;
    std::vector<NoteSet> sets;
    std::vector<ScoreFunction> functions;
    std::vector<RealizationEvent> events;
    std::optional<VerificationReport> report;
};

struct RealizationVerdict {
    struct Violation {
        std::size_t event_index;
        std::string reason;
    };
    bool valid = true;
    std::vector<Violation> violations;
};

/// A set element may only sound octave-shifted after the same element has
/// sounded unshifted (strictly earlier onset). Order of the event list does
/// not matter, only onsets do.
inline RealizationVerdict validate_realization(const std::vector<RealizationEvent>& events,
                                               const std::vector<NoteSet>& sets) {
    for (const auto& e : events) {
        if (e.set_index >= sets.size())
            fail(ErrorCode::BadReference,
                 "event references set " + std::to_string(e.set_index) + " of " +
                     std::to_string(sets.size()));
        if (e.element_index >= sets[e.set_index].size())
            fail(ErrorCode::BadReference,
                 "event references element " + std::to_string(e.element_index) +
                     " of a set with " + std::to_string(sets[e.set_index].size()) + " notes");
    }
    RealizationVerdict verdict;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const auto& e = events[i];
        if (e.octave_shift == 0) continue;
        bool anchored = false;
        for (const auto& other : events)
            if (other.set_index == e.set_index && other.element_index == e.element_index &&
                other.octave_shift == 0 && other.onset < e.onset) {
                anchored = true;
                break;
            }
        if (!anchored) {
            verdict.valid = false;
            verdict.violations.push_back(
                {i, "set " + std::to_string(e.set_index) + " element " +
                        std::to_string(e.element_index) + " sounds shifted at onset " +
                        std::to_string(e.onset) + " before any unshifted statement"});
        }
    }
    return verdict;
}

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json report_to_json(const VerificationReport& r) {
    ordered_json doc;
    doc["expect_known_errata"] = r.expect_known_errata;
    doc["overall"] = r.success ? "SUCCESS" : "FAILURE";
    doc["counts"] = {{"match", r.match_count},
                     {"mismatch", r.mismatch_count},
                     {"derived_only", r.derived_only_count}};
    doc["unexpected_mismatches"] = r.unexpected_mismatches;
    doc["cases"] = ordered_json::array();
    for (const auto& c : r.cases) {
        ordered_json jc;
        jc["id"] = c.id;
        jc["description"] = c.description;
        jc["status"] = case_status_name(c.status);
        if (c.printed) jc["printed"] = *c.printed;
        if (c.derived) jc["derived"] = *c.derived;
        if (!c.diff.empty()) {
            jc["diff"] = ordered_json::array();
            for (const auto& d : c.diff)
                jc["diff"].push_back(
                    {{"slot", d.slot}, {"printed", d.printed}, {"derived", d.derived}});
        }
        if (c.suspected_erratum) jc["suspected_erratum"] = *c.suspected_erratum;
        if (!c.notes.empty()) jc["notes"] = c.notes;
        doc["cases"].push_back(std::move(jc));
    }
    return doc;
}

inline VerificationReport report_from_json(const ordered_json& doc) {
    VerificationReport r;
    r.expect_known_errata = doc.value("expect_known_errata", false);
    r.success = doc.value("overall", "SUCCESS") == std::string("SUCCESS");
    if (doc.contains("counts")) {
        r.match_count = doc["counts"].value("match", 0u);
        r.mismatch_count = doc["counts"].value("mismatch", 0u);
        r.derived_only_count = doc["counts"].value("derived_only", 0u);
    }
    if (doc.contains("unexpected_mismatches"))
        for (const auto& id : doc["unexpected_mismatches"])
            r.unexpected_mismatches.push_back(id.get<std::string>());
    if (doc.contains("cases"))
        for (const auto& jc : doc["cases"]) {
            VerificationCase c;
            c.id = jc.value("id", "");
            c.description = jc.value("description", "");
            std::string status = jc.value("status", "DERIVED_ONLY");
            c.status = status == "MATCH"       ? CaseStatus::Match
                       : status == "MISMATCH"  ? CaseStatus::Mismatch
                                               : CaseStatus::DerivedOnly;
            if (jc.contains("printed")) c.printed = jc["printed"].get<std::string>();
            if (jc.contains("derived")) c.derived = jc["derived"].get<std::string>();
            if (jc.contains("diff"))
                for (const auto& d : jc["diff"])
                    c.diff.push_back({d.value("slot", ""), d.value("printed", ""),
                                      d.value("derived", "")});
            if (jc.contains("suspected_erratum"))
                c.suspected_erratum = jc["suspected_erratum"].get<std::string>();
            if (jc.contains("notes"))
                for (const auto& n : jc["notes"]) c.notes.push_back(n.get<std::string>());
            r.cases.push_back(std::move(c));
        }
    return r;
}

inline Rational rational_from_json(const ordered_json& j) {
    if (!j.is_string()) fail(ErrorCode::InvalidScore, "rationals must be strings");
    auto r = Rational::try_parse(j.get<std::string>());
    if (!r) fail(ErrorCode::InvalidScore, "bad rational '" + j.get<std::string>() + "'");
    return *r;
}

}  // namespace detail

/// Canonical text: 2-space indent, fixed key order, trailing newline.
inline std::string export_json(const Score& score) {
    detail::ordered_json doc;
    doc["version"] = score.version;
    doc["sets"] = detail::ordered_json::array();
    for (const auto& s : score.sets) {
        detail::ordered_json js;
        if (s.label) js["label"] = *s.label;
        js["values"] = detail::ordered_json::array();
        for (const auto& v : s.values) js["values"].push_back(v.to_string());
        if (s.spellings) {
            js["spellings"] = detail::ordered_json::array();
            for (const auto& sp : *s.spellings) js["spellings"].push_back(format_pitch(sp));
        }
        doc["sets"].push_back(std::move(js));
    }
    doc["functions"] = detail::ordered_json::array();
    for (const auto& f : score.functions) {
        detail::ordered_json jf;
        jf["label"] = f.label;
        jf["coefficients"] = detail::ordered_json::array();
        for (const auto& c : f.poly.coefficients()) jf["coefficients"].push_back(c.to_string());
        jf["from"] = f.from;
        jf["to"] = f.to;
        doc["functions"].push_back(std::move(jf));
    }
    if (!score.events.empty()) {
        doc["events"] = detail::ordered_json::array();
        for (const auto& e : score.events)
            doc["events"].push_back({{"set", e.set_index},
                                     {"element", e.element_index},
                                     {"octave_shift", e.octave_shift},
                                     {"onset", e.onset}});
    }
    if (score.report) doc["report"] = detail::report_to_json(*score.report);
    return doc.dump(2) + "\n";
}

/// Inverse of export_json. Checks the structural invariants: spellings match
/// values, function from/to labels exist, and each function maps its source
/// set to its target set exactly.
inline Score import_json(std::string_view text) {
    detail::ordered_json doc =
        detail::ordered_json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object())
        fail(ErrorCode::InvalidScore, "score is not a JSON object");
    Score score;
    score.version = doc.value("version", 0);
    if (score.version != 1)
        fail(ErrorCode::InvalidScore,
             "unsupported score version " + std::to_string(score.version));

    if (doc.contains("sets"))
        for (const auto& js : doc["sets"]) {
            NoteSet s;
            if (js.contains("label")) s.label = js["label"].get<std::string>();
            if (!js.contains("values") || !js["values"].is_array())
                fail(ErrorCode::InvalidScore, "set without a 'values' array");
            for (const auto& v : js["values"]) s.values.push_back(detail::rational_from_json(v));
            if (js.contains("spellings")) {
                std::vector<PitchSpelling> spellings;
                for (const auto& sp : js["spellings"])
                    spellings.push_back(parse_pitch(sp.get<std::string>()));
                if (spellings.size() != s.values.size())
                    fail(ErrorCode::InvalidScore, "spellings length differs from values");
                for (std::size_t i = 0; i < spellings.size(); ++i)
                    if (spelling_to_value(spellings[i]) != s.values[i])
                        fail(ErrorCode::InvalidScore,
                             "spelling " + format_pitch(spellings[i]) + " does not equal value " +
                                 s.values[i].to_string());
                s.spellings = std::move(spellings);
            }
            score.sets.push_back(std::move(s));
        }

    auto find_set = [&](const std::string& label) -> const NoteSet& {
        for (const auto& s : score.sets)
            if (s.label && *s.label == label) return s;
        fail(ErrorCode::InvalidScore, "function references unknown set '" + label + "'");
    };

    if (doc.contains("functions"))
        for (const auto& jf : doc["functions"]) {
            ScoreFunction f;
            f.label = jf.value("label", "");
            if (!jf.contains("coefficients") || !jf["coefficients"].is_array())
                fail(ErrorCode::InvalidScore, "function without a 'coefficients' array");
            std::vector<Rational> coeffs;
            for (const auto& c : jf["coefficients"])
                coeffs.push_back(detail::rational_from_json(c));
            f.poly = RationalPolynomial(std::move(coeffs), /*keep_trailing_zeros=*/true);
            f.from = jf.value("from", "");
            f.to = jf.value("to", "");
            const NoteSet& from = find_set(f.from);
            const NoteSet& to = find_set(f.to);
            if (apply_to_set(f.poly, from).values != to.values)
                fail(ErrorCode::InvalidScore,
                     "function '" + f.label + "' does not map '" + f.from + "' to '" + f.to +
                         "' exactly");
            score.functions.push_back(std::move(f));
        }

    if (doc.contains("events"))
        for (const auto& je : doc["events"]) {
            RealizationEvent e;
            e.set_index = je.value("set", 0u);
            e.element_index = je.value("element", 0u);
            e.octave_shift = je.value("octave_shift", 0);
            e.onset = je.value("onset", 0u);
            if (e.set_index >= score.sets.size() ||
                e.element_index >= score.sets[e.set_index].size())
                fail(ErrorCode::InvalidScore, "event references a missing set element");
            score.events.push_back(e);
        }

    if (doc.contains("report")) score.report = detail::report_from_json(doc["report"]);
    return score;
}

}  // namespace notemap
