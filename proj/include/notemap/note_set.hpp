#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "notemap/errors.hpp"
#include "notemap/pitch.hpp"
#include "notemap/rational.hpp"

namespace notemap {

/// Ordered list of rational pitch values. Duplicates are allowed and
/// meaningful (octave-extension chords repeat the root). Spellings, when
/// present, run parallel to values and must agree with them.
struct NoteSet {
    std::vector<Rational> values;
    std::optional<std::vector<PitchSpelling>> spellings;
    std::optional<std::string> label;

    std::size_t size() const { return values.size(); }
};

enum class SetFormat { Numeric, Spelled };

namespace detail {

inline std::vector<std::string> split_entries(std::string_view body) {
    std::vector<std::string> out;
    std::string current;
    for (char c : body) {
        if (c == ',') {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline bool looks_irrational(const std::string& token) {
    return token == "pi" || token == "e" || token.rfind("sqrt", 0) == 0;
}

}  // namespace detail

/// Grammar: '{' entry (',' entry)* '}' where entry is a pitch token, a
/// signed integer, a p/q fraction, or a terminating decimal. Spellings are
/// kept only when every entry was a pitch token.
inline NoteSet parse_note_set(std::string_view text) {
    std::string s = detail::trim(std::string(text));
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        fail(ErrorCode::MalformedEntry, "note-set must be brace-delimited: " + s);
    std::string body = s.substr(1, s.size() - 2);
    if (detail::trim(body).empty()) fail(ErrorCode::EmptySet, "note-set has no entries");

    NoteSet out;
    std::vector<PitchSpelling> spellings;
    bool all_pitches = true;
    for (const std::string& raw : detail::split_entries(body)) {
        std::string entry = detail::trim(raw);
        if (entry.empty()) fail(ErrorCode::MalformedEntry, "empty entry in note-set");
        if (detail::looks_irrational(entry))
            fail(ErrorCode::IrrationalUnsupported,
                 "'" + entry + "' has no exact rational value; note-sets admit rationals only");
        if (auto r = Rational::try_parse(entry)) {
            out.values.push_back(*r);
            all_pitches = false;
            continue;
        }
        if (entry[0] >= 'A' && entry[0] <= 'G') {
            try {
                PitchSpelling sp = parse_pitch(entry);
                out.values.push_back(spelling_to_value(sp));
                spellings.push_back(sp);
            } catch (const Error& e) {
                fail(ErrorCode::MalformedEntry, "bad note-set entry '" + entry + "' (" + e.what() + ")");
            }
            continue;
        }
        fail(ErrorCode::MalformedEntry, "cannot read note-set entry '" + entry + "'");
    }
    if (all_pitches && spellings.size() == out.values.size()) out.spellings = std::move(spellings);
    return out;
}

/// Numeric mode always round-trips exactly through parse_note_set. Spelled
/// mode is a pure function of (values, policy); values off the
/// half-semitone grid raise OffGrid.
inline std::string format_note_set(const NoteSet& ns, SetFormat mode = SetFormat::Numeric,
                                   SpellingPolicy policy = SpellingPolicy::Sharps) {
    if (ns.values.empty()) fail(ErrorCode::EmptySet, "cannot format an empty note-set");
    std::string out = "{";
    for (std::size_t i = 0; i < ns.values.size(); ++i) {
        if (i) out += ", ";
        if (mode == SetFormat::Numeric)
            out += ns.values[i].to_string();
        else
            out += format_pitch(value_to_spelling(ns.values[i], policy));
    }
    out += "}";
    return out;
}

}  // namespace notemap
