#pragma once

#include <array>
#include <cerrno>
#include <cstdlib>
#include <string>
#include <string_view>

#include "notemap/errors.hpp"
#include "notemap/rational.hpp"

namespace notemap {

/// Enharmonic preference when turning a value back into a note name.
enum class SpellingPolicy { Sharps, Flats };

/// Letter + accidental + octave. The accidental is a rational semitone
/// offset on the half-semitone grid, one of
/// {-2, -3/2, -1, -1/2, 0, 1/2, 1, 3/2, 2}.
struct PitchSpelling {
    char letter = 'C';      // A-G
    Rational accidental;    // semitone offset
    int octave = 4;

    friend bool operator==(const PitchSpelling& a, const PitchSpelling& b) {
        return a.letter == b.letter && a.accidental == b.accidental && a.octave == b.octave;
    }
};

/// Semitone distance of the natural letter from C within one octave.
inline int letter_base(char letter) {
    switch (letter) {
        case 'C': return 0;
        case 'D': return 2;
        case 'E': return 4;
        case 'F': return 5;
        case 'G': return 7;
        case 'A': return 9;
        case 'B': return 11;
        default:
            fail(ErrorCode::UnknownLetter,
                 std::string("pitch letter must be A-G, got '") + letter + "'");
    }
}

inline bool is_valid_accidental(const Rational& a) {
    static const std::array<Rational, 9> allowed = {
        Rational(-2), Rational(-3, 2), Rational(-1), Rational(-1, 2), Rational(0),
        Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
    for (const auto& v : allowed)
        if (v == a) return true;
    return false;
}

/// value = base(letter) + accidental + 12*(octave - 4); C4 anchors at 0.
inline Rational spelling_to_value(const PitchSpelling& s) {
    return Rational(letter_base(s.letter)) + s.accidental + Rational(12 * (s.octave - 4));
}

/// Canonical accidental text. Parse-only aliases: x = ##, * = +q, ** = +3q.
inline std::string accidental_text(const Rational& a) {
    if (a == Rational(0)) return "";
    if (a == Rational(1)) return "#";
    if (a == Rational(2)) return "##";
    if (a == Rational(-1)) return "b";
    if (a == Rational(-2)) return "bb";
    if (a == Rational(1, 2)) return "+q";
    if (a == Rational(-1, 2)) return "-q";
    if (a == Rational(3, 2)) return "+3q";
    if (a == Rational(-3, 2)) return "-3q";
    fail(ErrorCode::MalformedAccidental, "accidental off the half-semitone grid: " + a.to_string());
}

inline std::string format_pitch(const PitchSpelling& s) {
    return std::string(1, s.letter) + accidental_text(s.accidental) + std::to_string(s.octave);
}

/// Token grammar: LETTER ACCIDENTAL? OCTAVE, longest accidental match,
/// octave digit mandatory (negative octaves as e.g. C-1).
inline PitchSpelling parse_pitch(std::string_view text) {
    if (text.empty()) fail(ErrorCode::UnknownLetter, "empty pitch token");
    PitchSpelling out;
    out.letter = text[0];
    letter_base(out.letter);  // validates
    std::size_t pos = 1;

    struct Alt {
        std::string_view token;
        Rational value;
    };
    // longest-match order
    static const std::array<Alt, 10> alts = {{
        {"+3q", Rational(3, 2)},
        {"-3q", Rational(-3, 2)},
        {"+q", Rational(1, 2)},
        {"-q", Rational(-1, 2)},
        {"**", Rational(3, 2)},
        {"##", Rational(2)},
        {"bb", Rational(-2)},
        {"*", Rational(1, 2)},
        {"#", Rational(1)},
        {"x", Rational(2)},
    }};
    bool matched = false;
    for (const auto& alt : alts) {
        // all accidental alternatives end in a non-digit, so a negative
        // octave like C-3 cannot be swallowed by "-3q"
        if (text.substr(pos, alt.token.size()) == alt.token) {
            out.accidental = alt.value;
            pos += alt.token.size();
            matched = true;
            break;
        }
    }
    if (!matched && text.substr(pos, 1) == "b") {
        out.accidental = Rational(-1);
        ++pos;
    }

    std::string_view rest = text.substr(pos);
    if (rest.empty())
        fail(ErrorCode::MissingOctave, "pitch token '" + std::string(text) + "' has no octave");
    std::size_t i = 0;
    if (rest[0] == '-') ++i;
    std::size_t digit_start = i;
    while (i < rest.size() && rest[i] >= '0' && rest[i] <= '9') ++i;
    bool well_formed = i > digit_start && i == rest.size();
    if (!well_formed) {
        bool octave_like = (rest[0] >= '0' && rest[0] <= '9') || rest[0] == '-';
        if (octave_like)
            fail(ErrorCode::MissingOctave, "malformed octave in '" + std::string(text) + "'");
        fail(ErrorCode::MalformedAccidental,
             "unrecognized accidental in '" + std::string(text) + "'");
    }
    errno = 0;
    long oct = std::strtol(std::string(rest).c_str(), nullptr, 10);
    if (errno != 0 || oct > 100000 || oct < -100000)
        fail(ErrorCode::MissingOctave, "octave out of range in '" + std::string(text) + "'");
    out.octave = static_cast<int>(oct);
    return out;
}

/// v mod 12 into [0, 12).
inline Rational pitch_class(const Rational& v) {
    Rational q = v / Rational(12);
    return v - Rational(12) * Rational(q.floor(), mpz_class(1));
}

/// Inverse of spelling_to_value on the half-semitone grid. Naturals are
/// preferred when the class is natural; otherwise the policy picks the
/// enharmonic side. Values with denominator not in {1, 2} are OffGrid.
inline PitchSpelling value_to_spelling(const Rational& v, SpellingPolicy policy) {
    mpz_class den = v.denominator();
    if (den != 1 && den != 2)
        fail(ErrorCode::OffGrid,
             "value " + v.to_string() + " is finer than quarter-tone notation");

    static const std::array<int, 7> bases = {0, 2, 4, 5, 7, 9, 11};
    static const std::array<char, 7> letters = {'C', 'D', 'E', 'F', 'G', 'A', 'B'};
    Rational pc = pitch_class(v);

    char letter = 0;
    Rational accidental;
    if (den == 1) {
        for (std::size_t i = 0; i < bases.size(); ++i)
            if (pc == Rational(bases[i])) {
                letter = letters[i];
                accidental = Rational(0);
            }
        if (letter == 0) {
            // chromatic class: letter below + sharp, or letter above + flat
            for (std::size_t i = 0; i < bases.size(); ++i) {
                if (policy == SpellingPolicy::Sharps && pc == Rational(bases[i] + 1)) {
                    letter = letters[i];
                    accidental = Rational(1);
                }
                if (policy == SpellingPolicy::Flats && pc == Rational(bases[i] - 1)) {
                    letter = letters[i];
                    accidental = Rational(-1);
                }
            }
        }
    } else {
        // quarter-tone class: sharps pick the nearest natural below with +q/+3q,
        // flats the nearest natural above with -q/-3q (wrapping to C above 11.5).
        if (policy == SpellingPolicy::Sharps) {
            for (std::size_t i = bases.size(); i-- > 0;) {
                Rational diff = pc - Rational(bases[i]);
                if (diff == Rational(1, 2) || diff == Rational(3, 2)) {
                    letter = letters[i];
                    accidental = diff;
                    break;
                }
            }
        } else {
            for (std::size_t i = 0; i < bases.size(); ++i) {
                Rational diff = Rational(bases[i]) - pc;
                if (diff == Rational(1, 2) || diff == Rational(3, 2)) {
                    letter = letters[i];
                    accidental = -diff;
                    break;
                }
            }
            if (letter == 0) {  // 10.5 or 11.5 wraps to the C above
                Rational diff = Rational(12) - pc;
                if (diff == Rational(1, 2) || diff == Rational(3, 2)) {
                    letter = 'C';
                    accidental = -diff;
                }
            }
        }
    }
    if (letter == 0)
        fail(ErrorCode::OffGrid, "no spelling for class " + pc.to_string());

    PitchSpelling out;
    out.letter = letter;
    out.accidental = accidental;
    // base + acc + 12*(oct-4) = v, and base + acc === v (mod 12) by construction
    Rational twelfths = (v - Rational(letter_base(letter)) - accidental) / Rational(12);
    out.octave = 4 + static_cast<int>(twelfths.numerator().get_si());
    return out;
}

}  // namespace notemap
