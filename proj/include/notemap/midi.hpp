#pragma once

// Standard MIDI File (format 0) writer with quarter-tone support. Each
// note-set becomes one quarter-note block chord. Notes on the integer grid
// share channel 0; quarter-tone notes are isolated on rotating channels
// 1-8,10-15 (9 is percussion) so their per-channel pitch bend cannot touch
// the plain notes. Every constant here is a rendering convention of this
// tool, not a property of the mapped material.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "notemap/errors.hpp"
#include "notemap/note_set.hpp"
#include "notemap/rational.hpp"
#include "notemap/score.hpp"

namespace notemap {

struct MidiOptions {
    std::uint8_t velocity = 80;
    std::uint32_t ticks_per_set = 480;  // one quarter note at division 480
};

namespace midi_detail {

inline void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

inline void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

inline void put_vlq(std::vector<std::uint8_t>& out, std::uint32_t v) {
    std::uint8_t bytes[5];
    int n = 0;
    bytes[n++] = static_cast<std::uint8_t>(v & 0x7F);
    while (v >>= 7) bytes[n++] = static_cast<std::uint8_t>((v & 0x7F) | 0x80);
    while (n--) out.push_back(bytes[n]);
}

struct NoteRender {
    int key;        // 60 + m
    int bend;       // 8192 + frac*4096
    bool bent;
};

/// m = nearest integer with ties toward zero, frac = v - m. Values are on
/// the half-semitone grid, so every non-integer value is an exact tie and
/// frac lands in {-1/2, +1/2}.
inline NoteRender render_note(const Rational& v) {
    mpz_class den = v.denominator();
    if (den != 1 && den != 2)
        fail(ErrorCode::OffGrid, "pitch value " + v.to_string() + " is off the MIDI grid");
    mpz_class m = v.trunc();
    Rational frac = v - Rational(m, mpz_class(1));
    NoteRender out;
    if (m < -200 || m > 200)
        fail(ErrorCode::KeyOutOfRange, "value " + v.to_string() + " leaves the key range");
    long key = 60 + m.get_si();
    if (key < 0 || key > 127)
        fail(ErrorCode::KeyOutOfRange, "value " + v.to_string() + " leaves the key range");
    out.key = static_cast<int>(key);
    out.bent = !frac.is_zero();
    int bend_offset = 0;
    if (out.bent) bend_offset = frac == Rational(1, 2) ? 2048 : -2048;
    out.bend = 8192 + bend_offset;
    return out;
}

}  // namespace midi_detail

/// Serialize the score's sets as SMF format 0, division 480.
inline std::vector<std::uint8_t> export_midi(const Score& score, const MidiOptions& options = {}) {
    using namespace midi_detail;

    static const int bent_pool[] = {1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15};
    std::size_t next_bent = 0;
    std::set<int> preambled;

    std::vector<std::uint8_t> track;
    auto control = [&](int ch, std::uint8_t cc, std::uint8_t value) {
        put_vlq(track, 0);
        track.push_back(static_cast<std::uint8_t>(0xB0 | ch));
        track.push_back(cc);
        track.push_back(value);
    };

    for (const auto& set : score.sets) {
        std::vector<NoteRender> notes;
        std::vector<int> channels;
        for (const auto& v : set.values) {
            NoteRender n = render_note(v);
            int ch = 0;
            if (n.bent) {
                ch = bent_pool[next_bent];
                next_bent = (next_bent + 1) % (sizeof(bent_pool) / sizeof(bent_pool[0]));
                if (preambled.insert(ch).second) {
                    // RPN 0,0: pitch bend range = 2 semitones
                    control(ch, 101, 0);
                    control(ch, 100, 0);
                    control(ch, 6, 2);
                    control(ch, 38, 0);
                }
                put_vlq(track, 0);
                track.push_back(static_cast<std::uint8_t>(0xE0 | ch));
                track.push_back(static_cast<std::uint8_t>(n.bend & 0x7F));
                track.push_back(static_cast<std::uint8_t>((n.bend >> 7) & 0x7F));
            }
            notes.push_back(n);
            channels.push_back(ch);
        }
        for (std::size_t i = 0; i < notes.size(); ++i) {
            put_vlq(track, 0);
            track.push_back(static_cast<std::uint8_t>(0x90 | channels[i]));
            track.push_back(static_cast<std::uint8_t>(notes[i].key));
            track.push_back(options.velocity);
        }
        for (std::size_t i = 0; i < notes.size(); ++i) {
            put_vlq(track, i == 0 ? options.ticks_per_set : 0);
            track.push_back(static_cast<std::uint8_t>(0x80 | channels[i]));
            track.push_back(static_cast<std::uint8_t>(notes[i].key));
            track.push_back(0);
        }
    }
    // end of track
    put_vlq(track, 0);
    track.push_back(0xFF);
    track.push_back(0x2F);
    track.push_back(0x00);

    std::vector<std::uint8_t> out;
    out.insert(out.end(), {0x4D, 0x54, 0x68, 0x64});  // MThd
    put_u32(out, 6);
    put_u16(out, 0);    // format 0
    put_u16(out, 1);    // one track
    put_u16(out, 480);  // division
    out.insert(out.end(), {0x4D, 0x54, 0x72, 0x6B});  // MTrk
    put_u32(out, static_cast<std::uint32_t>(track.size()));
    out.insert(out.end(), track.begin(), track.end());
    return out;
}

}  // namespace notemap
