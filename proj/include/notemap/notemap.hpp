#pragma once

// Umbrella header: exact-rational note-set mapping, interpolation,
// progressions, claim verification, score I/O, and MIDI export.

#include "notemap/errors.hpp"
#include "notemap/function_expr.hpp"
#include "notemap/mapping.hpp"
#include "notemap/matrix.hpp"
#include "notemap/midi.hpp"
#include "notemap/note_set.hpp"
#include "notemap/pitch.hpp"
#include "notemap/polynomial.hpp"
#include "notemap/progression.hpp"
#include "notemap/rational.hpp"
#include "notemap/score.hpp"
#include "notemap/verify.hpp"
