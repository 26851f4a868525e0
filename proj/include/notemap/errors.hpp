#pragma once

#include <stdexcept>
#include <string>

namespace notemap {

/// Every failure the library reports, one code per spec'd error condition.
enum class ErrorCode {
    // pitch codec
    UnknownLetter,
    MalformedAccidental,
    MissingOctave,
    OffGrid,
    // note-set grammar
    EmptySet,
    MalformedEntry,
    IrrationalUnsupported,
    // exact solver
    DimensionMismatch,
    NotSquare,
    SingularMatrix,
    NotFourByFour,
    // mapping engine
    NotAFunction,
    OverconstrainedInconsistent,
    EmptyInput,
    SyntaxError,
    NonPolynomial,
    IrrationalLiteral,
    TooFew,
    // progressions
    CardinalityMismatch,
    UnknownTemplate,
    // harness
    UnknownCase,
    // score / midi
    BadReference,
    KeyOutOfRange,
    InvalidScore,
    IoError,
    // argument-contract violations (bad dimensions, pin index > degree, ...)
    InvalidArgument,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::UnknownLetter: return "UnknownLetter";
        case ErrorCode::MalformedAccidental: return "MalformedAccidental";
        case ErrorCode::MissingOctave: return "MissingOctave";
        case ErrorCode::OffGrid: return "OffGrid";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::MalformedEntry: return "MalformedEntry";
        case ErrorCode::IrrationalUnsupported: return "IrrationalUnsupported";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NotFourByFour: return "NotFourByFour";
        case ErrorCode::NotAFunction: return "NotAFunction";
        case ErrorCode::OverconstrainedInconsistent: return "OverconstrainedInconsistent";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::NonPolynomial: return "NonPolynomial";
        case ErrorCode::IrrationalLiteral: return "IrrationalLiteral";
        case ErrorCode::TooFew: return "TooFew";
        case ErrorCode::CardinalityMismatch: return "CardinalityMismatch";
        case ErrorCode::UnknownTemplate: return "UnknownTemplate";
        case ErrorCode::UnknownCase: return "UnknownCase";
        case ErrorCode::BadReference: return "BadReference";
        case ErrorCode::KeyOutOfRange: return "KeyOutOfRange";
        case ErrorCode::InvalidScore: return "InvalidScore";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace notemap
