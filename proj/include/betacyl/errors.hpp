#ifndef BETACYL_ERRORS_HPP
#define BETACYL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace betacyl {

// Base for all library errors so callers can catch the whole family at once.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (beta spec strings, words, rationals).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A precondition on a numeric argument was violated (beta <= 1, x outside
// [0,1), n out of the supported window, ...).
struct OutOfRangeError : Error {
    explicit OutOfRangeError(const std::string& msg) : Error(msg) {}
};

struct EmptyWordError : Error {
    EmptyWordError() : Error("word must contain at least one digit") {}
};

// The defining equation 1 = sum w_i x^-i has its solution below 1
// (digit sum zero), so there is no admissible root.
struct RootBelowOneError : Error {
    explicit RootBelowOneError(const std::string& msg) : Error(msg) {}
};

struct NotSelfAdmissibleError : Error {
    explicit NotSelfAdmissibleError(const std::string& msg) : Error(msg) {}
};

struct InvalidRangeError : Error {
    explicit InvalidRangeError(const std::string& msg) : Error(msg) {}
};

struct ScheduleTooSmallError : Error {
    explicit ScheduleTooSmallError(const std::string& msg) : Error(msg) {}
};

// Raised when a digit (or comparison) cannot be decided even at the working
// precision cap.  digit_index is the first undecidable position (0-based),
// or -1 when the failure is not tied to a digit.
struct PrecisionExhaustedError : Error {
    long digit_index;
    long precision_reached;
    PrecisionExhaustedError(const std::string& msg, long index, long p)
        : Error(msg), digit_index(index), precision_reached(p) {}
};

} // namespace betacyl

#endif
