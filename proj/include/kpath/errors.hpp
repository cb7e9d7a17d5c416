#pragma once

#include <stdexcept>
#include <string>

namespace kpath {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text; `line` is 1-based.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/// A precondition on arguments was violated.
struct ParameterError : Error {
    using Error::Error;
};

/// An operation would exceed a configured work or size budget.
struct BudgetError : Error {
    using Error::Error;
};

/// Structural requirement violated (cycles where none are allowed,
/// duplicate parallel transitions, nondeterminism, ...).
struct StructureError : Error {
    using Error::Error;
};

/// A result failed its own internal validation; indicates a bug.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace kpath
