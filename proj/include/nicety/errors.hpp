#pragma once

#include <stdexcept>
#include <string>

namespace nicety {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands have incompatible shapes: variable counts, map arities,
/// matrix dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// A value-level precondition failed (order of the zero polynomial,
/// exponent out of range, zero denominator, ...).
struct DomainError : Error {
    using Error::Error;
};

struct SingularMatrixError : DomainError {
    using DomainError::DomainError;
};

/// A configured resource budget was exhausted.  Carries which budget.
struct BudgetError : Error {
    enum class Kind { terms, work };
    Kind kind;
    BudgetError(Kind k, const std::string& what) : Error(what), kind(k) {}
};

/// Lexical or syntax error in a text input, with 1-based position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int l, int c, const std::string& msg)
        : Error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg),
          line(l),
          column(c) {}
};

struct UnknownFixtureError : Error {
    using Error::Error;
};

/// An internal consistency check failed.  Seeing this means a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

} // namespace nicety
