#pragma once

#include <stdexcept>
#include <string>

namespace tnla {

/// Base class for all tnla errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A BD grid violates its invariants (negative multiplier, nonpositive
/// pivot, or a non-finite entry).
struct InvalidBd : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// Neville elimination required a row exchange, produced a negative
/// multiplier, or a nonpositive pivot.
struct NotTotallyNonnegative : Error {
    using Error::Error;
};

struct NodesNotSorted : Error {
    using Error::Error;
};

struct NegativeNode : Error {
    using Error::Error;
};

/// Some x_i + y_j <= 0 in a Cauchy node pair.
struct SingularPair : Error {
    using Error::Error;
};

struct BadRange : Error {
    using Error::Error;
};

struct DuplicateNodes : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct NotSymmetric : Error {
    using Error::Error;
};

/// Internal nonnegativity of the bidiagonal reduction was violated.
/// This is a bug trap, not a domain error.
struct ReductionFailure : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

/// An intermediate left the binary64 range.
struct Overflow : Error {
    using Error::Error;
};

/// hp_spectrum failed to stabilize after doubling the precision twice.
struct PrecisionNotReached : Error {
    using Error::Error;
};

/// Malformed matrix/vector file; carries 1-based line and column.
struct ParseError : Error {
    ParseError(const std::string& msg, long line, long column)
        : Error(msg + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line(line),
          column(column) {}
    long line;
    long column;
};

}  // namespace tnla
