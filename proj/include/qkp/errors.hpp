#pragma once

#include <stdexcept>
#include <string>

namespace qkp {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rank or ring-descriptor mismatch between operands.
struct DimensionError : Error {
  using Error::Error;
};

/// Operation requires a mode (q, localized) the object does not have.
struct ModeError : Error {
  using Error::Error;
};

/// Malformed input text, document, or type string.
struct ParseError : Error {
  using Error::Error;
};

/// Valid request that this build does not support (e.g. no product table
/// for the type).
struct UnsupportedError : Error {
  using Error::Error;
};

/// User-supplied data fails a mathematical consistency check
/// (non-commuting operator matrices, broken identity action).
struct InconsistentDataError : Error {
  using Error::Error;
};

/// Operator-polynomial reconstruction hit the degree cap.
struct ReconstructionError : Error {
  using Error::Error;
};

/// A product that must clear denominators did not.
struct NonpolynomialError : Error {
  using Error::Error;
};

/// A quotient well-definedness check failed.  Must never fire on builtin
/// data; firing indicates a corrupted table.
struct TheoremViolationError : Error {
  using Error::Error;
};

/// An argument violates a stated precondition (e.g. translation coroot
/// not strictly antidominant).
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace qkp
