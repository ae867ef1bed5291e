#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qaseries {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition does not hold: FLAT order, non-unit inverse,
// variable-count mismatch, out-of-range variable index, and so on.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An internal invariant was breached. Seeing one of these means a bug in
// the library, not bad input (for example a nonzero linear coefficient
// after preparing an even series).
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Syntax error in an expression, with the 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qaseries
