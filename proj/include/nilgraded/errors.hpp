#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilgraded {

/// Base of every error thrown by the library. The C API maps each subclass
/// onto its own status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or dimension-mismatched arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A model identifier or numeric parameter outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an object that does not meet its precondition
/// (non-central quotient element, non-cocycle, failed grading certificate).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotNilpotentError : public Error {
 public:
  using Error::Error;
};

/// Parse failure in the structure-equation language, with a 1-based position.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace nilgraded
