#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace novikov {

/// Operand shapes disagree (element length, matrix size, form size).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on input that does not meet its stated precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A nondegenerate form was required but the supplied one is singular.
class DegenerateFormError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Randomized search for a rank-attaining point gave up. Signals a bug, not bad input.
class GenericPointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A claim that must hold under the preconditions was found false during construction.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Algebra file errors. Each is its own class so callers can tell them apart.

class FileFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text; `position` is a byte offset into the input (0 when unknown).
class ParseError : public FileFormatError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : FileFormatError(what + " (at byte " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class IndexOutOfRange : public FileFormatError {
 public:
  using FileFormatError::FileFormatError;
};

class NonSymmetricForm : public FileFormatError {
 public:
  using FileFormatError::FileFormatError;
};

class ZeroDenominator : public FileFormatError {
 public:
  using FileFormatError::FileFormatError;
};

}  // namespace novikov
