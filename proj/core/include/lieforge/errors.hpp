#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieforge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands whose dimensions do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Arguments that violate an operation's precondition (zero eigenvector,
/// singular witness, wrong multivector grade, missing catalog parameter ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Structure constants that fail the Jacobi identity where a Lie algebra is
/// required.
class NotLieAlgebra : public Error {
 public:
  using Error::Error;
};

/// Expression evaluated outside its domain (division by zero, fractional
/// power of a non-positive base, non-finite intermediate).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed expression text. `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lieforge
