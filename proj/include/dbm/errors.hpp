#pragma once

#include <stdexcept>
#include <string>

namespace dbm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands or inputs of incompatible dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument was violated (lambda outside [0,1], a set
/// that is too small, a singular matrix, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A specification string or input document could not be parsed. The message
/// names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dbm
