#pragma once

#include <stdexcept>
#include <string>

namespace hyperfuzzy {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A NaN or infinite real was offered where a finite one is required.
class InvalidNumber : public Error {
 public:
  using Error::Error;
};

/// Strict-mode max/min was asked to order two incomparable values.
class IncomparableError : public Error {
 public:
  using Error::Error;
};

/// A membership grade, cut level or tolerance lies outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation guard failed (e.g. algebraic sum exceeding 1, shadow of a 1-D set).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Unknown command, operation, suite or set name; malformed invocation.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperfuzzy
