#pragma once

#include <stdexcept>
#include <string>

namespace cfr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A point lies outside [1, v].
class RangeError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A block or column has the wrong number of elements.
class ArityError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// An argument lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Inputs are individually valid but incompatible with each other.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The exact search would exceed its documented size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A construction precondition does not hold.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A generated object disagrees with its closed-form prediction.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace cfr
