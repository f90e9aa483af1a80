#pragma once

#include <stdexcept>
#include <string>

namespace rpq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched vector lengths, grids or tensor ranks.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// A spacelike segment where a timelike or null one is required.
class CausalityError : public Error {
 public:
  using Error::Error;
};

/// Time step violates the CFL bound of an explicit scheme.
class StabilityError : public Error {
 public:
  using Error::Error;
};

class GaugeViolationError : public Error {
 public:
  using Error::Error;
};

/// A solver failed to produce a result meeting its own checks.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (path tables, CSV files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rpq
