#pragma once

#include <stdexcept>
#include <string>

namespace congruence {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the domain of an operation (range violations, degenerate
/// geometry, inconsistent invariants).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands live in different rings or prime fields.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A randomized oracle could not find a general-position configuration
/// within its retry budget.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace congruence
