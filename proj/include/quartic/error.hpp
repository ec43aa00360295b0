#pragma once

#include <stdexcept>
#include <string>

namespace quartic {

// Base of everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad JSON, wrong arity, non-unimodular matrix, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A multiplication table failed an associativity check.
class NotAssociative : public Error {
 public:
  using Error::Error;
};

// A precondition relating several objects failed (resolvent identity, cubic ring mismatch).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// Something that the mathematics guarantees cannot happen did happen.
class InternalDefect : public Error {
 public:
  using Error::Error;
};

// Numerical oracle failures.
class Degenerate : public Error {
 public:
  using Error::Error;
};

class ToleranceNotMet : public Error {
 public:
  using Error::Error;
};

}  // namespace quartic
