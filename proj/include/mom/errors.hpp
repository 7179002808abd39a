#pragma once

#include <stdexcept>
#include <string>

namespace mom {

// Base for every error the library raises on a contract violation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different coefficient rings, or the requested ring cannot
// represent the given beta^2 (e.g. rational ring with non-integer beta^2).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

// Closed-form geometric sum requested for the zero exponent.
class DegenerateExponent : public Error {
 public:
  using Error::Error;
};

// A closed-form coefficient has a vanishing denominator at t = 2^{beta^2}.
class PoleAtCriticalBeta : public Error {
 public:
  using Error::Error;
};

// A leading-order coefficient was requested outside its regime.
class RegimeViolation : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace mom
