#pragma once

#include <stdexcept>
#include <string>

namespace dspec {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad field parameters, malformed polynomials, zero inverses.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An operation was called outside the parameter regime it is defined for
// (e.g. q = 1 mod 4 where q = 3 mod 4 is required).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A closed-form count did not divide exactly; its inputs are inconsistent.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

// An O(q^2) oracle was requested for a field larger than the run budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace dspec
