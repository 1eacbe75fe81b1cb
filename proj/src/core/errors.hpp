#pragma once

#include <stdexcept>
#include <string>

namespace pmx {

// Error taxonomy; each class maps onto one C API status code / CLI exit class.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument or out-of-domain evaluation (left derivative at x=0,
// unknown element label, decrement below zero, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed or invalid input: parse failures, violated file-format or
// constructor preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

// Empty base polytope, or an absent result (no equilibrium found by search).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Enumeration budget exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A certified invariant failed at runtime. Signals a bug in this library,
// never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pmx
