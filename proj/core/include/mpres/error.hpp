#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mpres {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands disagree on length, ambient dimension n, or matrix shape.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Operands live over different coefficient fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// Structurally invalid input (bad family, non-prime modulus, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A brute-force enumeration would exceed its size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// Invariant violation that indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mpres
