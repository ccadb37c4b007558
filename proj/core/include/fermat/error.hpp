#pragma once

#include <stdexcept>
#include <string>

namespace fermat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a mathematical precondition (non-prime r, zero
/// element, non-coprime pair, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Operands were built over different rings.
class ContextMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// The curve y^2 = x(x-A)(x+B) is singular (ABC = 0).
class DegenerateCurve : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A computation would leave the sizes this library is meant to handle
/// (integer factorization budget, search bounds).
class DeskScaleExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace fermat
