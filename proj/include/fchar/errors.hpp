#pragma once

#include <stdexcept>
#include <string>

namespace fchar {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid parameters (bad composition length, l out of range, ...).
struct ParamError : Error {
  using Error::Error;
};

// Arithmetic between polynomials over different variable lists.
struct VarMismatchError : Error {
  using Error::Error;
};

// Specialization would leave the exact Laurent ring
// (fractional exponent with no exact root, non-integer coefficients).
struct SpecializeError : Error {
  using Error::Error;
};

// Malformed serialized input.
struct ParseError : Error {
  using Error::Error;
};

// Random evaluation points turned out degenerate (span failed to
// saturate); the caller should retry with fresh randomness.
struct DegeneracyError : Error {
  using Error::Error;
};

}  // namespace fchar
