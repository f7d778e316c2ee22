#pragma once

#include <stdexcept>
#include <string>

namespace placirc {

// Base class for domain errors raised by the library. Programmer errors
// (out-of-range indices, empty rows, malformed configuration values) use the
// standard std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Backward extension requested for a recurrence whose trailing coefficient is
// zero, so T(n) cannot be recovered from the three terms above it.
class NonReversibleError : public Error {
 public:
  using Error::Error;
};

// A backward step T(n) = (T(n+3) - p*T(n+2) - q*T(n+1)) / r did not divide
// exactly; the requested seeds do not extend to an integer sequence.
class InexactBackstepError : public Error {
 public:
  using Error::Error;
};

// Operation defined only for the plastic family (p, q, r) = (0, 1, 1).
class UnsupportedFamilyError : public Error {
 public:
  using Error::Error;
};

// Closed-form spectral norm requested for a matrix whose first row has a
// negative entry; the row-sum formula is only an equality for nonnegative
// rows.
class NonnegativityError : public Error {
 public:
  using Error::Error;
};

// The exact integer denominator of the determinant closed form vanished
// (never observed for n <= 512; kept as a guarded impossibility).
class ZeroDenominatorError : public Error {
 public:
  using Error::Error;
};

// Invalid verification-suite configuration (e.g. n_max = 0 or trials < 0).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace placirc
