#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "placirc/bigint.hpp"
#include "placirc/circulant.hpp"
#include "placirc/recurrence.hpp"

namespace placirc {

// Closed forms for circulants built from plastic-family sequences
// (first row T(0), ..., T(n-1), seeds a, b, c). All of them reduce the whole
// matrix to three integers:
//   x = T(n) - a,   y = T(n+1) - b,   z = T(n-1) - c + a,
// the coefficients of the rank-collapsed row sum
// sum_k T(k) w^{-jk} = (x + y*u + z*u^2) / (u^3 + u^2 - 1) at u = w^{-j}.

// Eigenvalue lambda_j of the order-n circulant, j in [0, n), directly from
// the three-integer closed form; O(1) big-integer work per eigenvalue.
// Throws UnsupportedFamilyError for non-plastic specs, std::invalid_argument
// for n == 0 or j >= n.
std::complex<double> eig_closed(const RecurrenceSpec& spec, std::size_t n,
                                std::size_t j);

// All n eigenvalues; shares the three integers across j.
std::vector<std::complex<double>> eig_closed_spectrum(const RecurrenceSpec& spec,
                                                      std::size_t n);

// Per-preset eigenvalue formulas with the seed constants folded in the way
// they are usually quoted (e.g. Perrin numerator Q(n)-3 + Q(n+1)u +
// (Q(n-1)+1)u^2). Algebraically the same as eig_closed under the preset's
// seeds; evaluated independently so the folded constants are themselves
// under test. Preset must not be Custom.
std::complex<double> eig_closed_preset(Preset preset, std::size_t n,
                                       std::size_t j);
std::vector<std::complex<double>> eig_closed_preset_spectrum(Preset preset,
                                                             std::size_t n);

// Spectral norm of the order-n circulant as the exact integer
// T(n+4) - T(4): for nonnegative first rows the norm is the plain row sum,
// which telescopes. Throws NonnegativityError when any of T(0)..T(n-1) is
// negative, UnsupportedFamilyError for non-plastic specs.
BigInt norm_closed(const RecurrenceSpec& spec, std::size_t n);

// Ingredients of the determinant closed form at order n: the three integers
// x, y, z above, the roots k, l of x*t^2 + y*t + z = 0, and the exact
// integer denominator (-1)^n * (Q(-n) - Q(n)) built from Perrin terms, which
// equals the product over j of (w^{-3j} + w^{-2j} - 1).
struct DetFactors {
  BigInt x, y, z;
  std::complex<double> k, l;
  BigInt denom;
};

DetFactors det_factors(const RecurrenceSpec& spec, std::size_t n);

struct DetValue {
  std::complex<double> value;
  // True when x == 0 made the quadratic-root route (k*l = z/x) unusable and
  // the value was instead assembled as the product of the per-eigenvalue
  // closed-form numerators over the exact denominator.
  bool used_fallback = false;
  // Magnitude of the largest intermediate in the evaluation (>= 1). The
  // absolute float error is proportional to this, not to |value|: when the
  // determinant is (near-)zero the big power terms cancel, so a meaningful
  // relative error divides by max(|expected|, scale) rather than |expected|.
  double scale = 1.0;
};

// Determinant of the order-n circulant:
//   det = x^n * (1 - k^n - l^n + (k*l)^n) / ((-1)^n * (Q(-n) - Q(n))).
// The imaginary part of `value` is roundoff; callers compare the real part
// against det_exact. Plastic-only; throws ZeroDenominatorError if the exact
// denominator is 0 (not reached for any tested n).
DetValue det_closed(const RecurrenceSpec& spec, std::size_t n);

// Preset determinant formulas with the folded seed constants evaluated as
// quoted (e.g. the Perrin discriminant Q(n+1)^2 - 4Q(n)Q(n-1) - 4Q(n) +
// 12Q(n-1) + 12); same contract as det_closed.
DetValue det_closed_preset(Preset preset, std::size_t n);

// Both sides of the denominator identity at order n:
//   product over j of (w^{-3j} + w^{-2j} - 1)  ==  (-1)^n * (Q(-n) - Q(n)).
// The product side is floating point; `exact` is the integer side. The exact
// side is nonzero for all n >= 1 (tested through 512), which is what makes
// det_closed total.
struct DenominatorIdentity {
  std::complex<double> product;
  BigInt exact;
};

DenominatorIdentity denominator_identity(std::size_t n);

}  // namespace placirc
