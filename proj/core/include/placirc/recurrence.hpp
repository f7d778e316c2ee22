#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "placirc/bigint.hpp"
#include "placirc/errors.hpp"

namespace placirc {

enum class Preset { Cordonnier, Perrin, VanDerLaan, Custom };

std::string_view to_string(Preset preset);

// A third-order linear recurrence T(n+3) = p*T(n+2) + q*T(n+1) + r*T(n) with
// integer coefficients and seeds T(0) = a, T(1) = b, T(2) = c.
//
// The plastic family is (p, q, r) = (0, 1, 1); its members share the
// characteristic polynomial x^3 - x - 1 and therefore every closed form in
// closed_form.hpp. The three classical members are provided as presets:
//   Cordonnier    seeds (1, 1, 1)
//   Perrin        seeds (3, 0, 2)
//   van der Laan  seeds (0, 1, 0)
struct RecurrenceSpec {
  std::int64_t p = 0;
  std::int64_t q = 1;
  std::int64_t r = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  Preset preset = Preset::Custom;

  static RecurrenceSpec cordonnier();
  static RecurrenceSpec perrin();
  static RecurrenceSpec van_der_laan();
  static RecurrenceSpec from_preset(Preset preset);
  // Plastic-family member with custom seeds.
  static RecurrenceSpec plastic(std::int64_t a, std::int64_t b, std::int64_t c);
  // Fully general coefficients and seeds.
  static RecurrenceSpec general(std::int64_t p, std::int64_t q, std::int64_t r,
                                std::int64_t a, std::int64_t b, std::int64_t c);

  bool is_plastic() const { return p == 0 && q == 1 && r == 1; }

  // Stable human-readable tag used in reports and CLI metadata, e.g.
  // "perrin" or "seeds(2,-1,4)" or "general(p=1,q=2,r=3;a=0,b=1,c=2)".
  std::string label() const;
};

// Term T(n) for any integer n. Negative (and small positive) indices are
// reached by stepping the recurrence backwards,
// T(n) = (T(n+3) - p*T(n+2) - q*T(n+1)) / r, which requires r != 0
// (NonReversibleError) and exact divisibility at every step
// (InexactBackstepError). The plastic family has r = 1 and is always
// reversible.
BigInt term_at(const RecurrenceSpec& spec, std::int64_t n);

// All terms T(lo), ..., T(hi) inclusive; same preconditions as term_at when
// lo < 0. Throws std::invalid_argument when lo > hi.
std::vector<BigInt> terms_range(const RecurrenceSpec& spec, std::int64_t lo,
                                std::int64_t hi);

// Term T(n) for n >= 0 via binary powering of the 3x3 companion matrix;
// O(log n) matrix products instead of O(n) additions. Agrees with term_at
// everywhere (tested), exists so the iteration has an independent witness
// and to make deep single-term queries cheap.
BigInt term_at_fast(const RecurrenceSpec& spec, std::int64_t n);

// Roots of the plastic characteristic polynomial f(x) = x^3 - x - 1: the real
// plastic number rho = 1.3247..., the conjugate pair beta / gamma = conj(beta)
// with Im(beta) > 0, and the derivative values f'(root) = 3*root^2 - 1 that
// appear as Binet denominators.
struct CubicRoots {
  double rho;
  std::complex<double> beta;
  std::complex<double> gamma() const { return std::conj(beta); }
  std::complex<double> fprime_rho;
  std::complex<double> fprime_beta;
  std::complex<double> fprime_gamma() const { return std::conj(fprime_beta); }
};

CubicRoots plastic_roots();

// Binet evaluation of a plastic-family member: T(n) as the real part of
// sum over roots of w(root) * root^n, where the weights w are determined by
// the seeds. n >= 0. Throws UnsupportedFamilyError for non-plastic specs.
// Exact up to floating-point roundoff; callers compare against term_at with
// a relative tolerance.
double binet(const RecurrenceSpec& spec, std::int64_t n);

// The published closed form for the van der Laan numbers evaluates, at index
// n, to R(n-1) rather than R(n): it is the plastic fundamental solution
// (seeds 0, 0, 1) without the index shift that the seeds (0, 1, 0) require.
// This function evaluates that form literally so the one-off shift can be
// demonstrated; binet() applies the correct seed weights.
double binet_vdl_as_printed(std::int64_t n);

// Partial sum S(n) = T(0) + ... + T(n) by direct accumulation, n >= 0.
// Plastic-only, like the identity it is paired with.
BigInt sum_first(const RecurrenceSpec& spec, std::int64_t n);

// The same partial sum via the telescoped identity S(n) = T(n+5) - T(4)
// (T(n) = T(n+3) - T(n+1) telescopes, and T(4) = T(1) + T(2)). Holds for
// every plastic-family seed triple; throws UnsupportedFamilyError otherwise.
BigInt sum_first_identity(const RecurrenceSpec& spec, std::int64_t n);

// Constant term closing the square-sum identity
//   sum_{k=0}^{n} T(k)^2 = T(n+2)^2 - T(n-1)^2 - T(n-3)^2 + C.
// `anchor` is solved from the identity at n = 3 and makes it hold for all
// n >= 0 (established against brute force); `printed` is the published
// constant 2a(a-c) - (b+c)^2, which equals the anchor only when b = c = 0.
// The anchor admits the closed form 2a(a-c) + (b-c)^2.
struct SquareSumConstant {
  BigInt anchor;
  BigInt printed;
  bool agree;
};

// Plastic-only.
SquareSumConstant square_sum_constant(const RecurrenceSpec& spec);

// Sum of squares T(0)^2 + ... + T(n)^2 by direct accumulation, n >= 0.
BigInt sum_squares(const RecurrenceSpec& spec, std::int64_t n);

// Square-sum via the identity above with the anchored constant. Plastic-only.
BigInt sum_squares_identity(const RecurrenceSpec& spec, std::int64_t n);

// Square-sum via the identity with the published constant instead; disagrees
// with sum_squares whenever the seeds have (b, c) != (0, 0). Kept evaluable
// so the discrepancy is a reportable fact rather than a comment. Plastic-only.
BigInt sum_squares_identity_printed(const RecurrenceSpec& spec, std::int64_t n);

}  // namespace placirc
