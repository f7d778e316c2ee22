#include "placirc/closed_form.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace placirc {

namespace {

using cplx = std::complex<double>;

cplx unit_root_neg_pow(std::size_t n, std::size_t t) {
  return std::polar(1.0, -2.0 * std::numbers::pi *
                             static_cast<double>(t % n) / static_cast<double>(n));
}

// b^e by repeated squaring; keeps integer-exponent semantics (no complex
// log branch cuts) for the K^n, L^n and (KL)^n powers.
cplx cpow_n(cplx b, std::size_t e) {
  cplx r(1.0, 0.0);
  while (e != 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

void require_order(std::size_t n, const char* what) {
  if (n == 0) {
    std::ostringstream msg;
    msg << what << " requires n >= 1";
    throw std::invalid_argument(msg.str());
  }
}

struct Xyz {
  BigInt x, y, z;
};

// The three integers every closed form reduces to:
// x = T(n) - a, y = T(n+1) - b, z = T(n-1) - c + a.
Xyz general_xyz(const RecurrenceSpec& spec, std::size_t n) {
  if (!spec.is_plastic()) {
    std::ostringstream msg;
    msg << "closed forms are defined only for the plastic family "
           "(p,q,r)=(0,1,1); got (p,q,r)=("
        << spec.p << "," << spec.q << "," << spec.r << ")";
    throw UnsupportedFamilyError(msg.str());
  }
  const auto sn = static_cast<std::int64_t>(n);
  const std::vector<BigInt> t = terms_range(spec, sn - 1, sn + 1);
  return Xyz{t[1] - spec.a, t[2] - spec.b, t[0] - spec.c + spec.a};
}

// Per-preset coefficients with the seed constants folded as usually quoted;
// numerically identical to general_xyz under the preset's seeds, evaluated
// separately so the folded constants stay under test.
Xyz preset_xyz(Preset preset, std::size_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  switch (preset) {
    case Preset::Cordonnier: {
      const std::vector<BigInt> p =
          terms_range(RecurrenceSpec::cordonnier(), sn - 1, sn + 1);
      return Xyz{p[1] - 1, p[2] - 1, p[0]};
    }
    case Preset::Perrin: {
      const std::vector<BigInt> q =
          terms_range(RecurrenceSpec::perrin(), sn - 1, sn + 1);
      return Xyz{q[1] - 3, q[2], q[0] + 1};
    }
    case Preset::VanDerLaan: {
      const std::vector<BigInt> r =
          terms_range(RecurrenceSpec::van_der_laan(), sn - 1, sn + 1);
      return Xyz{r[1], r[2] - 1, r[0]};
    }
    case Preset::Custom: break;
  }
  throw std::invalid_argument("preset closed forms require a named preset");
}

// lambda_j = (x + y*w^{-j} + z*w^{-2j}) / (w^{-3j} + w^{-2j} - 1); the
// denominator never vanishes because no root of t^3 + t^2 - 1 has modulus 1.
cplx eval_eig(const Xyz& f, std::size_t n, std::size_t j) {
  const cplx u1 = unit_root_neg_pow(n, j);
  const cplx u2 = unit_root_neg_pow(n, 2 * j);
  const cplx u3 = unit_root_neg_pow(n, 3 * j);
  const cplx num = to_double(f.x) + to_double(f.y) * u1 + to_double(f.z) * u2;
  return num / (u3 + u2 - 1.0);
}

void require_index(std::size_t n, std::size_t j) {
  if (j >= n) {
    std::ostringstream msg;
    msg << "eigenvalue index j=" << j << " out of range for order " << n;
    throw std::invalid_argument(msg.str());
  }
}

// (-1)^n (Q(-n) - Q(n)) over the Perrin sequence: the exact integer value of
// the product of the eigenvalue denominators.
BigInt exact_denominator(std::size_t n) {
  const RecurrenceSpec q = RecurrenceSpec::perrin();
  const auto sn = static_cast<std::int64_t>(n);
  BigInt d = term_at(q, -sn) - term_at(q, sn);
  if (n % 2 != 0) d = -d;
  return d;
}

void fill_kl(DetFactors& f) {
  if (f.x == 0) {
    // The quadratic degenerates; K and L are undefined and the determinant
    // takes the eigenvalue-product fallback instead.
    const double nan = std::numeric_limits<double>::quiet_NaN();
    f.k = f.l = cplx(nan, nan);
    return;
  }
  const BigInt disc = f.y * f.y - 4 * f.x * f.z;
  const double sd = std::sqrt(std::abs(to_double(disc)));
  const cplx root = disc >= 0 ? cplx(sd, 0.0) : cplx(0.0, sd);
  const double two_x = 2.0 * to_double(f.x);
  const double my = -to_double(f.y);
  f.k = (my - root) / two_x;
  f.l = (my + root) / two_x;
}

// det = x^n (1 - K^n - L^n + (KL)^n) / denom, with K, L the roots of
// x t^2 + y t + z = 0 taken from the given discriminant (the preset
// corollaries quote the discriminant in expanded form, so it is a separate
// input). Falls back to the product of per-eigenvalue numerators when x = 0.
DetValue eval_det(const Xyz& f, const BigInt& disc, const BigInt& denom,
                  std::size_t n) {
  if (denom == 0) {
    std::ostringstream msg;
    msg << "exact determinant denominator vanished at n=" << n;
    throw ZeroDenominatorError(msg.str());
  }
  const double dd = to_double(denom);
  if (f.x == 0) {
    cplx prod(1.0, 0.0);
    double mags = 1.0;
    const double y = to_double(f.y), z = to_double(f.z);
    for (std::size_t j = 0; j < n; ++j) {
      const cplx factor =
          y * unit_root_neg_pow(n, j) + z * unit_root_neg_pow(n, 2 * j);
      prod *= factor;
      mags *= std::max(1.0, std::abs(factor));
    }
    return DetValue{prod / dd, true, std::max(1.0, mags / std::abs(dd))};
  }
  const double sd = std::sqrt(std::abs(to_double(disc)));
  const cplx root = disc >= 0 ? cplx(sd, 0.0) : cplx(0.0, sd);
  const double two_x = 2.0 * to_double(f.x);
  const double my = -to_double(f.y);
  const cplx k = (my - root) / two_x;
  const cplx l = (my + root) / two_x;
  const cplx kl(to_double(f.z) / to_double(f.x), 0.0);  // K*L = z/x exactly
  const BigInt xn = boost::multiprecision::pow(f.x, static_cast<unsigned>(n));
  const double xnd = to_double(xn);
  const cplx kn = cpow_n(k, n), ln = cpow_n(l, n), kln = cpow_n(kl, n);
  const cplx value = xnd * (1.0 - kn - ln + kln) / dd;
  const double mags = std::abs(xnd) *
                      (1.0 + std::abs(kn) + std::abs(ln) + std::abs(kln)) /
                      std::abs(dd);
  return DetValue{value, false, std::max(1.0, mags)};
}

}  // namespace

std::complex<double> eig_closed(const RecurrenceSpec& spec, std::size_t n,
                                std::size_t j) {
  require_order(n, "eig_closed");
  require_index(n, j);
  return eval_eig(general_xyz(spec, n), n, j);
}

std::vector<std::complex<double>> eig_closed_spectrum(const RecurrenceSpec& spec,
                                                      std::size_t n) {
  require_order(n, "eig_closed_spectrum");
  const Xyz f = general_xyz(spec, n);
  std::vector<cplx> values(n);
  for (std::size_t j = 0; j < n; ++j) values[j] = eval_eig(f, n, j);
  return values;
}

std::complex<double> eig_closed_preset(Preset preset, std::size_t n,
                                       std::size_t j) {
  require_order(n, "eig_closed_preset");
  require_index(n, j);
  return eval_eig(preset_xyz(preset, n), n, j);
}

std::vector<std::complex<double>> eig_closed_preset_spectrum(Preset preset,
                                                             std::size_t n) {
  require_order(n, "eig_closed_preset_spectrum");
  const Xyz f = preset_xyz(preset, n);
  std::vector<cplx> values(n);
  for (std::size_t j = 0; j < n; ++j) values[j] = eval_eig(f, n, j);
  return values;
}

BigInt norm_closed(const RecurrenceSpec& spec, std::size_t n) {
  require_order(n, "norm_closed");
  if (!spec.is_plastic()) {
    throw UnsupportedFamilyError(
        "norm_closed is defined only for the plastic family (p,q,r)=(0,1,1)");
  }
  const auto sn = static_cast<std::int64_t>(n);
  const std::vector<BigInt> t = terms_range(spec, 0, sn + 4);
  for (std::int64_t k = 0; k < sn; ++k) {
    if (t[static_cast<std::size_t>(k)] < 0) {
      std::ostringstream msg;
      msg << "closed-form spectral norm requires nonnegative entries; "
          << "term " << k << " is " << t[static_cast<std::size_t>(k)];
      throw NonnegativityError(msg.str());
    }
  }
  return t[static_cast<std::size_t>(sn + 4)] - t[4];
}

DetFactors det_factors(const RecurrenceSpec& spec, std::size_t n) {
  require_order(n, "det_factors");
  const Xyz f = general_xyz(spec, n);
  DetFactors out;
  out.x = f.x;
  out.y = f.y;
  out.z = f.z;
  out.denom = exact_denominator(n);
  fill_kl(out);
  return out;
}

DetValue det_closed(const RecurrenceSpec& spec, std::size_t n) {
  require_order(n, "det_closed");
  const Xyz f = general_xyz(spec, n);
  const BigInt disc = f.y * f.y - 4 * f.x * f.z;
  return eval_det(f, disc, exact_denominator(n), n);
}

DetValue det_closed_preset(Preset preset, std::size_t n) {
  require_order(n, "det_closed_preset");
  const Xyz f = preset_xyz(preset, n);
  // Discriminants in the expanded per-preset form in which they are quoted.
  BigInt disc;
  const auto sn = static_cast<std::int64_t>(n);
  switch (preset) {
    case Preset::Cordonnier: {
      const std::vector<BigInt> p =
          terms_range(RecurrenceSpec::cordonnier(), sn - 1, sn + 1);
      const BigInt one_minus = 1 - p[2];
      disc = one_minus * one_minus - 4 * p[1] * p[0] + 4 * p[0];
      break;
    }
    case Preset::Perrin: {
      const std::vector<BigInt> q =
          terms_range(RecurrenceSpec::perrin(), sn - 1, sn + 1);
      disc = q[2] * q[2] - 4 * q[1] * q[0] - 4 * q[1] + 12 * q[0] + 12;
      break;
    }
    case Preset::VanDerLaan: {
      const std::vector<BigInt> r =
          terms_range(RecurrenceSpec::van_der_laan(), sn - 1, sn + 1);
      const BigInt one_minus = 1 - r[2];
      disc = one_minus * one_minus - 4 * r[1] * r[0];
      break;
    }
    case Preset::Custom:
      throw std::invalid_argument("preset closed forms require a named preset");
  }
  return eval_det(f, disc, exact_denominator(n), n);
}

DenominatorIdentity denominator_identity(std::size_t n) {
  require_order(n, "denominator_identity");
  cplx prod(1.0, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    prod *= unit_root_neg_pow(n, 3 * j) + unit_root_neg_pow(n, 2 * j) - 1.0;
  }
  return DenominatorIdentity{prod, exact_denominator(n)};
}

}  // namespace placirc
