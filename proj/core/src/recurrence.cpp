#include "placirc/recurrence.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace placirc {

namespace {

using cplx = std::complex<double>;

void require_plastic(const RecurrenceSpec& spec, const char* what) {
  if (!spec.is_plastic()) {
    std::ostringstream msg;
    msg << what << " is defined only for the plastic family (p,q,r)=(0,1,1); got (p,q,r)=("
        << spec.p << "," << spec.q << "," << spec.r << ")";
    throw UnsupportedFamilyError(msg.str());
  }
}

void require_nonnegative_index(std::int64_t n, const char* what) {
  if (n < 0) {
    std::ostringstream msg;
    msg << what << " requires n >= 0; got n=" << n;
    throw std::invalid_argument(msg.str());
  }
}

// T(k-1) from the window (T(k), T(k+1), T(k+2)); the reversed recurrence
// divides by the trailing coefficient and must divide exactly.
BigInt backstep(const RecurrenceSpec& spec, const BigInt& t0, const BigInt& t1,
                const BigInt& t2, std::int64_t at) {
  if (spec.r == 0) {
    throw NonReversibleError(
        "backward extension requires a nonzero trailing coefficient r; "
        "this recurrence has r=0");
  }
  BigInt num = t2 - spec.p * t1 - spec.q * t0;
  BigInt quo, rem;
  boost::multiprecision::divide_qr(num, BigInt(spec.r), quo, rem);
  if (rem != 0) {
    std::ostringstream msg;
    msg << "backward step to index " << at << " is not exact: " << num
        << " is not divisible by r=" << spec.r;
    throw InexactBackstepError(msg.str());
  }
  return quo;
}

struct Mat3 {
  // m[i][j]; used only for the companion-power fast path.
  std::array<std::array<BigInt, 3>, 3> m;
};

Mat3 mat_identity() {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = (i == j) ? 1 : 0;
  return r;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      BigInt acc = a.m[i][0] * b.m[0][j];
      acc += a.m[i][1] * b.m[1][j];
      acc += a.m[i][2] * b.m[2][j];
      r.m[i][j] = std::move(acc);
    }
  }
  return r;
}

// Binet weight of a root for given seeds: ((root^2 - 1)a + root*b + c) / f'(root).
cplx binet_weight(const RecurrenceSpec& spec, cplx root, cplx fprime) {
  const cplx num = (root * root - 1.0) * double(spec.a) + root * double(spec.b) +
                   double(spec.c);
  return num / fprime;
}

}  // namespace

std::string_view to_string(Preset preset) {
  switch (preset) {
    case Preset::Cordonnier: return "cordonnier";
    case Preset::Perrin: return "perrin";
    case Preset::VanDerLaan: return "vanderlaan";
    case Preset::Custom: return "custom";
  }
  return "custom";
}

RecurrenceSpec RecurrenceSpec::cordonnier() {
  return RecurrenceSpec{0, 1, 1, 1, 1, 1, Preset::Cordonnier};
}

RecurrenceSpec RecurrenceSpec::perrin() {
  return RecurrenceSpec{0, 1, 1, 3, 0, 2, Preset::Perrin};
}

RecurrenceSpec RecurrenceSpec::van_der_laan() {
  return RecurrenceSpec{0, 1, 1, 0, 1, 0, Preset::VanDerLaan};
}

RecurrenceSpec RecurrenceSpec::from_preset(Preset preset) {
  switch (preset) {
    case Preset::Cordonnier: return cordonnier();
    case Preset::Perrin: return perrin();
    case Preset::VanDerLaan: return van_der_laan();
    case Preset::Custom: break;
  }
  throw std::invalid_argument("from_preset requires a named preset");
}

RecurrenceSpec RecurrenceSpec::plastic(std::int64_t a, std::int64_t b,
                                       std::int64_t c) {
  return RecurrenceSpec{0, 1, 1, a, b, c, Preset::Custom};
}

RecurrenceSpec RecurrenceSpec::general(std::int64_t p, std::int64_t q,
                                       std::int64_t r, std::int64_t a,
                                       std::int64_t b, std::int64_t c) {
  return RecurrenceSpec{p, q, r, a, b, c, Preset::Custom};
}

std::string RecurrenceSpec::label() const {
  if (preset != Preset::Custom) return std::string(to_string(preset));
  std::ostringstream out;
  if (is_plastic()) {
    out << "seeds(" << a << "," << b << "," << c << ")";
  } else {
    out << "general(p=" << p << ",q=" << q << ",r=" << r << ";a=" << a
        << ",b=" << b << ",c=" << c << ")";
  }
  return out.str();
}

BigInt term_at(const RecurrenceSpec& spec, std::int64_t n) {
  BigInt t0 = spec.a, t1 = spec.b, t2 = spec.c;  // T(k), T(k+1), T(k+2), k = 0
  if (n >= 0) {
    if (n == 0) return t0;
    if (n == 1) return t1;
    for (std::int64_t k = 0; k < n - 2; ++k) {
      BigInt next = spec.p * t2 + spec.q * t1 + spec.r * t0;
      t0.swap(t1);
      t1.swap(t2);
      t2 = std::move(next);
    }
    return t2;
  }
  for (std::int64_t k = 0; k > n; --k) {
    BigInt prev = backstep(spec, t0, t1, t2, k - 1);
    t2.swap(t1);
    t1.swap(t0);
    t0 = std::move(prev);
  }
  return t0;
}

std::vector<BigInt> terms_range(const RecurrenceSpec& spec, std::int64_t lo,
                                std::int64_t hi) {
  if (lo > hi) {
    std::ostringstream msg;
    msg << "terms_range requires lo <= hi; got [" << lo << "," << hi << "]";
    throw std::invalid_argument(msg.str());
  }
  std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
  // Forward walk over k >= 0 with window (T(k), T(k+1), T(k+2)).
  {
    BigInt t0 = spec.a, t1 = spec.b, t2 = spec.c;
    for (std::int64_t k = 0; k <= hi; ++k) {
      if (k >= lo) out[static_cast<std::size_t>(k - lo)] = t0;
      BigInt next = spec.p * t2 + spec.q * t1 + spec.r * t0;
      t0.swap(t1);
      t1.swap(t2);
      t2 = std::move(next);
    }
  }
  // Backward walk over k < 0.
  if (lo < 0) {
    BigInt t0 = spec.a, t1 = spec.b, t2 = spec.c;
    for (std::int64_t k = 0; k > lo; --k) {
      BigInt prev = backstep(spec, t0, t1, t2, k - 1);
      t2.swap(t1);
      t1.swap(t0);
      t0 = prev;
      if (k - 1 <= hi) out[static_cast<std::size_t>(k - 1 - lo)] = std::move(prev);
    }
  }
  return out;
}

BigInt term_at_fast(const RecurrenceSpec& spec, std::int64_t n) {
  require_nonnegative_index(n, "term_at_fast");
  // (T(n+2), T(n+1), T(n))^T = M^n (c, b, a)^T for the companion matrix M;
  // the bottom row of M^n dotted with the seeds is T(n).
  Mat3 base;
  base.m = {{{BigInt(spec.p), BigInt(spec.q), BigInt(spec.r)},
             {BigInt(1), BigInt(0), BigInt(0)},
             {BigInt(0), BigInt(1), BigInt(0)}}};
  Mat3 pow = mat_identity();
  for (std::uint64_t e = static_cast<std::uint64_t>(n); e != 0; e >>= 1) {
    if (e & 1u) pow = mat_mul(pow, base);
    base = mat_mul(base, base);
  }
  return pow.m[2][0] * spec.c + pow.m[2][1] * spec.b + pow.m[2][2] * spec.a;
}

CubicRoots plastic_roots() {
  // Newton iteration on f(x) = x^3 - x - 1 from 1.5; f is convex and
  // increasing there, so the iteration converges monotonically.
  double x = 1.5;
  for (int i = 0; i < 64; ++i) {
    const double fx = x * x * x - x - 1.0;
    const double dfx = 3.0 * x * x - 1.0;
    const double next = x - fx / dfx;
    if (next == x) break;
    x = next;
  }
  const double rho = x;
  // Remaining quadratic factor x^2 + rho*x + 1/rho (negative discriminant),
  // so the conjugate pair inherits the symmetric-function identities from rho.
  const double im = std::sqrt(4.0 / rho - rho * rho) / 2.0;
  const cplx beta(-rho / 2.0, im);
  CubicRoots roots;
  roots.rho = rho;
  roots.beta = beta;
  roots.fprime_rho = cplx(3.0 * rho * rho - 1.0, 0.0);
  roots.fprime_beta = 3.0 * beta * beta - 1.0;
  return roots;
}

double binet(const RecurrenceSpec& spec, std::int64_t n) {
  require_plastic(spec, "binet");
  require_nonnegative_index(n, "binet");
  const CubicRoots roots = plastic_roots();
  const cplx alpha(roots.rho, 0.0);
  const cplx wa = binet_weight(spec, alpha, roots.fprime_rho);
  const cplx wb = binet_weight(spec, roots.beta, roots.fprime_beta);
  const cplx wc = binet_weight(spec, roots.gamma(), roots.fprime_gamma());
  const double e = static_cast<double>(n);
  const cplx value = wa * std::pow(alpha, e) + wb * std::pow(roots.beta, e) +
                     wc * std::pow(roots.gamma(), e);
  return value.real();
}

double binet_vdl_as_printed(std::int64_t n) {
  require_nonnegative_index(n, "binet_vdl_as_printed");
  const CubicRoots roots = plastic_roots();
  const cplx alpha(roots.rho, 0.0);
  const double e = static_cast<double>(n);
  const cplx value = std::pow(alpha, e) / roots.fprime_rho +
                     std::pow(roots.beta, e) / roots.fprime_beta +
                     std::pow(roots.gamma(), e) / roots.fprime_gamma();
  return value.real();
}

BigInt sum_first(const RecurrenceSpec& spec, std::int64_t n) {
  require_plastic(spec, "sum_first");
  require_nonnegative_index(n, "sum_first");
  const std::vector<BigInt> terms = terms_range(spec, 0, n);
  BigInt acc = 0;
  for (const BigInt& t : terms) acc += t;
  return acc;
}

BigInt sum_first_identity(const RecurrenceSpec& spec, std::int64_t n) {
  require_plastic(spec, "sum_first_identity");
  require_nonnegative_index(n, "sum_first_identity");
  return term_at(spec, n + 5) - term_at(spec, 4);
}

SquareSumConstant square_sum_constant(const RecurrenceSpec& spec) {
  require_plastic(spec, "square_sum_constant");
  // Anchor: solve the identity at n = 3, where no negative index appears.
  const std::vector<BigInt> t = terms_range(spec, 0, 5);
  BigInt anchor = t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + t[3] * t[3];
  anchor += t[2] * t[2] + t[0] * t[0] - t[5] * t[5];
  const BigInt a = spec.a, b = spec.b, c = spec.c;
  const BigInt printed = 2 * a * (a - c) - (b + c) * (b + c);
  return SquareSumConstant{anchor, printed, anchor == printed};
}

BigInt sum_squares(const RecurrenceSpec& spec, std::int64_t n) {
  require_plastic(spec, "sum_squares");
  require_nonnegative_index(n, "sum_squares");
  const std::vector<BigInt> terms = terms_range(spec, 0, n);
  BigInt acc = 0;
  for (const BigInt& t : terms) acc += t * t;
  return acc;
}

namespace {

BigInt sum_squares_via_constant(const RecurrenceSpec& spec, std::int64_t n,
                                const BigInt& constant) {
  const std::vector<BigInt> t = terms_range(spec, n - 3, n + 2);
  // t[k] holds T(n - 3 + k).
  const BigInt& tn2 = t[5];  // T(n+2)
  const BigInt& tm1 = t[2];  // T(n-1)
  const BigInt& tm3 = t[0];  // T(n-3)
  return tn2 * tn2 - tm1 * tm1 - tm3 * tm3 + constant;
}

}  // namespace

BigInt sum_squares_identity(const RecurrenceSpec& spec, std::int64_t n) {
  require_plastic(spec, "sum_squares_identity");
  require_nonnegative_index(n, "sum_squares_identity");
  return sum_squares_via_constant(spec, n, square_sum_constant(spec).anchor);
}

BigInt sum_squares_identity_printed(const RecurrenceSpec& spec, std::int64_t n) {
  require_plastic(spec, "sum_squares_identity_printed");
  require_nonnegative_index(n, "sum_squares_identity_printed");
  return sum_squares_via_constant(spec, n, square_sum_constant(spec).printed);
}

}  // namespace placirc
