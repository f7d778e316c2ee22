#include "placirc/circulant.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace placirc {

namespace {

using cplx = std::complex<double>;

// w^{-t} for w = e^{2*pi*i/n}, with t reduced mod n so the angle stays in
// (-2*pi, 0] regardless of how large the original j*k product was.
cplx unit_root_neg_pow(std::size_t n, std::size_t t) {
  return std::polar(1.0, -2.0 * std::numbers::pi *
                             static_cast<double>(t % n) / static_cast<double>(n));
}

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace

CirculantInt::CirculantInt(std::vector<BigInt> first_row)
    : row_(std::move(first_row)) {
  if (row_.empty()) {
    throw std::invalid_argument("a circulant needs a nonempty first row");
  }
}

const BigInt& CirculantInt::entry(std::size_t i, std::size_t j) const {
  const std::size_t n = row_.size();
  if (i >= n || j >= n) {
    std::ostringstream msg;
    msg << "entry(" << i << "," << j << ") out of range for order " << n;
    throw std::invalid_argument(msg.str());
  }
  // Row i is the i-step right rotation: entry (i, j) = row[(j - i) mod n].
  return row_[(j + n - i) % n];
}

CirculantInt build_from_sequence(const RecurrenceSpec& spec, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("build_from_sequence requires n >= 1");
  }
  return CirculantInt(terms_range(spec, 0, static_cast<std::int64_t>(n) - 1));
}

Spectrum eig_oracle(const CirculantInt& m) {
  const std::size_t n = m.order();
  std::vector<double> row(n);
  for (std::size_t k = 0; k < n; ++k) row[k] = to_double(m.first_row()[k]);
  std::vector<cplx> w(n);
  for (std::size_t t = 0; t < n; ++t) w[t] = unit_root_neg_pow(n, t);
  Spectrum s;
  s.n = n;
  s.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    cplx acc(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) acc += row[k] * w[(j * k) % n];
    s.values[j] = acc;
  }
  return s;
}

BigInt det_exact(const CirculantInt& m) {
  const std::size_t n = m.order();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.entry(i, j);

  // Fraction-free (Bareiss) elimination: every division below is exact, so
  // the whole computation stays in integers.
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      a[k].swap(a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign < 0 ? BigInt(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

std::complex<double> det_eigprod(const CirculantInt& m) {
  cplx prod(1.0, 0.0);
  for (const cplx& v : eig_oracle(m).values) prod *= v;
  return prod;
}

double norm_oracle(const CirculantInt& m) {
  double best = 0.0;
  for (const cplx& v : eig_oracle(m).values) best = std::max(best, std::abs(v));
  return best;
}

std::pair<BigInt, BigInt> one_inf_norms(const CirculantInt& m) {
  const std::size_t n = m.order();
  BigInt col_max = 0, row_max = 0;
  for (std::size_t j = 0; j < n; ++j) {
    BigInt col = 0;
    for (std::size_t i = 0; i < n; ++i) col += abs_big(m.entry(i, j));
    if (col > col_max) col_max = std::move(col);
  }
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row = 0;
    for (std::size_t j = 0; j < n; ++j) row += abs_big(m.entry(i, j));
    if (row > row_max) row_max = std::move(row);
  }
  return {col_max, row_max};
}

bool commutes_with_transpose(const CirculantInt& m) {
  const std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      BigInt left = 0, right = 0;  // (M M^T)(i,j) and (M^T M)(i,j)
      for (std::size_t k = 0; k < n; ++k) {
        left += m.entry(i, k) * m.entry(j, k);
        right += m.entry(k, i) * m.entry(k, j);
      }
      if (left != right) return false;
    }
  }
  return true;
}

}  // namespace placirc
