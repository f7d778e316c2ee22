#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "placirc/bigint.hpp"
#include "placirc/recurrence.hpp"

namespace placirc {

// Square integer circulant identified by its first row: row i is the i-step
// right rotation of row 0, so entry(i, j) = first_row[(j - i) mod n].
class CirculantInt {
 public:
  // Throws std::invalid_argument when the row is empty.
  explicit CirculantInt(std::vector<BigInt> first_row);

  std::size_t order() const { return row_.size(); }
  const std::vector<BigInt>& first_row() const { return row_; }
  const BigInt& entry(std::size_t i, std::size_t j) const;

 private:
  std::vector<BigInt> row_;
};

// DFT spectrum of a circulant under the fixed convention w = e^{2*pi*i/n},
//   lambda_j = sum_{k=0}^{n-1} c_k * w^{-jk},   j = 0..n-1.
// values[j] is lambda_j; spectra are compared element-wise by index and are
// never sorted, so the convention is part of the contract.
struct Spectrum {
  std::size_t n = 0;
  std::vector<std::complex<double>> values;
};

// The n-by-n circulant whose first row is T(0), ..., T(n-1).
CirculantInt build_from_sequence(const RecurrenceSpec& spec, std::size_t n);

// Spectrum straight from the definition above; the independent oracle every
// closed-form eigenvalue result is measured against.
Spectrum eig_oracle(const CirculantInt& m);

// Exact integer determinant by fraction-free (Bareiss) elimination with row
// pivoting; no floating point anywhere.
BigInt det_exact(const CirculantInt& m);

// Determinant as the product of the DFT eigenvalues; ties the spectrum to an
// exactly-computable scalar.
std::complex<double> det_eigprod(const CirculantInt& m);

// Spectral norm max_j |lambda_j| from the DFT spectrum (circulants are
// normal, so the largest eigenvalue modulus is the 2-norm).
double norm_oracle(const CirculantInt& m);

// Induced 1-norm and infinity-norm (max absolute column / row sum), computed
// literally from the matrix entries. For a circulant both equal the absolute
// sum of the first row; returning them separately keeps that an observable
// fact instead of an assumption.
std::pair<BigInt, BigInt> one_inf_norms(const CirculantInt& m);

// Exact check that M * M^T == M^T * M, i.e. that the matrix is normal.
bool commutes_with_transpose(const CirculantInt& m);

}  // namespace placirc
