#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "placirc/circulant.hpp"
#include "placirc/recurrence.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

using namespace placirc;
using cplx = std::complex<double>;

namespace {

CirculantInt circ(std::vector<BigInt> row) { return CirculantInt(std::move(row)); }

double spectrum_diff(const Spectrum& s, const std::vector<cplx>& want) {
  REQUIRE(s.values.size() == want.size());
  double worst = 0.0;
  for (std::size_t j = 0; j < want.size(); ++j)
    worst = std::max(worst, std::abs(s.values[j] - want[j]));
  return worst;
}

}  // namespace

TEST_CASE("entries rotate the first row one step right per row") {
  const CirculantInt m = circ({BigInt(10), BigInt(20), BigInt(30)});
  CHECK(m.order() == 3);
  // Row i is the i-step right rotation: entry(i,j) = row[(j - i) mod n].
  CHECK(m.entry(0, 0) == 10);
  CHECK(m.entry(0, 1) == 20);
  CHECK(m.entry(0, 2) == 30);
  CHECK(m.entry(1, 0) == 30);
  CHECK(m.entry(1, 1) == 10);
  CHECK(m.entry(1, 2) == 20);
  CHECK(m.entry(2, 0) == 20);
  CHECK(m.entry(2, 1) == 30);
  CHECK(m.entry(2, 2) == 10);
  CHECK_THROWS_AS(m.entry(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(m.entry(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(circ({}), std::invalid_argument);
}

TEST_CASE("build_from_sequence uses the first n terms as the first row") {
  const CirculantInt m = build_from_sequence(RecurrenceSpec::perrin(), 4);
  const std::vector<BigInt>& row = m.first_row();
  REQUIRE(row.size() == 4);
  CHECK(row[0] == 3);
  CHECK(row[1] == 0);
  CHECK(row[2] == 2);
  CHECK(row[3] == 3);
  CHECK(m.entry(1, 0) == 3);  // rotation wraps the trailing term around
  CHECK_THROWS_AS(build_from_sequence(RecurrenceSpec::perrin(), 0),
                  std::invalid_argument);
}

TEST_CASE("DFT spectrum of reference matrices") {
  // Shift matrix circ(0,1,0): eigenvalues are the unit roots 1, w^-1, w^-2.
  const Spectrum shift = eig_oracle(circ({BigInt(0), BigInt(1), BigInt(0)}));
  const double tau = 2.0 * std::numbers::pi / 3.0;
  CHECK(spectrum_diff(shift, {cplx(1, 0), std::polar(1.0, -tau),
                              std::polar(1.0, -2 * tau)}) < 1e-12);

  // All-ones matrix circ(1,1,1): rank one, spectrum (3, 0, 0).
  const Spectrum ones = eig_oracle(circ({BigInt(1), BigInt(1), BigInt(1)}));
  CHECK(spectrum_diff(ones, {cplx(3, 0), cplx(0, 0), cplx(0, 0)}) < 1e-12);

  // circ(3,0,2,3): (8, 1+3i, 2, 1-3i).
  const Spectrum p4 = eig_oracle(build_from_sequence(RecurrenceSpec::perrin(), 4));
  CHECK(spectrum_diff(p4, {cplx(8, 0), cplx(1, 3), cplx(2, 0), cplx(1, -3)}) <
        1e-12);

  // 1x1: the single entry.
  const Spectrum one = eig_oracle(circ({BigInt(-7)}));
  CHECK(spectrum_diff(one, {cplx(-7, 0)}) < 1e-15);
}

TEST_CASE("spectrum order pairs conjugates at mirrored indices") {
  const Spectrum s = eig_oracle(build_from_sequence(RecurrenceSpec::cordonnier(), 7));
  for (std::size_t j = 1; j < 7; ++j)
    CHECK(std::abs(s.values[7 - j] - std::conj(s.values[j])) < 1e-12);
}

TEST_CASE("exact determinant of reference matrices") {
  CHECK(det_exact(circ({BigInt(0), BigInt(1), BigInt(0)})) == 1);
  CHECK(det_exact(circ({BigInt(1), BigInt(1), BigInt(1)})) == 0);
  CHECK(det_exact(build_from_sequence(RecurrenceSpec::perrin(), 4)) == 160);
  CHECK(det_exact(circ({BigInt(0), BigInt(1)})) == -1);
  CHECK(det_exact(circ({BigInt(5)})) == 5);
  // Upper-triangular-free sanity: diagonal matrix circ(d) for n=1 is d; a
  // permutation matrix determinant is the permutation sign.
  CHECK(det_exact(circ({BigInt(0), BigInt(0), BigInt(1)})) == 1);
  CHECK(det_exact(circ({BigInt(0), BigInt(0), BigInt(0), BigInt(1)})) == -1);
}

TEST_CASE("determinant routes agree: exact vs eigenvalue product") {
  for (const auto& spec : {RecurrenceSpec::cordonnier(), RecurrenceSpec::perrin(),
                           RecurrenceSpec::van_der_laan()}) {
    for (std::size_t n = 1; n <= 12; ++n) {
      const CirculantInt m = build_from_sequence(spec, n);
      const double want = to_double(det_exact(m));
      const cplx got = det_eigprod(m);
      CHECK(std::abs(got - cplx(want, 0.0)) <= 1e-6 * (1.0 + std::abs(want)));
    }
  }
}

TEST_CASE("spectral norm oracle matches the row sum for nonnegative rows") {
  const CirculantInt cord4 = build_from_sequence(RecurrenceSpec::cordonnier(), 4);
  CHECK(norm_oracle(cord4) == doctest::Approx(5.0).epsilon(1e-12));
  const CirculantInt perrin4 = build_from_sequence(RecurrenceSpec::perrin(), 4);
  CHECK(norm_oracle(perrin4) == doctest::Approx(8.0).epsilon(1e-12));
  // With signed entries the norm exceeds |row sum|: circ(1,-1): eig {0, 2}.
  CHECK(norm_oracle(circ({BigInt(1), BigInt(-1)})) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("one- and infinity-norms are the absolute row/column sums") {
  const auto [one_p, inf_p] = one_inf_norms(build_from_sequence(RecurrenceSpec::perrin(), 4));
  CHECK(one_p == 8);
  CHECK(inf_p == 8);
  const auto [one_v, inf_v] = one_inf_norms(build_from_sequence(RecurrenceSpec::van_der_laan(), 3));
  CHECK(one_v == 1);
  CHECK(inf_v == 1);
  // Signed entries count by absolute value.
  const auto [one_s, inf_s] = one_inf_norms(circ({BigInt(-1), BigInt(2), BigInt(-3)}));
  CHECK(one_s == 6);
  CHECK(inf_s == 6);
}

TEST_CASE("circulants commute with their transpose entrywise-exactly") {
  for (const auto& spec : {RecurrenceSpec::cordonnier(), RecurrenceSpec::perrin(),
                           RecurrenceSpec::van_der_laan(),
                           RecurrenceSpec::plastic(-4, 7, -1)}) {
    for (std::size_t n = 1; n <= 10; ++n)
      CHECK(commutes_with_transpose(build_from_sequence(spec, n)));
  }
}

TEST_CASE("determinants stay exact when intermediates exceed 64 bits") {
  // Entries near 2^30 push the elimination minors far past any fixed width;
  // the value below was frozen from an independent exact computation.
  const BigInt big = BigInt(1) << 30;
  const CirculantInt m = circ({big, big + 3, big - 7, big + 11, big - 2});
  CHECK(det_exact(m) == BigInt("91831769583125"));
}
