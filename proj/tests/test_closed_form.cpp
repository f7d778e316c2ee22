#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "placirc/circulant.hpp"
#include "placirc/closed_form.hpp"
#include "placirc/errors.hpp"
#include "placirc/recurrence.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>
#include <vector>

using namespace placirc;
using cplx = std::complex<double>;

namespace {

std::vector<RecurrenceSpec> preset_list() {
  return {RecurrenceSpec::cordonnier(), RecurrenceSpec::perrin(),
          RecurrenceSpec::van_der_laan()};
}

int draw(std::mt19937_64& gen, int lo, int hi) {
  return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

TEST_CASE("closed-form eigenvalues match the DFT oracle") {
  std::mt19937_64 gen(1234);
  std::vector<RecurrenceSpec> specs = preset_list();
  for (int trial = 0; trial < 10; ++trial)
    specs.push_back(RecurrenceSpec::plastic(draw(gen, -9, 9), draw(gen, -9, 9),
                                            draw(gen, -9, 9)));
  for (const auto& spec : specs) {
    for (std::size_t n = 1; n <= 24; ++n) {
      const std::vector<cplx> closed = eig_closed_spectrum(spec, n);
      const Spectrum oracle = eig_oracle(build_from_sequence(spec, n));
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(std::abs(closed[j] - oracle.values[j]) <=
              1e-9 * (1.0 + std::abs(oracle.values[j])));
        CHECK(closed[j] == eig_closed(spec, n, j));
      }
    }
  }
}

TEST_CASE("closed-form eigenvalue spot values") {
  CHECK(std::abs(eig_closed(RecurrenceSpec::van_der_laan(), 3, 0) - cplx(1, 0)) <
        1e-12);
  CHECK(std::abs(eig_closed(RecurrenceSpec::perrin(), 4, 2) - cplx(2, 0)) <
        1e-12);
  CHECK(std::abs(eig_closed_preset(Preset::Perrin, 4, 0) - cplx(8, 0)) < 1e-12);
  CHECK(std::abs(eig_closed_preset(Preset::Cordonnier, 1, 0) - cplx(1, 0)) <
        1e-12);
  // Shift matrix eigenvalue: w^-1 at n=3.
  const double tau = 2.0 * std::numbers::pi / 3.0;
  CHECK(std::abs(eig_closed_preset(Preset::VanDerLaan, 3, 1) -
                 std::polar(1.0, -tau)) < 1e-12);
  CHECK_THROWS_AS(eig_closed(RecurrenceSpec::perrin(), 3, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(eig_closed(RecurrenceSpec::perrin(), 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(eig_closed(RecurrenceSpec::general(1, 1, 1, 0, 0, 1), 3, 0),
                  UnsupportedFamilyError);
  CHECK_THROWS_AS(eig_closed_preset(Preset::Custom, 3, 0),
                  std::invalid_argument);
}

TEST_CASE("preset-folded eigenvalue forms equal the general closed form") {
  for (const auto& spec : preset_list()) {
    for (std::size_t n = 1; n <= 24; ++n) {
      const std::vector<cplx> general = eig_closed_spectrum(spec, n);
      const std::vector<cplx> folded = eig_closed_preset_spectrum(spec.preset, n);
      for (std::size_t j = 0; j < n; ++j)
        CHECK(std::abs(folded[j] - general[j]) <=
              1e-12 * (1.0 + std::abs(general[j])));
    }
  }
}

TEST_CASE("closed-form spectral norm equals the exact row sum") {
  CHECK(norm_closed(RecurrenceSpec::van_der_laan(), 3) == 1);
  CHECK(norm_closed(RecurrenceSpec::cordonnier(), 4) == 5);
  CHECK(norm_closed(RecurrenceSpec::perrin(), 4) == 8);
  for (const auto& spec : preset_list()) {
    for (std::size_t n = 1; n <= 64; ++n) {
      const CirculantInt m = build_from_sequence(spec, n);
      BigInt row_sum = 0;
      for (const BigInt& v : m.first_row()) row_sum += v;
      CHECK(norm_closed(spec, n) == row_sum);
    }
  }
  // And tracks the float oracle.
  for (const auto& spec : preset_list()) {
    for (std::size_t n = 1; n <= 32; ++n) {
      const double oracle = norm_oracle(build_from_sequence(spec, n));
      const double closed = to_double(norm_closed(spec, n));
      CHECK(std::abs(closed - oracle) <= 1e-9 * (1.0 + std::abs(oracle)));
    }
  }
  CHECK_THROWS_AS(norm_closed(RecurrenceSpec::plastic(-1, 2, -3), 3),
                  NonnegativityError);
  CHECK_THROWS_AS(norm_closed(RecurrenceSpec::general(1, 1, 1, 1, 1, 1), 3),
                  UnsupportedFamilyError);
}

TEST_CASE("determinant factor decomposition and its invariants") {
  const DetFactors f = det_factors(RecurrenceSpec::perrin(), 4);
  CHECK(f.x == -1);
  CHECK(f.y == 5);
  CHECK(f.z == 4);
  CHECK(f.denom == -5);
  // K and L are the roots of x t^2 + y t + z = 0: sum -y/x, product z/x.
  CHECK(std::abs(f.k + f.l - cplx(-5.0 / -1.0, 0)) < 1e-9);
  CHECK(std::abs(f.k * f.l - cplx(4.0 / -1.0, 0)) < 1e-9);

  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 20; ++trial) {
    const RecurrenceSpec spec = RecurrenceSpec::plastic(
        draw(gen, -3, 3), draw(gen, -3, 3), draw(gen, -3, 3));
    for (std::size_t n = 1; n <= 12; ++n) {
      const DetFactors g = det_factors(spec, n);
      if (g.x == 0) continue;  // quadratic degenerates; fallback route
      const double xd = to_double(g.x);
      CHECK(std::abs(g.k + g.l + cplx(to_double(g.y) / xd, 0)) <=
            1e-9 * (1.0 + std::abs(to_double(g.y) / xd)));
      CHECK(std::abs(g.k * g.l - cplx(to_double(g.z) / xd, 0)) <=
            1e-9 * (1.0 + std::abs(to_double(g.z) / xd)));
    }
  }
}

TEST_CASE("closed-form determinant matches the exact route") {
  // Spot values.
  const DetValue v1 = det_closed(RecurrenceSpec::van_der_laan(), 3);
  CHECK_FALSE(v1.used_fallback);
  CHECK(std::abs(v1.value - cplx(1, 0)) < 1e-9);

  const DetValue v2 = det_closed(RecurrenceSpec::perrin(), 4);
  CHECK_FALSE(v2.used_fallback);
  CHECK(std::abs(v2.value - cplx(160, 0)) <= 1e-6 * 161);

  const DetValue v3 = det_closed(RecurrenceSpec::perrin(), 1);
  CHECK(std::abs(v3.value - cplx(3, 0)) < 1e-9);

  const DetValue v4 = det_closed(RecurrenceSpec::cordonnier(), 3);
  CHECK(std::abs(v4.value - cplx(0, 0)) < 1e-9);

  // x = 0 falls back to the per-eigenvalue product; value still right.
  const DetValue fb = det_closed(RecurrenceSpec::van_der_laan(), 2);
  CHECK(fb.used_fallback);
  CHECK(std::abs(fb.value - cplx(-1, 0)) < 1e-9);

  // Sweep presets and random triples against the exact determinant, scaling
  // by the evaluation's own intermediates (DetValue::scale).
  std::mt19937_64 gen(555);
  std::vector<RecurrenceSpec> specs = preset_list();
  for (int trial = 0; trial < 15; ++trial)
    specs.push_back(RecurrenceSpec::plastic(draw(gen, -3, 3), draw(gen, -3, 3),
                                            draw(gen, -3, 3)));
  for (const auto& spec : specs) {
    for (std::size_t n = 1; n <= 16; ++n) {
      const double want = to_double(det_exact(build_from_sequence(spec, n)));
      const DetValue got = det_closed(spec, n);
      CHECK(got.scale >= 1.0);
      CHECK(std::abs(got.value - cplx(want, 0.0)) <=
            1e-6 * (1.0 + std::max(std::abs(want), got.scale)));
    }
  }
  CHECK_THROWS_AS(det_closed(RecurrenceSpec::general(1, 1, 1, 1, 1, 1), 3),
                  UnsupportedFamilyError);
  CHECK_THROWS_AS(det_closed(RecurrenceSpec::perrin(), 0),
                  std::invalid_argument);
}

TEST_CASE("fallback sites are exactly the orders where x vanishes") {
  const auto fallback_orders = [](Preset p) {
    std::set<std::size_t> out;
    for (std::size_t n = 1; n <= 16; ++n)
      if (det_closed(RecurrenceSpec::from_preset(p), n).used_fallback)
        out.insert(n);
    return out;
  };
  CHECK(fallback_orders(Preset::Cordonnier) == std::set<std::size_t>{1, 2});
  CHECK(fallback_orders(Preset::Perrin) == std::set<std::size_t>{3});
  CHECK(fallback_orders(Preset::VanDerLaan) == std::set<std::size_t>{2});
  // x = T(n) - a at those orders.
  CHECK(det_factors(RecurrenceSpec::cordonnier(), 1).x == 0);
  CHECK(det_factors(RecurrenceSpec::cordonnier(), 2).x == 0);
  CHECK(det_factors(RecurrenceSpec::perrin(), 3).x == 0);
  CHECK(det_factors(RecurrenceSpec::van_der_laan(), 2).x == 0);
}

TEST_CASE("preset determinant corollaries equal the general closed form") {
  for (const auto& spec : preset_list()) {
    for (std::size_t n = 1; n <= 16; ++n) {
      const DetValue general = det_closed(spec, n);
      const DetValue folded = det_closed_preset(spec.preset, n);
      const double scale = std::max(general.scale, folded.scale);
      CHECK(std::abs(folded.value - general.value) <=
            1e-9 * (1.0 + std::max(std::abs(general.value), scale)));
    }
  }
  CHECK_THROWS_AS(det_closed_preset(Preset::Custom, 3), std::invalid_argument);
}

TEST_CASE("unit-root denominator product equals the exact integer form") {
  const DenominatorIdentity d1 = denominator_identity(1);
  CHECK(d1.exact == 1);
  CHECK(std::abs(d1.product - cplx(1, 0)) < 1e-12);
  const DenominatorIdentity d2 = denominator_identity(2);
  CHECK(d2.exact == -1);
  CHECK(std::abs(d2.product - cplx(-1, 0)) < 1e-12);
  const DenominatorIdentity d3 = denominator_identity(3);
  CHECK(d3.exact == 1);
  CHECK(std::abs(d3.product - cplx(1, 0)) < 1e-12);
  for (std::size_t n = 1; n <= 64; ++n) {
    const DenominatorIdentity di = denominator_identity(n);
    const double want = to_double(di.exact);
    CHECK(std::abs(di.product - cplx(want, 0.0)) <= 1e-9 * (1.0 + std::abs(want)));
    CHECK(di.exact != 0);
  }
}
