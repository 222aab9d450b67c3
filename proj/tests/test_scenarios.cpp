#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "quonhom/scenarios.hpp"

using namespace quonhom;

namespace {
using cplx = std::complex<double>;
}

TEST_CASE("gaussian twin-beam spec is normalized and centred on the pump") {
  const auto spec = TwinBeamSpec::gaussian(8, 7, 1.5, 10.0, 0.5, {0.0});
  REQUIRE(spec.envelope.size() == 8);
  double norm = 0.0;
  for (const auto& f : spec.envelope) norm += std::norm(f);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-13));
  // pump at the last mode: envelope symmetric about k = 3.5
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(spec.envelope[k]) ==
          doctest::Approx(std::abs(spec.envelope[7 - k])).epsilon(1e-13));
  }
  CHECK(spec.omega.omega[0] == 10.0);
  CHECK(spec.omega.omega[3] == 11.5);
}

TEST_CASE("twin-beam amplitude lives on the energy antidiagonal") {
  const auto spec = TwinBeamSpec::gaussian(4, 3, 1.0, 0.0, 1.0, {0.0});
  const auto amp = twin_beam_amplitude(spec);
  for (int k1 = 0; k1 < 4; ++k1) {
    for (int k2 = 0; k2 < 4; ++k2) {
      if (k1 + k2 == 3) {
        CHECK(amp(k1, k2) == spec.envelope[k1]);
      } else {
        CHECK(amp(k1, k2) == cplx{0.0, 0.0});
      }
    }
  }
}

TEST_CASE("twin-beam spec validation") {
  // pump index whose antidiagonal misses the grid
  CHECK_THROWS_AS(TwinBeamSpec::gaussian(2, 4, 1.0, 0.0, 1.0, {0.0}),
                  validation_error);
  CHECK_THROWS_AS(TwinBeamSpec::gaussian(0, 0, 1.0, 0.0, 1.0, {0.0}),
                  validation_error);
  CHECK_THROWS_AS(TwinBeamSpec::gaussian(4, 3, 0.0, 0.0, 1.0, {0.0}),
                  validation_error);

  TwinBeamSpec bad = TwinBeamSpec::gaussian(4, 3, 1.0, 0.0, 1.0, {0.0});
  bad.envelope[0] = {5.0, 0.0};
  CHECK_THROWS_AS(twin_beam_amplitude(bad), validation_error);

  TwinBeamSpec off = TwinBeamSpec::gaussian(4, 3, 1.0, 0.0, 1.0, {0.0});
  off.pump_index = 9;
  CHECK_THROWS_AS(twin_beam_amplitude(off), validation_error);
}

TEST_CASE("flat two-mode twin beam dips as a cosine in the delay") {
  // f = (1,1)/sqrt(2) on pump 1: w(tau) = cos(domega tau)
  TwinBeamSpec spec = TwinBeamSpec::gaussian(2, 1, 1e6, 0.0, 1.0, {});
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(spec.envelope[0] - cplx{r, 0.0}) < 1e-9);
  spec.envelope = {cplx{r, 0.0}, cplx{r, 0.0}};
  for (double tau : {0.0, 0.5, 1.3, 3.0}) spec.tau_grid.push_back(tau);

  const auto curve = dip_curve(spec, QuonParameter(1.0));
  REQUIRE(curve.size() == 4);
  for (const auto& pt : curve) {
    CHECK(pt.w == doctest::Approx(std::cos(pt.tau)).epsilon(1e-12));
    CHECK(pt.c12 == doctest::Approx(0.5 * (1.0 - std::cos(pt.tau))).epsilon(1e-12));
  }
  // full suppression at zero delay
  CHECK(curve[0].c12 == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("dip curve obeys the fermion-boson duality") {
  const auto base = TwinBeamSpec::gaussian(6, 5, 1.2, 0.0, 0.7,
                                           {0.0, 0.4, 0.9, 1.7});
  const auto plus = dip_curve(base, QuonParameter(0.6));
  const auto minus = dip_curve(base, QuonParameter(-0.6));
  REQUIRE(plus.size() == minus.size());
  for (std::size_t i = 0; i < plus.size(); ++i) {
    CHECK(plus[i].w == doctest::Approx(minus[i].w).epsilon(1e-14));
    CHECK(plus[i].c12 + minus[i].c12 == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("envelope diagram rows") {
  const auto rows = envelope_diagram({1.0, 0.0, -1.0, 0.5}, 4);
  REQUIRE(rows.size() == 4);

  CHECK(rows[0].q == 1.0);
  CHECK(rows[0].all_lo == 0.0);
  CHECK(rows[0].all_hi == 1.0);
  CHECK(rows[0].sep_lo == 0.0);
  CHECK(rows[0].sep_hi == 0.5);
  CHECK(rows[0].mean_c12 == 0.375);

  CHECK(rows[1].all_lo == 0.5);
  CHECK(rows[1].all_hi == 0.5);
  CHECK(rows[1].mean_c12 == 0.5);

  CHECK(rows[2].all_lo == 0.0);
  CHECK(rows[2].all_hi == 1.0);
  CHECK(rows[2].sep_lo == 0.5);
  CHECK(rows[2].sep_hi == 1.0);
  CHECK(rows[2].mean_c12 == 0.625);

  CHECK(rows[3].sep_hi == 0.5);
  CHECK(rows[3].mean_c12 == 0.5 - 0.5 / 8.0);

  CHECK_THROWS_AS(envelope_diagram({2.0}, 4), validation_error);
  CHECK_THROWS_AS(envelope_diagram({0.5}, 0), validation_error);
}
