#include <doctest.h>

#include <cmath>
#include <random>

#include "gen.hpp"
#include "slaumzi/constants.hpp"
#include "slaumzi/error.hpp"
#include "slaumzi/optics.hpp"

using namespace slaumzi;
using namespace slaumzi::optics;

TEST_SUITE("optics") {

TEST_CASE("time constants from delays") {
  const auto g = InterferometerGeometry::from_delays(1.56e-9, 0.27e-9);
  DispersiveMedium m;
  m.group_index = 300.0;
  m.phase_index = 1.0001;
  const auto tc = time_constants(g, m);
  CHECK(tc.tau0 == doctest::Approx(1.56e-9).epsilon(1e-12));
  CHECK(tc.tau_d == doctest::Approx(0.27e-9).epsilon(1e-12));
  CHECK(tc.tau_vac == doctest::Approx(1.83e-9).epsilon(1e-12));
  CHECK(tc.tau_nd == doctest::Approx(1.56e-9 + 1.0001 * 0.27e-9).epsilon(1e-12));
  CHECK(tc.tau_sl == doctest::Approx(1.56e-9 + 300 * 0.27e-9).epsilon(1e-12));
}

TEST_CASE("vacuum medium gives unit magnification") {
  const auto g = InterferometerGeometry::from_delays(2e-9, 1e-9);
  CHECK(fringe_magnification(g, DispersiveMedium::vacuum()) == doctest::Approx(1.0));
}

TEST_CASE("magnification and group index are inverse maps") {
  gen::Gen g(11);
  for (int i = 0; i < gen::kCases; ++i) {
    const auto geom = InterferometerGeometry::from_delays(g.log_uniform(1e-11, 1e-8), g.log_uniform(1e-11, 1e-8));
    DispersiveMedium m;
    m.group_index = g.log_uniform(1.0, 1e4);
    const double mag = fringe_magnification(geom, m);
    CHECK(mag >= 1.0);
    CHECK(gen::close_rel(group_index_from_magnification(geom, mag), m.group_index, 1e-9));
  }
}

TEST_CASE("magnification 257 on the 1.56/0.27 ns interferometer") {
  const auto g = InterferometerGeometry::from_delays(1.56e-9, 0.27e-9);
  const double ng = group_index_from_magnification(g, 257.0);
  CHECK(ng == doctest::Approx((257.0 * 1.83 - 1.56) / 0.27).epsilon(1e-12));
  CHECK(1.56e-9 + ng * 0.27e-9 == doctest::Approx(470.3e-9).epsilon(1e-3));
}

TEST_CASE("invalid inputs are rejected") {
  DispersiveMedium m;
  m.group_index = 0.5;
  CHECK_THROWS_AS(m.validate(), InvalidArgument);
  m = {};
  m.transmission = 0.0;
  CHECK_THROWS_AS(m.validate(), InvalidArgument);
  CHECK_THROWS_AS(InterferometerGeometry::from_delays(-1e-9, 0.0), InvalidArgument);
  const auto g = InterferometerGeometry::from_delays(1e-9, 0.0);
  CHECK_THROWS_AS(group_index_from_magnification(g, 2.0), InvalidArgument);
  CHECK_THROWS_AS(fringe_magnification(InterferometerGeometry{}, {}), InvalidArgument);
  CHECK_THROWS_AS(contrast_factor(1.0, 0.0), InvalidArgument);
}

TEST_CASE("ideal fringe: period and extrema") {
  gen::Gen g(12);
  for (int i = 0; i < gen::kCases; ++i) {
    const double tau = g.log_uniform(1e-10, 1e-6);
    const double s0 = g.log_uniform(1e-3, 1e6);
    const double phi = g.uniform(-3.0, 3.0);
    const double d = g.uniform(-1e8, 1e8);
    const double s = signal_ideal(d, tau, s0, phi);
    CHECK(s >= 0.0);
    CHECK(s <= s0 * (1 + 1e-12));
    CHECK(signal_ideal(d + constants::kTwoPi / tau, tau, s0, phi) == doctest::Approx(s).epsilon(1e-6).scale(s0));
  }
  CHECK(signal_ideal(0.0, 1e-9, 2.0) == doctest::Approx(2.0));
  CHECK(signal_ideal(constants::kPi / 1e-9, 1e-9, 2.0) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("infinite coherence recovers the ideal fringe") {
  gen::Gen g(13);
  for (int i = 0; i < gen::kCases; ++i) {
    const double tau = g.log_uniform(1e-10, 1e-6);
    const double phi = g.uniform(-3.0, 3.0);
    const double d = g.uniform(-1e7, 1e7);
    const double a = signal_with_linewidth(d, tau, tau, 1e30, 1.0, phi);
    CHECK(a == doctest::Approx(signal_ideal(d, tau, 1.0, phi)).epsilon(1e-12).scale(1.0));
  }
}

// Averages the ideal fringe over Gaussian phase jumps of variance tau_c/tau_L
// by direct sampling; this is the defining picture behind the envelope.
TEST_CASE("finite-linewidth fringe equals the phase-jump ensemble average") {
  std::mt19937_64 rng(14);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double tau = 5e-9, tau_l = 4e-9, phi = 0.7, d = 3e7;
  const int n = 400000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double jump = std::sqrt(tau / tau_l) * normal(rng);
    const double s = 0.5 + 0.5 * std::cos(phi + tau * d + jump);
    sum += s;
    sum2 += s * s;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum2 / n - mean * mean) / n);
  CHECK(std::abs(mean - signal_with_linewidth(d, tau, tau, tau_l, 1.0, phi)) < 4.0 * se);
}

TEST_CASE("contrast decays monotonically with lag") {
  double prev = 1.0;
  for (double r = 0.0; r < 10.0; r += 0.25) {
    const double c = contrast_factor(r, 1.0);
    CHECK(c <= prev);
    prev = c;
  }
  CHECK(contrast_factor(0.0, 1.0) == 1.0);
}

}
