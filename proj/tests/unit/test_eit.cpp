#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "gen.hpp"
#include "ode_oracle.hpp"
#include "slaumzi/constants.hpp"
#include "slaumzi/eit.hpp"
#include "slaumzi/error.hpp"

using namespace slaumzi;
using namespace slaumzi::eit;
using cd = std::complex<double>;

namespace {

FourLevelScheme probe_only(double rabi, double decay, double detuning) {
  FourLevelScheme s;
  s.probe_rabi_24 = rabi;
  s.decay_42 = decay;
  s.probe_detuning = detuning;
  return s;
}

FourLevelScheme random_scheme(gen::Gen& g) {
  auto s = FourLevelScheme::reference();
  s.pump_rabi_13 *= g.uniform(0.0, 3.0);
  s.pump_rabi_14 *= g.uniform(0.1, 3.0);
  s.probe_rabi_23 *= g.uniform(0.1, 3.0);
  s.probe_rabi_24 *= g.uniform(0.1, 3.0);
  s.pump_detuning = g.uniform(-1e9, 1e9);
  s.probe_detuning = g.uniform(-1e9, 1e9);
  s.ground_exchange *= g.uniform(0.1, 10.0);
  return s;
}

CellConfig fast_cell() {
  auto c = CellConfig::reference();
  c.velocity_points = 201;
  c.slice_count = 4;
  return c;
}

}  // namespace

TEST_SUITE("eit") {

TEST_CASE("steady state matches time-domain integration at zero velocity") {
  const auto s = FourLevelScheme::reference();
  const Density a = steady_state(s);
  const Density b = oracle::integrate_to_steady_state(s, 0.0);
  INFO("max deviation " << (a - b).cwiseAbs().maxCoeff());
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("steady state matches time-domain integration off resonance and in motion") {
  auto s = FourLevelScheme::reference();
  s.probe_detuning = 2e7;
  s.pump_detuning = -1e7;
  const Density a = steady_state(s, 3e8);
  const Density b = oracle::integrate_to_steady_state(s, 3e8);
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("two-level limit against the textbook solution") {
  gen::Gen g(41);
  for (int i = 0; i < 50; ++i) {
    const double rabi = g.log_uniform(1e5, 1e9);
    const double gamma = g.log_uniform(1e6, 1e8);
    const double det = g.uniform(-5e8, 5e8);
    const Density rho = steady_state(probe_only(rabi, gamma, det));
    const double delta = -det;  // upper minus lower level energy
    const double ee = 0.25 * rabi * rabi / (delta * delta + 0.25 * gamma * gamma + 0.5 * rabi * rabi);
    CHECK(rho(3, 3).real() == doctest::Approx(ee).epsilon(1e-9).scale(1.0));
    const cd coh = cd(0.0, -0.5 * rabi) * (1.0 - 2.0 * ee) / cd(0.5 * gamma, delta);
    CHECK(std::abs(rho(3, 1) - coh) < 1e-9);
    // Isolated levels carry nothing.
    CHECK(std::abs(rho(0, 0)) == 0.0);
    CHECK(std::abs(rho(2, 2)) == 0.0);
  }
}

TEST_CASE("invariants on random schemes and velocities") {
  gen::Gen g(42);
  InvariantStats st;
  for (int i = 0; i < gen::kCases; ++i) {
    const auto s = random_scheme(g);
    st.record(steady_state(s, g.uniform(-3e9, 3e9)));
  }
  CHECK(st.solves == static_cast<std::size_t>(gen::kCases));
  CHECK(st.ok(1e-10));
}

TEST_CASE("degenerate systems raise NumericalError") {
  CHECK_THROWS_AS(steady_state(FourLevelScheme{}), NumericalError);
  // Two disconnected two-level systems have a family of steady states.
  FourLevelScheme s;
  s.pump_rabi_13 = 1e7;
  s.decay_31 = 1e7;
  s.probe_rabi_24 = 1e7;
  s.decay_42 = 1e7;
  CHECK_THROWS_AS(steady_state(s), NumericalError);
}

TEST_CASE("probe alone is absorbed; the pump opens a window") {
  auto s = FourLevelScheme::reference();
  auto cell = CellConfig::reference();
  cell.number_density = 1e15;
  const double k = cell.dipole_constant;
  auto off = s;
  off.pump_rabi_13 = off.pump_rabi_14 = 0.0;
  const auto chi_on = probe_susceptibility(steady_state(s), s, 1e15, k);
  // With the pump off, ground exchange keeps population in the probe ground state.
  const auto chi_off = probe_susceptibility(steady_state(off), off, 1e15, k);
  CHECK(chi_off.imag() > 0.0);
  CHECK(chi_on.imag() > 0.0);
  CHECK(chi_on.imag() < chi_off.imag());
  CHECK_THROWS_AS(probe_susceptibility(steady_state(s), FourLevelScheme{}, 1.0, 1.0), InvalidArgument);
}

TEST_CASE("susceptibility is linear in density") {
  const auto s = FourLevelScheme::reference();
  const Density rho = steady_state(s, 1e8);
  const auto a = probe_susceptibility(rho, s, 1e15, 2.0);
  const auto b = probe_susceptibility(rho, s, 3e15, 2.0);
  CHECK(std::abs(b - 3.0 * a) < 1e-12 * std::abs(b));
}

TEST_CASE("velocity grid") {
  auto c = CellConfig::reference();
  const auto g = velocity_grid(c);
  REQUIRE(g.velocities.size() == 801);
  double sum = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < g.weights.size(); ++i) {
    sum += g.weights[i];
    m2 += g.weights[i] * g.velocities[i] * g.velocities[i];
    CHECK(g.velocities[i] == doctest::Approx(-g.velocities[800 - i]));
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::sqrt(m2) == doctest::Approx(c.thermal_velocity()).epsilon(1e-3));
  CHECK(c.thermal_velocity() == doctest::Approx(184.8).epsilon(0.01));

  c.velocity_points = 39;
  CHECK_THROWS_AS(velocity_grid(c), InvalidArgument);
  c.velocity_points = 40;
  CHECK_THROWS_AS(velocity_grid(c), InvalidArgument);
  c.velocity_points = 801;
  c.temperature = 0.0;
  const auto cold = velocity_grid(c);
  CHECK(cold.velocities.size() == 1);
  CHECK(cold.weights[0] == 1.0);
}

TEST_CASE("cold cell reduces the Doppler average to the zero-velocity solve") {
  auto c = CellConfig::reference();
  c.temperature = 0.0;
  c.number_density = 1e15;
  const auto s = FourLevelScheme::reference();
  const auto d = doppler_average(s, c);
  const auto direct = probe_susceptibility(steady_state(s), s, c.number_density, c.dipole_constant);
  CHECK(std::abs(d.probe_chi - direct) < 1e-12 * std::abs(direct));
}

TEST_CASE("one slice of a dilute cell matches Beer's law on the input susceptibility") {
  auto c = fast_cell();
  c.slice_count = 1;
  c.number_density = 1e14;
  const auto s = FourLevelScheme::reference();
  const auto r = propagate_point(s, c);
  const auto d = doppler_average(s, c);
  CHECK(r.probe_transmission == doctest::Approx(std::exp(-c.wavenumber() * d.probe_chi.imag() * c.length)));
  CHECK(r.phase_index == doctest::Approx(1.0 + 0.5 * d.probe_chi.real()));
}

TEST_CASE("slice intensities fall monotonically and invariants hold in every slice") {
  auto c = fast_cell();
  c.number_density = 8e15;
  const auto r = propagate_point(FourLevelScheme::reference(), c);
  REQUIRE(r.slice_probe_intensity.size() == c.slice_count);
  double prev = 1.0;
  for (double v : r.slice_probe_intensity) {
    CHECK(v <= prev);
    prev = v;
  }
  CHECK(r.invariants.solves == c.slice_count * c.velocity_points);
  CHECK(r.invariants.ok(1e-10));
}

TEST_CASE("transparency peak with positive dispersion at its center") {
  auto c = fast_cell();
  c.number_density = 8e15;
  const auto s = FourLevelScheme::reference();
  const auto sp = propagate_sliced(s, c, detuning_grid(4e7, 21));
  const std::size_t mid = 10;
  CHECK(sp.detunings[mid] == 0.0);
  for (std::size_t i = 0; i < sp.transmission.size(); ++i) {
    if (i != mid) CHECK(sp.transmission[i] < sp.transmission[mid]);
  }
  CHECK(sp.dn_ddelta[mid] > 0.0);
  CHECK(sp.group_index_at_center > 1.0);
  CHECK(sp.transmission_at_center == doctest::Approx(sp.transmission[mid]));
  CHECK(sp.invariants.ok(1e-10));
}

TEST_CASE("group index grows with density") {
  auto c = fast_cell();
  c.number_density = 2e15;
  const double a = group_index_at_center(FourLevelScheme::reference(), c);
  c.number_density = 8e15;
  const double b = group_index_at_center(FourLevelScheme::reference(), c);
  CHECK(a > 1.0);
  CHECK(b > a);
}

TEST_CASE("density calibration hits its target") {
  auto c = fast_cell();
  const auto s = FourLevelScheme::reference();
  const double n = calibrate_density(s, c, 0.5);
  c.number_density = n;
  CHECK(propagate_point(s, c).probe_transmission == doctest::Approx(0.5).epsilon(1e-5));
  CHECK_THROWS_AS(calibrate_density(s, c, 0.5, 1e3, 1e4), NumericalError);
  CHECK_THROWS_AS(calibrate_density(s, c, 1.5), InvalidArgument);
}

TEST_CASE("cell validation") {
  auto c = CellConfig::reference();
  c.velocity_points = 800;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = CellConfig::reference();
  c.slice_count = 0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

}
