#pragma once
// Time-domain reference for the steady-state solver. Shared by the unit and
// acceptance tests; deliberately written without the vectorized Liouvillian.

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "slaumzi/eit.hpp"

namespace oracle {

using slaumzi::eit::Density;
using slaumzi::eit::FourLevelScheme;

// Integrates d rho/dt = -i[H, rho] + sum_k D[c_k] rho with
// classical RK4 from an unpolarized ground state until it stops moving.
inline Density rhs(const Eigen::Matrix4cd& h,
                   const std::vector<std::pair<Eigen::Matrix4cd, double>>& jumps, const Density& rho) {
  const std::complex<double> i(0.0, 1.0);
  Density d = -i * (h * rho - rho * h);
  for (const auto& [c, rate] : jumps) {
    const Eigen::Matrix4cd cdc = c.adjoint() * c;
    d += rate * (c * rho * c.adjoint() - 0.5 * (cdc * rho + rho * cdc));
  }
  return d;
}

inline Density integrate_to_steady_state(const FourLevelScheme& s, double velocity_shift) {
  const double dp = s.pump_detuning - velocity_shift;
  const double dr = s.probe_detuning - velocity_shift;
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h(1, 1) = dr - dp;
  h(2, 2) = -dp - s.excited_splitting;
  h(3, 3) = -dp;
  h(0, 2) = h(2, 0) = 0.5 * s.pump_rabi_13;
  h(0, 3) = h(3, 0) = 0.5 * s.pump_rabi_14;
  h(1, 2) = h(2, 1) = 0.5 * s.probe_rabi_23;
  h(1, 3) = h(3, 1) = 0.5 * s.probe_rabi_24;
  auto lowering = [](int to, int from) {
    Eigen::Matrix4cd c = Eigen::Matrix4cd::Zero();
    c(to, from) = 1.0;
    return c;
  };
  const std::vector<std::pair<Eigen::Matrix4cd, double>> jumps{
      {lowering(0, 2), s.decay_31}, {lowering(1, 2), s.decay_32},       {lowering(0, 3), s.decay_41},
      {lowering(1, 3), s.decay_42}, {lowering(1, 0), s.ground_exchange}, {lowering(0, 1), s.ground_exchange}};

  const double fastest = h.cwiseAbs().maxCoeff() + s.decay_31 + s.decay_41 + s.pump_rabi_14 + s.probe_rabi_24;
  const double dt = 0.5 / fastest;
  Density rho = Density::Zero();
  rho(0, 0) = rho(1, 1) = 0.5;
  for (long step = 0; step < 20'000'000; ++step) {
    const Density k1 = rhs(h, jumps, rho);
    const Density k2 = rhs(h, jumps, rho + 0.5 * dt * k1);
    const Density k3 = rhs(h, jumps, rho + 0.5 * dt * k2);
    const Density k4 = rhs(h, jumps, rho + dt * k3);
    rho += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    // |d rho/dt| below 1e-6 /s leaves a residual far under 1e-10 at MHz rates.
    if (step % 1000 == 0 && k1.cwiseAbs().maxCoeff() < 1e-6) break;
  }
  return rho;
}

}  // namespace oracle
