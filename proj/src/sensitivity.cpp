#include "slaumzi/sensitivity.hpp"

#include <cmath>
#include <fmt/format.h>

#include "slaumzi/constants.hpp"
#include "slaumzi/error.hpp"

namespace slaumzi::sensitivity {

using constants::kE;
using detail::require;

double DetectionSpec::bandwidth() const {
  return measurement_bandwidth ? *measurement_bandwidth : 1.0 / measurement_time;
}

void DetectionSpec::validate() const {
  require(quantum_efficiency > 0.0 && quantum_efficiency <= 1.0,
          "detection.quantum_efficiency must lie in (0, 1]");
  require(measurement_time > 0.0, "detection.measurement_time must be > 0");
  if (measurement_bandwidth) require(*measurement_bandwidth > 0.0, "detection.bandwidth must be > 0");
}

double mmfs_standard_quantum(const laser::LaserSpec& spec, const laser::CavityFigures& cavity,
                             const DetectionSpec& det) {
  det.validate();
  const auto stl = laser::schawlow_townes(spec, cavity);
  return std::sqrt(stl.linewidth * det.bandwidth() / det.quantum_efficiency);
}

double mmfs_standard_vacuum_mode(const laser::LaserSpec& spec, const laser::CavityFigures& cavity,
                                 const DetectionSpec& det) {
  det.validate();
  spec.validate();
  const double tau_m = 1.0 / det.bandwidth();
  const double n = spec.photon_flux() / spec.henry_factor;
  return 1.0 / (cavity.decay_time * std::sqrt(2.0 * det.quantum_efficiency * n * tau_m));
}

double mmfs_standard_linewidth(double linewidth, double bandwidth, double efficiency) {
  require(linewidth >= 0.0, "linewidth must be >= 0");
  require(bandwidth > 0.0, "measurement bandwidth must be > 0");
  require(efficiency > 0.0 && efficiency <= 1.0, "quantum efficiency must lie in (0, 1]");
  return std::sqrt(linewidth * bandwidth / efficiency);
}

double mmfs_slaumzi(double tau_sl, double transmission, double efficiency, double photon_flux,
                    double tau_m) {
  require(tau_sl > 0.0, "tau_sl must be > 0");
  require(transmission > 0.0 && transmission <= 1.0, "transmission must lie in (0, 1]");
  require(efficiency > 0.0 && efficiency <= 1.0, "quantum efficiency must lie in (0, 1]");
  require(photon_flux > 0.0, "photon flux must be > 0");
  require(tau_m > 0.0, "measurement time must be > 0");
  return std::sqrt(2.0) / (tau_sl * std::sqrt(efficiency * transmission * photon_flux * tau_m));
}

double mmfs_shot_limited(double tau_eff, double detected_photons) {
  require(tau_eff > 0.0, "fringe time constant must be > 0");
  require(detected_photons > 0.0, "detected photon count must be > 0");
  const double noise = std::sqrt(0.5 * detected_photons);
  const double slope = 0.5 * detected_photons * tau_eff;
  return noise / slope;
}

double sef(double tau_sl, double transmission, double tau_coherence, double photon_flux) {
  require(tau_sl > 0.0, "tau_sl must be > 0");
  require(transmission > 0.0 && transmission <= 1.0, "transmission must lie in (0, 1]");
  require(tau_coherence > 0.0, "coherence time must be > 0");
  require(photon_flux > 0.0, "photon flux must be > 0");
  return tau_sl / std::sqrt(2.0) * std::sqrt(transmission * photon_flux / tau_coherence);
}

double mmfs_ratio_quantum_limit(double finesse, double group_index, double transmission, double tau0,
                                double tau_d, double tau_rt) {
  require(finesse > 0.0, "finesse must be > 0");
  require(group_index >= 1.0, "group index must be >= 1");
  require(transmission >= 0.0 && transmission <= 1.0, "transmission must lie in [0, 1]");
  require(tau0 >= 0.0 && tau_d >= 0.0 && tau_rt > 0.0, "time constants must be positive");
  const double tau_sl = tau0 + group_index * tau_d;
  require(tau_sl > 0.0, "tau_sl must be > 0");
  return 2.0 * finesse * tau_rt / (tau_sl * std::sqrt(transmission));
}

double mmfs_ratio_quantum_limit_asymptotic(double finesse, double group_index, double transmission) {
  require(finesse > 0.0, "finesse must be > 0");
  require(group_index >= 1.0, "group index must be >= 1");
  require(transmission >= 0.0 && transmission <= 1.0, "transmission must lie in [0, 1]");
  return 2.0 * finesse / (group_index * std::sqrt(transmission));
}

double umzi_cost(double x) {
  require(x > 0.0, "imbalance parameter must be > 0");
  return std::exp(x) / x;
}

double minimize_umzi_cost(double lo, double hi, double tol) {
  require(lo > 0.0 && hi > lo, "search interval must satisfy 0 < lo < hi");
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = umzi_cost(c), fd = umzi_cost(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = umzi_cost(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = umzi_cost(d);
    }
  }
  return 0.5 * (a + b);
}

UmziOptimum umzi_optimal(const laser::LaserSpec& spec, const laser::CavityFigures& cavity,
                         double detected_photons, double tau_stl) {
  spec.validate();
  require(detected_photons > 0.0, "detected photon count must be > 0");
  require(tau_stl > 0.0, "tau_stl must be > 0");
  UmziOptimum out{};
  out.x_opt = minimize_umzi_cost();
  const double cost = umzi_cost(out.x_opt);
  out.tau_vac_opt = 2.0 * out.x_opt * tau_stl;
  out.mmfs = cost / (std::sqrt(2.0 * detected_photons) * tau_stl);
  out.ratio_to_std = cost / (2.0 * spec.photon_flux() * cavity.decay_time);
  return out;
}

double quantum_time_bound(BoundMode mode, const laser::LaserSpec& spec,
                          const laser::CavityFigures& cavity, double tau_stl) {
  (void)cavity;
  spec.validate();
  require(tau_stl > 0.0, "tau_stl must be > 0");
  if (mode == BoundMode::kStandard) return tau_stl;
  return 2.0 * spec.photon_flux() * tau_stl * tau_stl / (kE * kE);
}

double quantum_time_bound_cavity(const laser::LaserSpec& spec, const laser::CavityFigures& cavity) {
  spec.validate();
  return 2.0 * spec.photon_flux() * cavity.decay_time * cavity.decay_time;
}

ProductCheck product_check(double delta_omega, double tau_m) {
  require(delta_omega > 0.0 && tau_m > 0.0, "product check needs positive inputs");
  const double p = delta_omega * tau_m;
  return {p, p >= 1.0};
}

SensitivityReport evaluate(double tau_sl, double tau_vac, double transmission,
                           double tau_coherence, double photon_flux, const DetectionSpec& det) {
  det.validate();
  SensitivityReport r{};
  r.mmfs_standard =
      mmfs_standard_linewidth(1.0 / tau_coherence, det.bandwidth(), det.quantum_efficiency);
  r.mmfs_slaumzi = mmfs_slaumzi(tau_sl, transmission, det.quantum_efficiency, photon_flux,
                                1.0 / det.bandwidth());
  r.sef = r.mmfs_standard / r.mmfs_slaumzi;
  const double ratio = tau_vac / tau_coherence;
  if (ratio > 0.1) {
    r.regime_notes.push_back(fmt::format(
        "tau_vac/tau_coherence = {:.3g} > 0.1: short-delay approximation is not accurate here",
        ratio));
  }
  return r;
}

}  // namespace slaumzi::sensitivity
