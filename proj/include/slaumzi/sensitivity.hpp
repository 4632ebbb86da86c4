#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slaumzi/laser.hpp"

// Minimum measurable frequency shift (MMFS) and sensitivity enhancement
// factor (SEF) closed forms. Frequencies are rad/s unless a name says Hz.

namespace slaumzi::sensitivity {

struct DetectionSpec {
  double quantum_efficiency = 1.0;  // eta in (0, 1]
  double measurement_time = 1.0;    // tau_M, s
  std::optional<double> measurement_bandwidth;  // Gamma_M, 1/s; defaults to 1/tau_M

  double bandwidth() const;
  void validate() const;
};

struct SensitivityReport {
  double mmfs_standard;
  double mmfs_slaumzi;
  double sef;  // mmfs_standard / mmfs_slaumzi
  std::vector<std::string> regime_notes;
};

// sqrt(Gamma_STL Gamma_M / eta), from the beat-note (Langevin) argument.
double mmfs_standard_quantum(const laser::LaserSpec& spec, const laser::CavityFigures& cavity,
                             const DetectionSpec& det);

// 1 / (tau_c sqrt(2 eta N tau_M)) with tau_M = 1/Gamma_M, from the vacuum-mode
// argument. Algebraically identical to mmfs_standard_quantum.
double mmfs_standard_vacuum_mode(const laser::LaserSpec& spec, const laser::CavityFigures& cavity,
                                 const DetectionSpec& det);

// sqrt(Gamma_L Gamma_M / eta) for a laser of measured linewidth Gamma_L.
double mmfs_standard_linewidth(double linewidth, double bandwidth, double efficiency);

// sqrt(2) / (tau_sl sqrt(eta sigma N tau_M)).
double mmfs_slaumzi(double tau_sl, double transmission, double efficiency, double photon_flux,
                    double tau_m);

// Noise over slope at the half-fringe bias point for S0 detected photons:
// sqrt(S0/2) / (S0 tau / 2). Independent route to mmfs_slaumzi.
double mmfs_shot_limited(double tau_eff, double detected_photons);

// Enhancement factor (tau_sl / sqrt 2) sqrt(sigma N / tau_L).
double sef(double tau_sl, double transmission, double tau_coherence, double photon_flux);

// Ratio delta_omega_SLAUMZI / delta_omega_STD for a quantum-noise-limited laser
// of finesse F (tau_c = F tau_RT): 2 F tau_RT / ((tau0 + n_g tau_d) sqrt sigma).
double mmfs_ratio_quantum_limit(double finesse, double group_index, double transmission, double tau0,
                                double tau_d, double tau_rt);

// Same ratio when n_g tau_d >> tau0 and the medium is as long as the cavity.
double mmfs_ratio_quantum_limit_asymptotic(double finesse, double group_index, double transmission);

struct UmziOptimum {
  double x_opt;        // tau_vac / (2 tau_STL)
  double tau_vac_opt;  // s
  double mmfs;         // rad/s
  double ratio_to_std;
};

// Cost e^x / x whose minimum sets the optimal imbalance.
double umzi_cost(double x);

// Golden-section search for the minimum of umzi_cost on [lo, hi].
double minimize_umzi_cost(double lo = 1e-3, double hi = 10.0, double tol = 1e-9);

UmziOptimum umzi_optimal(const laser::LaserSpec& spec, const laser::CavityFigures& cavity,
                         double detected_photons, double tau_stl);

enum class BoundMode { kStandard, kUmzi };

// Smallest tau_M compatible with delta_omega * tau_M >= 1.
double quantum_time_bound(BoundMode mode, const laser::LaserSpec& spec,
                          const laser::CavityFigures& cavity, double tau_stl);

// 2 N tau_c^2, the bound expressed through the cavity decay time.
double quantum_time_bound_cavity(const laser::LaserSpec& spec, const laser::CavityFigures& cavity);

struct ProductCheck {
  double product;
  bool satisfies_bound;
};

ProductCheck product_check(double delta_omega, double tau_m);

// Full comparison for one SLAUMZI operating point against a laser of linewidth
// 1/tau_coherence. Adds a note when tau_vac / tau_coherence exceeds 0.1.
SensitivityReport evaluate(double tau_sl, double tau_vac, double transmission,
                           double tau_coherence, double photon_flux, const DetectionSpec& det);

}  // namespace slaumzi::sensitivity
