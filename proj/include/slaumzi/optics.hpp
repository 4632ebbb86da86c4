#pragma once

// Interferometer geometry, dispersive media and the unbalanced Mach-Zehnder
// signal model. All frequencies are angular (rad/s).

namespace slaumzi::optics {

struct InterferometerGeometry {
  double imbalance_length = 0.0;  // L0, m
  double medium_length = 0.0;     // Ls, m

  // Geometry whose free-space delays are tau0 and tau_d (s).
  static InterferometerGeometry from_delays(double tau0, double tau_d);

  double tau0() const;
  double tau_d() const;
  void validate() const;
};

struct DispersiveMedium {
  double group_index = 1.0;
  double phase_index = 1.0;
  double transmission = 1.0;  // on-resonance normalized transmission, sigma

  static DispersiveMedium vacuum() { return {}; }
  void validate() const;
};

struct TimeConstants {
  double tau0;
  double tau_d;
  double tau_vac;  // tau0 + tau_d
  double tau_nd;   // tau0 + n tau_d, arrival-time lag of phase jumps
  double tau_sl;   // tau0 + n_g tau_d, fringe time constant
};

TimeConstants time_constants(const InterferometerGeometry& geom, const DispersiveMedium& medium);

// Ratio of slow-light to vacuum fringe density, tau_sl / tau_vac.
double fringe_magnification(const InterferometerGeometry& geom, const DispersiveMedium& medium);

// Inverse of fringe_magnification for the group index.
double group_index_from_magnification(const InterferometerGeometry& geom, double magnification);

// Fringe visibility factor exp(-tau_contrast / (2 tau_coherence)).
double contrast_factor(double tau_contrast, double tau_coherence);

// S0 cos^2((phase_offset + tau_eff * detuning) / 2).
double signal_ideal(double detuning, double tau_eff, double peak, double phase_offset = 0.0);

// Finite-linewidth signal: the fringe period is set by tau_scale and the
// contrast by the arrival lag tau_contrast relative to the coherence time.
double signal_with_linewidth(double detuning, double tau_scale, double tau_contrast,
                             double tau_coherence, double peak, double phase_offset = 0.0);

struct SignalPoint {
  double detuning;
  double signal;
  double peak;
};

}  // namespace slaumzi::optics
