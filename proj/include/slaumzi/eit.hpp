#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

// Steady-state optical Bloch solver for a four-level double-Lambda system
// (ground |1>, |2>; excited |3>, |4>), Doppler averaging over a Maxwell-Boltzmann
// velocity distribution and slice-by-slice propagation through a vapor cell.
// Level indices in code are zero-based: |1> -> 0 ... |4> -> 3.

namespace slaumzi::eit {

using Density = Eigen::Matrix4cd;

struct FourLevelScheme {
  double pump_rabi_13 = 0.0;  // rad/s
  double pump_rabi_14 = 0.0;
  double probe_rabi_23 = 0.0;
  double probe_rabi_24 = 0.0;
  double decay_31 = 0.0;  // 1/s
  double decay_32 = 0.0;
  double decay_41 = 0.0;
  double decay_42 = 0.0;
  double ground_exchange = 0.0;  // 1/s, each direction
  double pump_detuning = 0.0;    // rad/s, from the 1-4 line
  double probe_detuning = 0.0;   // rad/s, from the 2-4 line
  double excited_splitting = 0.0;  // rad/s, |4> above |3>

  // Rb85 D1 parameter set with both lasers on resonance with |4>.
  static FourLevelScheme reference();
  void validate() const;
};

struct CellConfig {
  double temperature = 343.15;  // K
  double length = 0.08;         // m
  std::size_t slice_count = 10;
  double atom_mass = 0.0;       // kg
  double number_density = 0.0;  // 1/m^3, calibration scalar
  double dipole_constant = 0.0;  // 2 d^2 / (eps0 hbar), m^3/s
  double wavelength = 0.0;       // m
  std::size_t velocity_points = 801;
  double velocity_span = 4.0;  // thermal widths on each side

  static CellConfig reference();
  double wavenumber() const;
  double thermal_velocity() const;  // sqrt(kB T / m)
  void validate() const;
};

// Solves L(rho) = 0 with unit trace. velocity_shift (= k v, rad/s) is
// subtracted from both laser detunings. Throws NumericalError when the
// steady state is not unique.
Density steady_state(const FourLevelScheme& scheme, double velocity_shift = 0.0);

// chi = -K n (rho_32 + (Omega_24/Omega_23) rho_42) / Omega_23.
std::complex<double> probe_susceptibility(const Density& rho, const FourLevelScheme& scheme,
                                          double number_density, double dipole_constant);

// Same bookkeeping on the pump transitions 1-3 and 1-4.
std::complex<double> pump_susceptibility(const Density& rho, const FourLevelScheme& scheme,
                                         double number_density, double dipole_constant);

struct InvariantStats {
  double max_hermiticity_error = 0.0;
  double max_trace_error = 0.0;
  double min_population = 1.0;
  double max_population = 0.0;
  std::size_t solves = 0;

  void record(const Density& rho);
  void merge(const InvariantStats& other);
  bool ok(double tol = 1e-10) const;
};

struct VelocityGrid {
  std::vector<double> velocities;  // m/s
  std::vector<double> weights;     // sum to 1
};

// Symmetric grid; throws InvalidArgument when coarser than 5 points per thermal width.
VelocityGrid velocity_grid(const CellConfig& cell);

struct DopplerResult {
  std::complex<double> probe_chi;
  std::complex<double> pump_chi;
  double weight_sum;
  InvariantStats invariants;
};

// Maxwell-Boltzmann-weighted susceptibilities at the scheme's detunings.
DopplerResult doppler_average(const FourLevelScheme& scheme, const CellConfig& cell);

struct PropagationResult {
  double probe_transmission;
  double pump_transmission;
  double phase_index;  // 1 + <Re chi>/2 along the cell
  bool opaque;
  std::vector<double> slice_probe_intensity;  // after each slice
  InvariantStats invariants;
};

// Propagates probe and pump through cell.slice_count slices, rescaling the
// Rabi frequencies by the surviving field amplitude before each slice.
// probe_offset (rad/s) is added to scheme.probe_detuning.
PropagationResult propagate_point(const FourLevelScheme& scheme, const CellConfig& cell,
                                  double probe_offset = 0.0);

struct ProbeSpectrum {
  std::vector<double> detunings;  // probe offsets, rad/s
  std::vector<double> transmission;
  std::vector<double> phase_index;
  std::vector<double> dn_ddelta;  // s/rad
  double group_index_at_center = 1.0;
  double transmission_at_center = 1.0;
  bool opaque = false;
  InvariantStats invariants;
};

inline constexpr double kGroupIndexStep = 2.0e5;  // rad/s

// n + omega dn/ddelta at zero probe offset by central differences of step h.
double group_index_at_center(const FourLevelScheme& scheme, const CellConfig& cell,
                             double h = kGroupIndexStep);

ProbeSpectrum propagate_sliced(const FourLevelScheme& scheme, const CellConfig& cell,
                               const std::vector<double>& detunings);

double transmission_at_center(const ProbeSpectrum& spectrum);

// Number density giving the requested probe transmission at zero offset
// (all other parameters fixed). Log-bisection; transmission decreases
// monotonically with density.
double calibrate_density(const FourLevelScheme& scheme, CellConfig cell, double target_transmission,
                         double lo = 1e10, double hi = 1e22);

// Evenly spaced offsets on [-span, span].
std::vector<double> detuning_grid(double span, std::size_t points);

}  // namespace slaumzi::eit
