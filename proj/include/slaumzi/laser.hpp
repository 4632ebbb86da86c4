#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace slaumzi::laser {

struct LaserSpec {
  double wavelength = 0.0;                   // m
  double output_power = 0.0;                 // W
  double cavity_length = 0.0;                // m
  double output_coupler_reflectivity = 0.0;  // R in (0, 1)
  std::optional<double> measured_linewidth;  // Gamma_L, rad/s
  double henry_factor = 1.0;                 // multiplier on the STL

  double angular_frequency() const;  // rad/s
  double photon_energy() const;      // J
  double photon_flux() const;        // photons/s
  void validate() const;
};

// kTableConsistent: gamma_c = (c/L)(1-R)/(2 pi sqrt R).
// kLiteral: gamma_c = (c/L)(1-R)/(pi sqrt R), twice the former.
enum class DecayConvention { kTableConsistent, kLiteral };

struct CavityFigures {
  double decay_rate;       // gamma_c, 1/s
  double decay_time;       // tau_c = 1/gamma_c
  double round_trip_time;  // tau_RT = L/c
  double finesse;          // tau_c / tau_RT

  // 2 pi tau_c / tau_RT, the free-spectral-range over linewidth convention.
  double finesse_standard() const;
};

CavityFigures cavity_decay(const LaserSpec& spec,
                           DecayConvention convention = DecayConvention::kTableConsistent);

struct StlResult {
  double linewidth;       // Gamma_STL, rad/s (includes the Henry factor)
  double coherence_time;  // tau_STL = 1/Gamma_STL
};

// Gamma_STL = hbar omega gamma_c^2 / (2 P) = gamma_c^2 / (2 N).
StlResult schawlow_townes(const LaserSpec& spec, const CavityFigures& cavity);

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::uint64_t> counts;
};

struct PhaseJumpResult {
  double mean_cos;
  double mean_sin;
  double stderr_cos;
  double stderr_sin;
  Histogram histogram;  // of the sampled phase difference
};

// Samples the phase difference accumulated over tau_gap by a laser of
// coherence time tau_coherence: Gaussian, zero mean, variance tau_gap/tau_coherence.
PhaseJumpResult phase_jump_monte_carlo(double tau_gap, double tau_coherence,
                                       std::uint64_t n_samples, std::uint64_t seed,
                                       std::size_t bins = 64);

// exp(-tau_gap / (2 tau_coherence)), the closed form for <cos dphi>.
double mean_cos_closed_form(double tau_gap, double tau_coherence);

// <cos dphi> by direct Simpson quadrature over the same Gaussian.
double mean_cos_quadrature(double tau_gap, double tau_coherence);

struct LangevinResult {
  double delta_mu;        // std(psi(tau_m)) / tau_m, rad/s
  double standard_error;  // of delta_mu
  double analytic;        // sqrt(2D'/tau_m)
};

// Euler-Maruyama integration of d psi/dt = mu + f(t) with
// <f(t) f(t')> = 2D' delta(t - t'). diffusion_2d is 2D' in rad^2/s.
LangevinResult langevin_beat_monte_carlo(double diffusion_2d, double tau_m,
                                         std::uint64_t n_trajectories, std::uint64_t seed,
                                         std::uint64_t steps = 10000, double drift = 0.0);

inline constexpr std::uint64_t kMinLangevinSteps = 10000;

}  // namespace slaumzi::laser
