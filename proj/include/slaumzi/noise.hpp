#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slaumzi/random.hpp"

// Detection-noise Monte Carlo: white noise as a random sum of sinusoids, the
// DC blocker -> amplifier -> mixer -> low-pass "effective spectrum analyzer",
// avalanche photodiode statistics and balanced two-port subtraction.
// Frequencies in this module are ordinary Hz.

namespace slaumzi::noise {

inline constexpr double kDcBlockerLoading = 0.73;

struct NoiseChainConfig {
  double rms_voltage = 1.0;         // A0 = V_STD, V
  std::uint64_t term_count = 50000;  // m
  double noise_bandwidth = 450e3;   // B_w, Hz
  double amplifier_gain = 393.0;    // g_tot
  double mixer_frequency = 500e3;   // f_R, Hz
  double mixer_normalization = 0.66;  // V_nor, V
  double mixer_scale = 0.89;        // beta, V_R = beta V_nor
  double lpf_bandwidth = 191e3;     // B_c, Hz
  double amplifier_band_low = 0.0;  // Hz
  double amplifier_band_high = 1e12;  // Hz
  bool dc_blocker_loading = false;  // scale the input by 0.73
  std::uint64_t seed = 1;

  // Calibrated white-noise bandwidth for the C0 chain (see README).
  static NoiseChainConfig c0_reference();
  void validate() const;
};

// Sum of a_k sin(2 pi f_k t + phi_k).
struct SinusoidSet {
  std::vector<double> frequency;  // Hz
  std::vector<double> phase;      // rad
  std::vector<double> amplitude;  // V

  std::size_t size() const { return frequency.size(); }
  void append(const SinusoidSet& other);
};

// Draws the m terms of the white-noise sum: f_k = f0 j with j uniform on
// [1, m], f0 = B_w/m, phi_k uniform on (0, 2 pi], amplitude sqrt(2) A0 / sqrt(m).
// Terms outside [keep_lo, keep_hi] are drawn but discarded, so a restricted
// draw is the corresponding subset of the full draw.
SinusoidSet synth_terms(const NoiseChainConfig& cfg, Rng& rng, double keep_lo = 0.0,
                        double keep_hi = -1.0);

// Samples the sum at t = i / sample_rate for duration seconds.
std::vector<double> evaluate(const SinusoidSet& terms, double duration, double sample_rate);

// Time series of the white-noise source. Requires sample_rate > 2 B_w.
std::vector<double> synth_white_noise(const NoiseChainConfig& cfg, double duration,
                                      double sample_rate);

// Spectral-mask form of the chain: each term with |f_k - f_R| < B_c becomes
// g beta a_k cos(2 pi (f_k - f_R) t + phi_k); all others are removed.
SinusoidSet spectrum_analyzer_mask(const SinusoidSet& input, const NoiseChainConfig& cfg);

// Time-domain form for arbitrary series: gain, product with
// 2 V_R sin(2 pi f_R t) / V_nor, then a single-pole low-pass at B_c.
std::vector<double> spectrum_analyzer_chain(const std::vector<double>& series, double sample_rate,
                                            const NoiseChainConfig& cfg);

// Population standard deviation.
double standard_deviation(const std::vector<double>& x);

// Closed-form output-to-input ratio of the mask chain for m -> infinity:
// g beta sqrt(2 B_c / B_w).
double chain_gain_closed_form(const NoiseChainConfig& cfg);

struct C0Result {
  double c0;
  double standard_error;
  std::vector<double> ratios;  // sigma(S_F) / V_STD per repetition
  std::optional<std::string> warning;
};

inline constexpr std::size_t kMinC0Repetitions = 50;

// Mean over repetitions of sigma(S_F)/V_STD, each repetition a fresh draw of
// the white-noise terms passed through the mask chain and sampled for
// `duration` at `sample_rate`.
C0Result c0_monte_carlo(const NoiseChainConfig& cfg, std::size_t repetitions,
                        double duration = 7e-3, double sample_rate = 1e6);

struct ApdModel {
  double conversion = 2.58e6;    // k, V/W
  double photon_energy = 0.0;    // hbar omega, J
  double bandwidth = 10e6;       // f_APD = 1/tau_APD, Hz
  double excess_offset = 0.0;    // C_exc, V
  double sd_offset = 0.0;        // C_sd, V

  void validate() const;
};

struct ApdResponse {
  double v_dc;
  double delta_v;
  std::vector<double> samples;  // V_DC + delta_v * N(0, 1)
};

// V_DC = k P and delta_v = sqrt(k hbar omega / tau) sqrt(V_DC) + C_exc.
ApdResponse apd_response(double optical_power, const ApdModel& apd, double tau_window,
                         std::size_t n_samples, std::uint64_t seed, std::uint64_t stream = 0);

// sqrt(2 f_LPF / f_APD) sqrt(k hbar omega f_APD) sqrt(V_DC) + C_sd.
double shot_noise_sd(double v_dc, const ApdModel& apd, double lpf_bandwidth);

struct BalancedPair {
  double peak_signal = 1.0;          // S0, photons
  double phase = 0.0;                // phi, rad
  double intensity_noise_ratio = 0.0;  // alpha
  double residual_fraction = 0.0;    // p
  double extra_noise = 0.0;          // Delta S_exc, photons

  void validate() const;
};

struct BalancedResult {
  double port1;  // S1 = (S0/2)(1 + cos phi)
  double port2;  // S2 = (S0/2)(1 - cos phi)
  double mean;   // S1 - g S2
  double intensity_noise_correlated;  // alpha (S1 - g S2)
  double intensity_noise_residual;    // p alpha (S1 + g S2)
  double shot_noise;                  // sqrt(S1 + g^2 S2)
  double total_noise;                 // quadrature sum including extra noise
  double slope;                       // |dS_D/dphi|
  double mmps;                        // total_noise / slope
};

BalancedResult balanced_subtract(const BalancedPair& pair, double phase_mismatch_gain = 1.0);

// (1/sqrt S0) sqrt(1 + Delta S_exc^2 / S0).
double mmps_with_excess(double peak_signal, double extra_noise);

// Low-frequency excess noise: a sinusoid sum over (0, corner) with total rms
// coefficient * v_dc, standing in for offset-lock noise that grows at low frequency.
SinusoidSet excess_noise_terms(double v_dc, double coefficient, double corner, std::size_t terms,
                               Rng& rng);

struct ShotSweepPoint {
  double v_dc;
  double sigma;
};

// sigma(S_F) versus V_DC: shot noise of bandwidth f_APD (plus optional excess
// noise below excess_corner) through the mask chain at cfg.mixer_frequency.
std::vector<ShotSweepPoint> shot_sweep(const NoiseChainConfig& cfg, const ApdModel& apd,
                                       const std::vector<double>& v_dc, double excess_coefficient,
                                       double excess_corner, double duration, double sample_rate);

}  // namespace slaumzi::noise
