#include "slaumzi/noise.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "slaumzi/constants.hpp"
#include "slaumzi/error.hpp"
#include "slaumzi/parallel.hpp"

namespace slaumzi::noise {

using constants::kPi;
using constants::kTwoPi;
using detail::require;

NoiseChainConfig NoiseChainConfig::c0_reference() {
  NoiseChainConfig c;
  c.term_count = 5000000;
  c.noise_bandwidth = 1.689e9;
  return c;
}

void NoiseChainConfig::validate() const {
  require(rms_voltage >= 0.0 && std::isfinite(rms_voltage), "noise.rms_voltage must be >= 0");
  require(noise_bandwidth > 0.0, "noise.bandwidth must be > 0");
  require(amplifier_gain > 0.0, "noise.gain must be > 0");
  require(mixer_frequency > 0.0, "noise.mixer_frequency must be > 0");
  require(mixer_normalization > 0.0, "noise.mixer_normalization must be > 0");
  require(mixer_scale > 0.0, "noise.mixer_scale must be > 0");
  require(lpf_bandwidth > 0.0, "noise.lpf_bandwidth must be > 0");
  require(amplifier_band_high > amplifier_band_low, "noise amplifier band is empty");
  const double floor = 100.0 * noise_bandwidth / lpf_bandwidth;
  require(static_cast<double>(term_count) >= floor,
          "noise.terms must be at least 100 * bandwidth / lpf_bandwidth");
  require(mixer_frequency >= amplifier_band_low && mixer_frequency <= amplifier_band_high,
          "noise.mixer_frequency lies outside the amplifier band");
}

void SinusoidSet::append(const SinusoidSet& o) {
  frequency.insert(frequency.end(), o.frequency.begin(), o.frequency.end());
  phase.insert(phase.end(), o.phase.begin(), o.phase.end());
  amplitude.insert(amplitude.end(), o.amplitude.begin(), o.amplitude.end());
}

namespace {

double input_rms(const NoiseChainConfig& cfg) {
  return cfg.dc_blocker_loading ? kDcBlockerLoading * cfg.rms_voltage : cfg.rms_voltage;
}

}  // namespace

SinusoidSet synth_terms(const NoiseChainConfig& cfg, Rng& rng, double keep_lo, double keep_hi) {
  cfg.validate();
  const std::uint64_t m = cfg.term_count;
  const double f0 = cfg.noise_bandwidth / static_cast<double>(m);
  const double a = std::sqrt(2.0) * input_rms(cfg) / std::sqrt(static_cast<double>(m));
  const bool all = keep_hi < keep_lo;
  SinusoidSet s;
  if (all) {
    s.frequency.reserve(m);
    s.phase.reserve(m);
    s.amplitude.reserve(m);
  }
  for (std::uint64_t k = 0; k < m; ++k) {
    const double f = f0 * static_cast<double>(1 + uniform_below(rng, m));
    const double phi = kTwoPi * (1.0 - uniform01(rng));  // (0, 2 pi]
    if (all || (f >= keep_lo && f <= keep_hi)) {
      s.frequency.push_back(f);
      s.phase.push_back(phi);
      s.amplitude.push_back(a);
    }
  }
  return s;
}

std::vector<double> evaluate(const SinusoidSet& terms, double duration, double sample_rate) {
  require(duration > 0.0 && sample_rate > 0.0, "duration and sample rate must be > 0");
  const auto n = static_cast<std::size_t>(std::llround(duration * sample_rate));
  require(n >= 2, "series needs at least two samples");
  std::vector<double> out(n, 0.0);
  constexpr std::size_t kRenormalize = 1024;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (terms.amplitude[k] == 0.0) continue;
    const double w = kTwoPi * terms.frequency[k] / sample_rate;
    const std::complex<double> rot(std::cos(w), std::sin(w));
    std::complex<double> z(std::cos(terms.phase[k]), std::sin(terms.phase[k]));
    const double a = terms.amplitude[k];
    for (std::size_t i = 0; i < n; ++i) {
      out[i] += a * z.imag();
      z *= rot;
      if ((i + 1) % kRenormalize == 0) {
        const double t = w * static_cast<double>(i + 1) + terms.phase[k];
        z = {std::cos(t), std::sin(t)};
      }
    }
  }
  return out;
}

std::vector<double> synth_white_noise(const NoiseChainConfig& cfg, double duration,
                                      double sample_rate) {
  cfg.validate();
  if (!(sample_rate > 2.0 * cfg.noise_bandwidth)) {
    throw InvalidArgument("white-noise series would alias: sample_rate must exceed 2 * bandwidth");
  }
  Rng rng = substream(cfg.seed, StreamTag::kWhiteNoise);
  return evaluate(synth_terms(cfg, rng), duration, sample_rate);
}

SinusoidSet spectrum_analyzer_mask(const SinusoidSet& input, const NoiseChainConfig& cfg) {
  cfg.validate();
  const double gain = cfg.amplifier_gain * cfg.mixer_scale;
  SinusoidSet out;
  for (std::size_t k = 0; k < input.size(); ++k) {
    const double df = input.frequency[k] - cfg.mixer_frequency;
    if (std::abs(df) >= cfg.lpf_bandwidth) continue;
    out.frequency.push_back(df);
    out.phase.push_back(input.phase[k] + 0.5 * kPi);  // sin(x + pi/2) = cos(x)
    out.amplitude.push_back(gain * input.amplitude[k]);
  }
  return out;
}

std::vector<double> spectrum_analyzer_chain(const std::vector<double>& series, double sample_rate,
                                            const NoiseChainConfig& cfg) {
  cfg.validate();
  require(sample_rate > 2.0 * cfg.mixer_frequency, "sample rate must exceed twice the mixer frequency");
  const double v_r = cfg.mixer_scale * cfg.mixer_normalization;
  const double w = kTwoPi * cfg.mixer_frequency / sample_rate;
  const double alpha = 1.0 - std::exp(-kTwoPi * cfg.lpf_bandwidth / sample_rate);
  std::vector<double> out(series.size());
  double y = 0.0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double mixed = cfg.amplifier_gain * series[i] * 2.0 * v_r *
                         std::sin(w * static_cast<double>(i)) / cfg.mixer_normalization;
    y += alpha * (mixed - y);
    out[i] = y;
  }
  return out;
}

double standard_deviation(const std::vector<double>& x) {
  require(!x.empty(), "standard deviation of an empty series");
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double var = 0.0;
  for (double v : x) var += (v - mean) * (v - mean);
  return std::sqrt(var / static_cast<double>(x.size()));
}

double chain_gain_closed_form(const NoiseChainConfig& cfg) {
  cfg.validate();
  return cfg.amplifier_gain * cfg.mixer_scale * std::sqrt(2.0 * cfg.lpf_bandwidth / cfg.noise_bandwidth);
}

C0Result c0_monte_carlo(const NoiseChainConfig& cfg, std::size_t repetitions, double duration,
                        double sample_rate) {
  cfg.validate();
  require(repetitions >= 2, "C0 Monte Carlo needs at least two repetitions");
  require(input_rms(cfg) > 0.0, "C0 Monte Carlo needs a non-zero input rms");
  require(sample_rate > 2.0 * cfg.lpf_bandwidth, "sample rate must exceed twice the LPF bandwidth");
  C0Result r{};
  r.ratios.resize(repetitions);
  const double lo = cfg.mixer_frequency - cfg.lpf_bandwidth;
  const double hi = cfg.mixer_frequency + cfg.lpf_bandwidth;
  parallel_for(repetitions, [&](std::size_t i) {
    Rng rng = substream(cfg.seed, StreamTag::kC0, i);
    const SinusoidSet band = synth_terms(cfg, rng, lo, hi);
    const auto series = evaluate(spectrum_analyzer_mask(band, cfg), duration, sample_rate);
    r.ratios[i] = standard_deviation(series) / input_rms(cfg);
  });
  double sum = 0.0;
  for (double v : r.ratios) sum += v;
  r.c0 = sum / static_cast<double>(repetitions);
  double var = 0.0;
  for (double v : r.ratios) var += (v - r.c0) * (v - r.c0);
  var /= static_cast<double>(repetitions - 1);
  r.standard_error = std::sqrt(var / static_cast<double>(repetitions));
  if (repetitions < kMinC0Repetitions) {
    r.warning = "fewer than 50 repetitions: C0 estimate has low statistical power";
  }
  return r;
}

void ApdModel::validate() const {
  require(conversion > 0.0, "apd.conversion must be > 0");
  require(photon_energy > 0.0, "apd.photon_energy must be > 0");
  require(bandwidth > 0.0, "apd.bandwidth must be > 0");
  require(excess_offset >= 0.0 && sd_offset >= 0.0, "apd offsets must be >= 0");
}

ApdResponse apd_response(double optical_power, const ApdModel& apd, double tau_window,
                         std::size_t n_samples, std::uint64_t seed, std::uint64_t stream) {
  apd.validate();
  require(optical_power >= 0.0, "optical power must be >= 0");
  require(tau_window > 0.0, "integration window must be > 0");
  ApdResponse r{};
  r.v_dc = apd.conversion * optical_power;
  r.delta_v = std::sqrt(apd.conversion * apd.photon_energy / tau_window) * std::sqrt(r.v_dc) +
              apd.excess_offset;
  Rng rng = substream(seed, StreamTag::kApd, stream);
  std::normal_distribution<double> normal(0.0, 1.0);
  r.samples.resize(n_samples);
  for (double& s : r.samples) s = r.v_dc + r.delta_v * normal(rng);
  return r;
}

double shot_noise_sd(double v_dc, const ApdModel& apd, double lpf_bandwidth) {
  apd.validate();
  require(v_dc >= 0.0, "V_DC must be >= 0");
  require(lpf_bandwidth > 0.0, "LPF bandwidth must be > 0");
  return std::sqrt(2.0 * lpf_bandwidth / apd.bandwidth) *
             std::sqrt(apd.conversion * apd.photon_energy * apd.bandwidth) * std::sqrt(v_dc) +
         apd.sd_offset;
}

void BalancedPair::validate() const {
  require(peak_signal >= 0.0, "balanced.peak_signal must be >= 0");
  require(intensity_noise_ratio >= 0.0, "balanced.alpha must be >= 0");
  require(residual_fraction >= 0.0 && residual_fraction <= 1.0, "balanced.p must lie in [0, 1]");
  require(extra_noise >= 0.0, "balanced.extra_noise must be >= 0");
}

BalancedResult balanced_subtract(const BalancedPair& pair, double g) {
  pair.validate();
  require(g > 0.0, "phase-mismatch gain must be > 0");
  BalancedResult r{};
  const double c = std::cos(pair.phase);
  r.port1 = 0.5 * pair.peak_signal * (1.0 + c);
  r.port2 = 0.5 * pair.peak_signal * (1.0 - c);
  r.mean = r.port1 - g * r.port2;
  r.intensity_noise_correlated = pair.intensity_noise_ratio * r.mean;
  r.intensity_noise_residual =
      pair.residual_fraction * pair.intensity_noise_ratio * (r.port1 + g * r.port2);
  r.shot_noise = std::sqrt(r.port1 + g * g * r.port2);
  r.total_noise = std::sqrt(r.intensity_noise_correlated * r.intensity_noise_correlated +
                            r.intensity_noise_residual * r.intensity_noise_residual +
                            r.shot_noise * r.shot_noise + pair.extra_noise * pair.extra_noise);
  r.slope = std::abs(0.5 * pair.peak_signal * (1.0 + g) * std::sin(pair.phase));
  r.mmps = r.slope > 0.0 ? r.total_noise / r.slope : std::numeric_limits<double>::infinity();
  return r;
}

double mmps_with_excess(double peak_signal, double extra_noise) {
  require(peak_signal > 0.0, "S0 must be > 0");
  return std::sqrt(1.0 + extra_noise * extra_noise / peak_signal) / std::sqrt(peak_signal);
}

SinusoidSet excess_noise_terms(double v_dc, double coefficient, double corner, std::size_t terms,
                               Rng& rng) {
  require(coefficient >= 0.0 && corner > 0.0 && terms >= 1, "invalid excess-noise parameters");
  SinusoidSet s;
  const double a = std::sqrt(2.0) * coefficient * v_dc / std::sqrt(static_cast<double>(terms));
  for (std::size_t k = 0; k < terms; ++k) {
    s.frequency.push_back(corner * (1.0 - uniform01(rng)));
    s.phase.push_back(kTwoPi * (1.0 - uniform01(rng)));
    s.amplitude.push_back(a);
  }
  return s;
}

std::vector<ShotSweepPoint> shot_sweep(const NoiseChainConfig& cfg, const ApdModel& apd,
                                       const std::vector<double>& v_dc, double excess_coefficient,
                                       double excess_corner, double duration, double sample_rate) {
  apd.validate();
  require(!v_dc.empty(), "shot sweep needs at least one V_DC");
  std::vector<ShotSweepPoint> out(v_dc.size());
  parallel_for(v_dc.size(), [&](std::size_t i) {
    require(v_dc[i] >= 0.0, "V_DC must be >= 0");
    NoiseChainConfig c = cfg;
    c.noise_bandwidth = apd.bandwidth;
    c.rms_voltage = std::sqrt(apd.conversion * apd.photon_energy * apd.bandwidth) * std::sqrt(v_dc[i]);
    const auto floor = static_cast<std::uint64_t>(std::ceil(100.0 * c.noise_bandwidth / c.lpf_bandwidth));
    c.term_count = std::max(c.term_count, floor);
    Rng rng = substream(cfg.seed, StreamTag::kWhiteNoise, i);
    SinusoidSet terms = synth_terms(c, rng, c.mixer_frequency - c.lpf_bandwidth,
                                    c.mixer_frequency + c.lpf_bandwidth);
    if (excess_coefficient > 0.0) {
      Rng xr = substream(cfg.seed, StreamTag::kExcessNoise, i);
      terms.append(excess_noise_terms(v_dc[i], excess_coefficient, excess_corner, 2000, xr));
    }
    const auto series = evaluate(spectrum_analyzer_mask(terms, c), duration, sample_rate);
    out[i] = {v_dc[i], standard_deviation(series)};
  });
  return out;
}

}  // namespace slaumzi::noise
