#include "slaumzi/laser.hpp"

#include <cmath>
#include <random>

#include "slaumzi/constants.hpp"
#include "slaumzi/error.hpp"
#include "slaumzi/parallel.hpp"
#include "slaumzi/random.hpp"

namespace slaumzi::laser {

using namespace slaumzi::constants;
using detail::require;

double LaserSpec::angular_frequency() const { return kTwoPi * kSpeedOfLight / wavelength; }
double LaserSpec::photon_energy() const { return kHbar * angular_frequency(); }
double LaserSpec::photon_flux() const { return output_power / photon_energy(); }

void LaserSpec::validate() const {
  require(wavelength > 0.0 && std::isfinite(wavelength), "laser.wavelength must be > 0");
  require(output_power > 0.0 && std::isfinite(output_power), "laser.output_power must be > 0");
  require(cavity_length > 0.0 && std::isfinite(cavity_length), "laser.cavity_length must be > 0");
  require(output_coupler_reflectivity > 0.0 && output_coupler_reflectivity < 1.0,
          "laser.reflectivity must lie in (0, 1)");
  require(henry_factor >= 1.0, "laser.henry_factor must be >= 1");
  if (measured_linewidth) require(*measured_linewidth > 0.0, "laser.linewidth must be > 0");
}

double CavityFigures::finesse_standard() const { return kTwoPi * finesse; }

CavityFigures cavity_decay(const LaserSpec& spec, DecayConvention convention) {
  require(spec.cavity_length > 0.0, "laser.cavity_length must be > 0");
  const double r = spec.output_coupler_reflectivity;
  require(r > 0.0 && r < 1.0, "laser.reflectivity must lie in (0, 1)");
  const double denom = convention == DecayConvention::kLiteral ? kPi : kTwoPi;
  const double gamma = kSpeedOfLight / spec.cavity_length * (1.0 - r) / (denom * std::sqrt(r));
  const double tau_c = 1.0 / gamma;
  const double tau_rt = spec.cavity_length / kSpeedOfLight;
  return {gamma, tau_c, tau_rt, tau_c / tau_rt};
}

StlResult schawlow_townes(const LaserSpec& spec, const CavityFigures& cavity) {
  spec.validate();
  require(cavity.decay_rate > 0.0, "cavity decay rate must be > 0");
  const double gamma = spec.henry_factor * spec.photon_energy() * cavity.decay_rate *
                       cavity.decay_rate / (2.0 * spec.output_power);
  return {gamma, 1.0 / gamma};
}

double mean_cos_closed_form(double tau_gap, double tau_coherence) {
  require(tau_gap >= 0.0, "tau_gap must be >= 0");
  require(tau_coherence > 0.0, "coherence time must be > 0");
  return std::exp(-tau_gap / (2.0 * tau_coherence));
}

double mean_cos_quadrature(double tau_gap, double tau_coherence) {
  require(tau_gap >= 0.0, "tau_gap must be >= 0");
  require(tau_coherence > 0.0, "coherence time must be > 0");
  const double sd = std::sqrt(tau_gap / tau_coherence);
  if (sd == 0.0) return 1.0;
  // Composite Simpson over +-12 sd of the Gaussian density.
  const int n = 4000;
  const double a = -12.0 * sd;
  const double h = 24.0 * sd / n;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = a + i * h;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += w * std::cos(x) * std::exp(-0.5 * x * x / (sd * sd));
  }
  return sum * h / 3.0 / (sd * std::sqrt(kTwoPi));
}

PhaseJumpResult phase_jump_monte_carlo(double tau_gap, double tau_coherence,
                                       std::uint64_t n_samples, std::uint64_t seed,
                                       std::size_t bins) {
  require(tau_gap >= 0.0, "tau_gap must be >= 0");
  require(tau_coherence > 0.0, "coherence time must be > 0");
  require(n_samples >= 1000, "phase-jump Monte Carlo needs at least 1000 samples");
  require(bins >= 1, "histogram needs at least one bin");

  const double sd = std::sqrt(tau_gap / tau_coherence);
  PhaseJumpResult out{};
  const double span = sd > 0.0 ? 4.0 * sd : 1.0;
  out.histogram = {-span, span, std::vector<std::uint64_t>(bins, 0)};

  Rng rng = substream(seed, StreamTag::kPhaseJump);
  std::normal_distribution<double> normal(0.0, 1.0);
  double sc = 0.0, sc2 = 0.0, ss = 0.0, ss2 = 0.0;
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    const double dphi = sd * normal(rng);
    const double c = std::cos(dphi);
    const double s = std::sin(dphi);
    sc += c;
    sc2 += c * c;
    ss += s;
    ss2 += s * s;
    const double u = (dphi + span) / (2.0 * span);
    if (u >= 0.0 && u < 1.0) ++out.histogram.counts[static_cast<std::size_t>(u * bins)];
  }
  const double n = static_cast<double>(n_samples);
  out.mean_cos = sc / n;
  out.mean_sin = ss / n;
  out.stderr_cos = std::sqrt(std::max(0.0, sc2 / n - out.mean_cos * out.mean_cos) / (n - 1.0));
  out.stderr_sin = std::sqrt(std::max(0.0, ss2 / n - out.mean_sin * out.mean_sin) / (n - 1.0));
  return out;
}

LangevinResult langevin_beat_monte_carlo(double diffusion_2d, double tau_m,
                                         std::uint64_t n_trajectories, std::uint64_t seed,
                                         std::uint64_t steps, double drift) {
  require(diffusion_2d >= 0.0, "diffusion coefficient must be >= 0");
  require(tau_m > 0.0, "measurement time must be > 0");
  require(n_trajectories >= 2, "need at least two trajectories");
  if (steps < kMinLangevinSteps) {
    throw InvalidArgument("Langevin integration needs at least 10000 steps per measurement time");
  }
  const double dt = tau_m / static_cast<double>(steps);
  const double kick = std::sqrt(diffusion_2d * dt);

  std::vector<double> endpoint(n_trajectories);
  parallel_for(n_trajectories, [&](std::size_t j) {
    Rng rng = substream(seed, StreamTag::kLangevin, j);
    std::normal_distribution<double> normal(0.0, 1.0);
    double psi = 0.0;
    for (std::uint64_t s = 0; s < steps; ++s) psi += drift * dt + kick * normal(rng);
    endpoint[j] = psi;
  });

  double mean = 0.0;
  for (double v : endpoint) mean += v;
  mean /= static_cast<double>(n_trajectories);
  double var = 0.0;
  for (double v : endpoint) var += (v - mean) * (v - mean);
  var /= static_cast<double>(n_trajectories - 1);

  LangevinResult out{};
  out.delta_mu = std::sqrt(var) / tau_m;
  out.standard_error = out.delta_mu / std::sqrt(2.0 * static_cast<double>(n_trajectories - 1));
  out.analytic = std::sqrt(diffusion_2d / tau_m);
  return out;
}

}  // namespace slaumzi::laser
