#pragma once

#include <array>
#include <string>
#include <vector>

namespace slaumzi::fit {

struct LiaSample {
  double swing_hz;  // frequency swing omega_m / 2 pi
  double v_lia;     // lock-in output, V
};

struct LiaSweep {
  std::vector<LiaSample> samples;

  // >= 3 samples, non-negative distinct swings, finite values.
  void validate() const;
};

// kAsPrinted reports V_N / k directly, i.e. per second of swing frequency in Hz.
// kAngular multiplies by 2 pi.
enum class MmfsConvention { kAsPrinted, kAngular };

struct FitResult {
  double slope;      // k, V/Hz
  double offset;     // V_N, V
  double objective;  // sum of squared relative residuals at the optimum
  double mmfs;
  MmfsConvention convention;
  bool non_physical;  // k <= 0
  std::vector<std::string> warnings;
};

// Minimizes sum [(V - k f - V_N) / V]^2 in closed form (weighted linear least
// squares with weights 1/V^2). Throws InvalidArgument on any V = 0 sample.
FitResult ksum_fit(const LiaSweep& sweep, MmfsConvention convention = MmfsConvention::kAsPrinted);

// Gradient of the relative-residual objective at (k, V_N); zero at the optimum.
std::array<double, 2> ksum_gradient(const LiaSweep& sweep, double slope, double offset);

double mmfs_from_parameters(double offset, double slope,
                            MmfsConvention convention = MmfsConvention::kAsPrinted);

double observed_sef(double mmfs_standard, double mmfs_measured);

struct NoisePoint {
  double v0;     // DC level, V
  double sigma;  // measured standard deviation
};

enum class NoiseModel { kSqrt, kLinear, kMixed };

struct NoiseFit {
  NoiseModel model;
  double c0 = 0.0;  // sqrt coefficient
  double a = 0.0;   // linear coefficient
  double p = 0.0;   // residual intensity-noise fraction (mixed only)
  double b = 0.0;   // offset
  double rss = 0.0;
  double r_squared = 0.0;
};

// sqrt:   sigma = c0 sqrt(V) + b
// linear: sigma = a V + b
// mixed:  sigma = c0 sqrt(V) + p a V + b with c0 and a taken from `fixed`.
NoiseFit noise_law_fit(const std::vector<NoisePoint>& data, NoiseModel model,
                       const NoiseFit& fixed = {});

// Fits sqrt and linear laws and returns the one with the smaller residual.
NoiseFit select_noise_model(const std::vector<NoisePoint>& data);

double noise_model_value(const NoiseFit& fit, double v0);

struct PowerLawFit {
  double prefactor;
  double exponent;
};

// y = prefactor x^exponent by least squares in log-log space; x, y > 0.
PowerLawFit power_law_fit(const std::vector<double>& x, const std::vector<double>& y);

const char* model_name(NoiseModel m);

}  // namespace slaumzi::fit
