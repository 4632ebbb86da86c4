#include "slaumzi/fit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "slaumzi/constants.hpp"
#include "slaumzi/error.hpp"

namespace slaumzi::fit {

using detail::require;

namespace {

struct Line {
  double slope;
  double intercept;
};

// Weighted least squares for y = slope x + intercept, centered for stability.
Line weighted_line(const std::vector<double>& x, const std::vector<double>& y,
                   const std::vector<double>& w) {
  double sw = 0.0, sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sw += w[i];
    sx += w[i] * x[i];
    sy += w[i] * y[i];
  }
  const double xm = sx / sw;
  const double ym = sy / sw;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - xm;
    sxx += w[i] * dx * dx;
    sxy += w[i] * dx * (y[i] - ym);
  }
  if (!(sxx > 0.0)) throw NumericalError("least-squares design is rank deficient");
  const double k = sxy / sxx;
  return {k, ym - k * xm};
}

double r_squared(const std::vector<NoisePoint>& data, double rss) {
  double mean = 0.0;
  for (const auto& d : data) mean += d.sigma;
  mean /= static_cast<double>(data.size());
  double tss = 0.0;
  for (const auto& d : data) tss += (d.sigma - mean) * (d.sigma - mean);
  return tss > 0.0 ? 1.0 - rss / tss : 1.0;
}

}  // namespace

void LiaSweep::validate() const {
  require(samples.size() >= 3, "LIA sweep needs at least 3 samples");
  std::set<double> seen;
  for (const auto& s : samples) {
    require(std::isfinite(s.swing_hz) && std::isfinite(s.v_lia), "LIA sample is not finite");
    require(s.swing_hz >= 0.0, "LIA swing must be >= 0");
    require(seen.insert(s.swing_hz).second, "LIA swings must be distinct");
  }
}

FitResult ksum_fit(const LiaSweep& sweep, MmfsConvention convention) {
  sweep.validate();
  const std::size_t n = sweep.samples.size();
  std::vector<double> x(n), y(n), w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = sweep.samples[i];
    if (s.v_lia == 0.0) {
      throw InvalidArgument("LIA sample with zero output makes the relative residual undefined; "
                            "exclude it before fitting");
    }
    x[i] = s.swing_hz;
    y[i] = s.v_lia;
    w[i] = 1.0 / (s.v_lia * s.v_lia);
  }
  const Line line = weighted_line(x, y, w);

  FitResult r{};
  r.slope = line.slope;
  r.offset = line.intercept;
  r.convention = convention;
  for (std::size_t i = 0; i < n; ++i) {
    const double rel = (y[i] - line.slope * x[i] - line.intercept) / y[i];
    r.objective += rel * rel;
  }
  r.non_physical = !(r.slope > 0.0);
  if (r.non_physical) {
    r.warnings.emplace_back("fitted slope k <= 0: non-physical, MMFS not defined");
    r.mmfs = std::nan("");
  } else {
    r.mmfs = mmfs_from_parameters(r.offset, r.slope, convention);
    if (r.offset < 0.0) r.warnings.emplace_back("fitted noise level V_N is negative");
  }
  return r;
}

std::array<double, 2> ksum_gradient(const LiaSweep& sweep, double slope, double offset) {
  std::array<double, 2> g{0.0, 0.0};
  for (const auto& s : sweep.samples) {
    const double rel = (s.v_lia - slope * s.swing_hz - offset) / s.v_lia;
    g[0] += -2.0 * rel * s.swing_hz / s.v_lia;
    g[1] += -2.0 * rel / s.v_lia;
  }
  return g;
}

double mmfs_from_parameters(double offset, double slope, MmfsConvention convention) {
  require(slope > 0.0, "MMFS needs a positive slope k");
  const double v = offset / slope;
  return convention == MmfsConvention::kAngular ? constants::kTwoPi * v : v;
}

double observed_sef(double mmfs_standard, double mmfs_measured) {
  require(mmfs_standard > 0.0 && mmfs_measured > 0.0, "observed SEF needs positive MMFS values");
  return mmfs_standard / mmfs_measured;
}

NoiseFit noise_law_fit(const std::vector<NoisePoint>& data, NoiseModel model,
                       const NoiseFit& fixed) {
  require(data.size() >= 4, "noise-law fit needs at least 4 points");
  for (const auto& d : data) {
    require(d.v0 >= 0.0 && std::isfinite(d.v0) && std::isfinite(d.sigma),
            "noise-law data must be finite with V0 >= 0");
  }
  const std::size_t n = data.size();
  std::vector<double> x(n), y(n), w(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = data[i].v0;
    switch (model) {
      case NoiseModel::kSqrt:
        x[i] = std::sqrt(v);
        y[i] = data[i].sigma;
        break;
      case NoiseModel::kLinear:
        x[i] = v;
        y[i] = data[i].sigma;
        break;
      case NoiseModel::kMixed:
        x[i] = fixed.a * v;
        y[i] = data[i].sigma - fixed.c0 * std::sqrt(v);
        break;
    }
  }
  const Line line = weighted_line(x, y, w);
  NoiseFit f{};
  f.model = model;
  f.b = line.intercept;
  switch (model) {
    case NoiseModel::kSqrt:
      f.c0 = line.slope;
      break;
    case NoiseModel::kLinear:
      f.a = line.slope;
      break;
    case NoiseModel::kMixed:
      f.c0 = fixed.c0;
      f.a = fixed.a;
      f.p = line.slope;
      break;
  }
  for (const auto& d : data) {
    const double r = d.sigma - noise_model_value(f, d.v0);
    f.rss += r * r;
  }
  f.r_squared = r_squared(data, f.rss);
  return f;
}

NoiseFit select_noise_model(const std::vector<NoisePoint>& data) {
  NoiseFit s = noise_law_fit(data, NoiseModel::kSqrt);
  NoiseFit l = noise_law_fit(data, NoiseModel::kLinear);
  return s.rss <= l.rss ? s : l;
}

double noise_model_value(const NoiseFit& fit, double v0) {
  switch (fit.model) {
    case NoiseModel::kSqrt:
      return fit.c0 * std::sqrt(v0) + fit.b;
    case NoiseModel::kLinear:
      return fit.a * v0 + fit.b;
    case NoiseModel::kMixed:
      return fit.c0 * std::sqrt(v0) + fit.p * fit.a * v0 + fit.b;
  }
  return 0.0;
}

PowerLawFit power_law_fit(const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() == y.size() && x.size() >= 2, "power-law fit needs matching arrays of >= 2");
  std::vector<double> lx(x.size()), ly(y.size()), w(x.size(), 1.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    require(x[i] > 0.0 && y[i] > 0.0, "power-law fit needs positive data");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  const Line line = weighted_line(lx, ly, w);
  return {std::exp(line.intercept), line.slope};
}

const char* model_name(NoiseModel m) {
  switch (m) {
    case NoiseModel::kSqrt:
      return "sqrt";
    case NoiseModel::kLinear:
      return "linear";
    case NoiseModel::kMixed:
      return "mixed";
  }
  return "?";
}

}  // namespace slaumzi::fit
