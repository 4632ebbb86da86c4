#include "slaumzi/optics.hpp"

#include <cmath>

#include "slaumzi/constants.hpp"
#include "slaumzi/error.hpp"

namespace slaumzi::optics {

using constants::kSpeedOfLight;
using detail::require;

InterferometerGeometry InterferometerGeometry::from_delays(double tau0, double tau_d) {
  InterferometerGeometry g{tau0 * kSpeedOfLight, tau_d * kSpeedOfLight};
  g.validate();
  return g;
}

double InterferometerGeometry::tau0() const { return imbalance_length / kSpeedOfLight; }
double InterferometerGeometry::tau_d() const { return medium_length / kSpeedOfLight; }

void InterferometerGeometry::validate() const {
  require(std::isfinite(imbalance_length) && imbalance_length >= 0.0,
          "interferometer.imbalance_length must be finite and >= 0");
  require(std::isfinite(medium_length) && medium_length >= 0.0,
          "interferometer.medium_length must be finite and >= 0");
}

void DispersiveMedium::validate() const {
  require(std::isfinite(group_index) && group_index >= 1.0, "medium.group_index must be >= 1");
  require(std::isfinite(phase_index) && phase_index > 0.0, "medium.phase_index must be > 0");
  require(transmission > 0.0 && transmission <= 1.0, "medium.transmission must lie in (0, 1]");
}

TimeConstants time_constants(const InterferometerGeometry& geom, const DispersiveMedium& medium) {
  geom.validate();
  medium.validate();
  const double t0 = geom.tau0();
  const double td = geom.tau_d();
  return {t0, td, t0 + td, t0 + medium.phase_index * td, t0 + medium.group_index * td};
}

double fringe_magnification(const InterferometerGeometry& geom, const DispersiveMedium& medium) {
  const auto tc = time_constants(geom, medium);
  if (tc.tau_vac <= 0.0) {
    throw InvalidArgument("fringe magnification undefined: tau_vac is zero");
  }
  return tc.tau_sl / tc.tau_vac;
}

double group_index_from_magnification(const InterferometerGeometry& geom, double magnification) {
  geom.validate();
  require(magnification >= 1.0, "fringe magnification must be >= 1");
  const double td = geom.tau_d();
  if (td <= 0.0) throw InvalidArgument("group index undefined: no slow-light medium (tau_d = 0)");
  const double t0 = geom.tau0();
  return (magnification * (t0 + td) - t0) / td;
}

double contrast_factor(double tau_contrast, double tau_coherence) {
  require(tau_contrast >= 0.0, "contrast lag must be >= 0");
  require(tau_coherence > 0.0, "coherence time must be > 0");
  return std::exp(-tau_contrast / (2.0 * tau_coherence));
}

double signal_ideal(double detuning, double tau_eff, double peak, double phase_offset) {
  require(peak >= 0.0, "peak signal must be >= 0");
  const double c = std::cos(0.5 * (phase_offset + tau_eff * detuning));
  return peak * c * c;
}

double signal_with_linewidth(double detuning, double tau_scale, double tau_contrast,
                             double tau_coherence, double peak, double phase_offset) {
  require(tau_scale >= 0.0, "fringe time constant must be >= 0");
  require(peak >= 0.0, "peak signal must be >= 0");
  const double visibility = contrast_factor(tau_contrast, tau_coherence);
  return 0.5 * peak + 0.5 * peak * visibility * std::cos(phase_offset + tau_scale * detuning);
}

}  // namespace slaumzi::optics
