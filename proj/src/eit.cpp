#include "slaumzi/eit.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "slaumzi/constants.hpp"
#include "slaumzi/error.hpp"
#include "slaumzi/parallel.hpp"

namespace slaumzi::eit {

using namespace slaumzi::constants;
using detail::require;
using cd = std::complex<double>;

namespace {

constexpr int kLevels = 4;
constexpr double kMinRcond = 1e-12;

using Liouvillian = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, 0, 16, 16>;
using Vec = Eigen::Matrix<cd, Eigen::Dynamic, 1, 0, 16, 1>;

struct Transfer {
  int from;
  int to;
  double rate;
};

struct Coupling {
  int a;
  int b;
  double rabi;
};

std::array<Transfer, 6> transfers(const FourLevelScheme& s) {
  return {{{2, 0, s.decay_31},
           {2, 1, s.decay_32},
           {3, 0, s.decay_41},
           {3, 1, s.decay_42},
           {0, 1, s.ground_exchange},
           {1, 0, s.ground_exchange}}};
}

std::array<Coupling, 4> couplings(const FourLevelScheme& s) {
  return {{{0, 2, s.pump_rabi_13}, {0, 3, s.pump_rabi_14}, {1, 2, s.probe_rabi_23}, {1, 3, s.probe_rabi_24}}};
}

}  // namespace

FourLevelScheme FourLevelScheme::reference() {
  FourLevelScheme s;
  s.pump_rabi_13 = 3.2e7;
  s.pump_rabi_14 = 3.4e7;
  s.probe_rabi_23 = 3.1e7;
  s.probe_rabi_24 = 4.3e7;
  s.decay_31 = 1.8e7;
  s.decay_32 = 1.8e7;
  s.decay_41 = 2.7e7;
  s.decay_42 = 0.9e7;
  s.ground_exchange = 3.76e6;
  s.excited_splitting = kTwoPi * kRb85ExcitedSplittingHz;
  return s;
}

void FourLevelScheme::validate() const {
  for (double r : {decay_31, decay_32, decay_41, decay_42, ground_exchange}) {
    require(std::isfinite(r) && r >= 0.0, "eit decay and exchange rates must be >= 0");
  }
  for (double r : {pump_rabi_13, pump_rabi_14, probe_rabi_23, probe_rabi_24}) {
    require(std::isfinite(r) && r >= 0.0, "eit Rabi frequencies must be >= 0");
  }
  require(std::isfinite(pump_detuning) && std::isfinite(probe_detuning) &&
              std::isfinite(excited_splitting),
          "eit detunings must be finite");
}

CellConfig CellConfig::reference() {
  CellConfig c;
  c.atom_mass = kRb85Mass;
  c.dipole_constant = kRbD1DipoleConstant;
  c.wavelength = kRbD1Wavelength;
  return c;
}

double CellConfig::wavenumber() const { return kTwoPi / wavelength; }

double CellConfig::thermal_velocity() const { return std::sqrt(kBoltzmann * temperature / atom_mass); }

void CellConfig::validate() const {
  require(temperature >= 0.0, "cell.temperature must be >= 0");
  require(length > 0.0, "cell.length must be > 0");
  require(slice_count >= 1, "cell.slices must be >= 1");
  require(atom_mass > 0.0, "cell.atom_mass must be > 0");
  require(number_density >= 0.0, "cell.number_density must be >= 0");
  require(dipole_constant > 0.0, "cell.dipole_constant must be > 0");
  require(wavelength > 0.0, "cell.wavelength must be > 0");
  require(velocity_points >= 1 && velocity_points % 2 == 1,
          "cell.velocity_points must be odd so the grid is symmetric about zero");
  require(velocity_span > 0.0, "cell.velocity_span must be > 0");
}

Density steady_state(const FourLevelScheme& scheme, double velocity_shift) {
  scheme.validate();
  const double dp = scheme.pump_detuning - velocity_shift;
  const double dr = scheme.probe_detuning - velocity_shift;

  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h(1, 1) = dr - dp;
  h(2, 2) = -dp - scheme.excited_splitting;
  h(3, 3) = -dp;

  std::array<bool, kLevels> active{};
  for (const auto& c : couplings(scheme)) {
    if (c.rabi == 0.0) continue;
    h(c.a, c.b) = h(c.b, c.a) = 0.5 * c.rabi;
    active[c.a] = active[c.b] = true;
  }
  const auto tr = transfers(scheme);
  for (const auto& t : tr) {
    if (t.rate > 0.0) active[t.from] = active[t.to] = true;
  }

  // Levels touched by no field and no process carry no population.
  std::array<int, kLevels> index{};
  int n = 0;
  for (int i = 0; i < kLevels; ++i) index[i] = active[i] ? n++ : -1;
  if (n == 0) throw NumericalError("degenerate system: no couplings or relaxation processes");

  const int m = n * n;
  Liouvillian L = Liouvillian::Zero(m, m);
  auto at = [n](int i, int j) { return i * n + j; };
  const cd minus_i(0.0, -1.0);

  for (int a = 0; a < kLevels; ++a) {
    if (index[a] < 0) continue;
    for (int b = 0; b < kLevels; ++b) {
      if (index[b] < 0 || h(a, b) == 0.0) continue;
      const int i = index[a], k = index[b];
      for (int j = 0; j < n; ++j) {
        L(at(i, j), at(k, j)) += minus_i * h(a, b);
        L(at(j, k), at(j, i)) -= minus_i * h(a, b);
      }
    }
  }
  for (const auto& t : tr) {
    if (t.rate <= 0.0) continue;
    const int f = index[t.from], to = index[t.to];
    L(at(to, to), at(f, f)) += t.rate;
    for (int j = 0; j < n; ++j) {
      L(at(f, j), at(f, j)) -= 0.5 * t.rate;
      L(at(j, f), at(j, f)) -= 0.5 * t.rate;
    }
  }

  const double scale = L.cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) throw NumericalError("degenerate system: Liouvillian is zero");
  L /= scale;
  for (int c = 0; c < m; ++c) L(0, c) = 0.0;
  for (int k = 0; k < n; ++k) L(0, at(k, k)) = 1.0;
  Vec rhs = Vec::Zero(m);
  rhs(0) = 1.0;

  // The rcond estimate alone misses exactly-zero pivots, so check both.
  Eigen::PartialPivLU<Liouvillian> lu(L);
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(min_pivot > kMinRcond) || !(lu.rcond() > kMinRcond)) {
    throw NumericalError("degenerate system: steady state is not unique (singular Liouvillian)");
  }
  const Vec x = lu.solve(rhs);

  Density rho = Density::Zero();
  for (int a = 0; a < kLevels; ++a) {
    if (index[a] < 0) continue;
    for (int b = 0; b < kLevels; ++b) {
      if (index[b] < 0) continue;
      rho(a, b) = x(at(index[a], index[b]));
    }
  }
  return rho;
}

std::complex<double> probe_susceptibility(const Density& rho, const FourLevelScheme& scheme,
                                          double number_density, double dipole_constant) {
  if (scheme.probe_rabi_23 == 0.0) {
    throw InvalidArgument("probe susceptibility undefined: probe Rabi frequency is zero");
  }
  const double ratio = scheme.probe_rabi_24 / scheme.probe_rabi_23;
  return -dipole_constant * number_density * (rho(2, 1) + ratio * rho(3, 1)) / scheme.probe_rabi_23;
}

std::complex<double> pump_susceptibility(const Density& rho, const FourLevelScheme& scheme,
                                         double number_density, double dipole_constant) {
  if (scheme.pump_rabi_13 == 0.0) {
    throw InvalidArgument("pump susceptibility undefined: pump Rabi frequency is zero");
  }
  const double ratio = scheme.pump_rabi_14 / scheme.pump_rabi_13;
  return -dipole_constant * number_density * (rho(2, 0) + ratio * rho(3, 0)) / scheme.pump_rabi_13;
}

void InvariantStats::record(const Density& rho) {
  max_hermiticity_error = std::max(max_hermiticity_error, (rho - rho.adjoint()).cwiseAbs().maxCoeff());
  max_trace_error = std::max(max_trace_error, std::abs(rho.trace() - 1.0));
  for (int i = 0; i < kLevels; ++i) {
    min_population = std::min(min_population, rho(i, i).real());
    max_population = std::max(max_population, rho(i, i).real());
  }
  ++solves;
}

void InvariantStats::merge(const InvariantStats& o) {
  max_hermiticity_error = std::max(max_hermiticity_error, o.max_hermiticity_error);
  max_trace_error = std::max(max_trace_error, o.max_trace_error);
  min_population = std::min(min_population, o.min_population);
  max_population = std::max(max_population, o.max_population);
  solves += o.solves;
}

bool InvariantStats::ok(double tol) const {
  return max_hermiticity_error <= tol && max_trace_error <= tol && min_population >= -tol &&
         max_population <= 1.0 + tol;
}

VelocityGrid velocity_grid(const CellConfig& cell) {
  cell.validate();
  const double vth = cell.thermal_velocity();
  if (vth == 0.0) return {{0.0}, {1.0}};
  const std::size_t n = cell.velocity_points;
  const double per_width = static_cast<double>(n - 1) / (2.0 * cell.velocity_span);
  if (per_width < 5.0) {
    throw InvalidArgument("velocity grid too coarse: need at least 5 points per thermal width");
  }
  VelocityGrid g;
  g.velocities.resize(n);
  g.weights.resize(n);
  const double step = 2.0 * cell.velocity_span / static_cast<double>(n - 1);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = -cell.velocity_span + step * static_cast<double>(i);
    g.velocities[i] = u * vth;
    g.weights[i] = std::exp(-0.5 * u * u);
    sum += g.weights[i];
  }
  for (double& w : g.weights) w /= sum;
  return g;
}

DopplerResult doppler_average(const FourLevelScheme& scheme, const CellConfig& cell) {
  const VelocityGrid grid = velocity_grid(cell);
  const double k = cell.wavenumber();
  const bool pump_on = scheme.pump_rabi_13 != 0.0;
  const std::size_t n = grid.velocities.size();

  std::vector<cd> probe(n), pump(n);
  std::vector<InvariantStats> stats(n);
  parallel_for(n, [&](std::size_t i) {
    const Density rho = steady_state(scheme, k * grid.velocities[i]);
    stats[i].record(rho);
    probe[i] = probe_susceptibility(rho, scheme, cell.number_density, cell.dipole_constant);
    if (pump_on) pump[i] = pump_susceptibility(rho, scheme, cell.number_density, cell.dipole_constant);
  });

  DopplerResult out{};
  for (std::size_t i = 0; i < n; ++i) {
    out.probe_chi += grid.weights[i] * probe[i];
    out.pump_chi += grid.weights[i] * pump[i];
    out.weight_sum += grid.weights[i];
    out.invariants.merge(stats[i]);
  }
  return out;
}

PropagationResult propagate_point(const FourLevelScheme& scheme, const CellConfig& cell,
                                  double probe_offset) {
  cell.validate();
  constexpr double kOpaque = 1e-200;
  const double k = cell.wavenumber();
  const double dz = cell.length / static_cast<double>(cell.slice_count);
  const bool pump_on = scheme.pump_rabi_13 != 0.0;

  PropagationResult out{};
  double probe_i = 1.0, pump_i = 1.0, phase = 0.0;
  for (std::size_t s = 0; s < cell.slice_count; ++s) {
    FourLevelScheme local = scheme;
    local.probe_detuning += probe_offset;
    const double ar = std::sqrt(probe_i);
    const double ap = std::sqrt(pump_i);
    local.probe_rabi_23 *= ar;
    local.probe_rabi_24 *= ar;
    local.pump_rabi_13 *= ap;
    local.pump_rabi_14 *= ap;

    const DopplerResult d = doppler_average(local, cell);
    out.invariants.merge(d.invariants);
    probe_i *= std::exp(-k * d.probe_chi.imag() * dz);
    if (pump_on) pump_i *= std::exp(-k * d.pump_chi.imag() * dz);
    phase += 0.5 * d.probe_chi.real() * dz;
    out.slice_probe_intensity.push_back(probe_i);
    if (probe_i < kOpaque || pump_i < kOpaque) {
      out.opaque = true;
      break;
    }
  }
  out.probe_transmission = out.opaque && probe_i < kOpaque ? 0.0 : probe_i;
  out.pump_transmission = pump_on ? pump_i : 1.0;
  out.phase_index = 1.0 + phase / cell.length;
  return out;
}

double group_index_at_center(const FourLevelScheme& scheme, const CellConfig& cell, double h) {
  require(h > 0.0, "finite-difference step must be > 0");
  const double omega = kTwoPi * kSpeedOfLight / cell.wavelength;
  const double n0 = propagate_point(scheme, cell, 0.0).phase_index;
  const double np = propagate_point(scheme, cell, h).phase_index;
  const double nm = propagate_point(scheme, cell, -h).phase_index;
  return n0 + omega * (np - nm) / (2.0 * h);
}

ProbeSpectrum propagate_sliced(const FourLevelScheme& scheme, const CellConfig& cell,
                               const std::vector<double>& detunings) {
  require(!detunings.empty(), "spectrum needs at least one detuning");
  ProbeSpectrum sp;
  sp.detunings = detunings;
  for (double d : detunings) {
    const auto r = propagate_point(scheme, cell, d);
    sp.transmission.push_back(r.probe_transmission);
    sp.phase_index.push_back(r.phase_index);
    sp.opaque = sp.opaque || r.opaque;
    sp.invariants.merge(r.invariants);
  }
  const std::size_t n = detunings.size();
  sp.dn_ddelta.assign(n, 0.0);
  if (n >= 2) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t a = i == 0 ? 0 : i - 1;
      const std::size_t b = i + 1 == n ? n - 1 : i + 1;
      sp.dn_ddelta[i] = (sp.phase_index[b] - sp.phase_index[a]) / (detunings[b] - detunings[a]);
    }
  }
  const auto center = propagate_point(scheme, cell, 0.0);
  sp.transmission_at_center = center.probe_transmission;
  sp.invariants.merge(center.invariants);
  sp.group_index_at_center = group_index_at_center(scheme, cell);
  return sp;
}

double transmission_at_center(const ProbeSpectrum& spectrum) { return spectrum.transmission_at_center; }

double calibrate_density(const FourLevelScheme& scheme, CellConfig cell, double target_transmission,
                         double lo, double hi) {
  require(target_transmission > 0.0 && target_transmission < 1.0,
          "calibration target transmission must lie in (0, 1)");
  require(lo > 0.0 && hi > lo, "calibration bracket must satisfy 0 < lo < hi");
  auto transmission = [&](double density) {
    cell.number_density = density;
    return propagate_point(scheme, cell, 0.0).probe_transmission;
  };
  if (!(transmission(lo) > target_transmission && transmission(hi) < target_transmission)) {
    throw NumericalError("calibration target not bracketed by the density search range");
  }
  double a = std::log(lo), b = std::log(hi);
  while (b - a > 1e-7) {
    const double mid = 0.5 * (a + b);
    if (transmission(std::exp(mid)) > target_transmission) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return std::exp(0.5 * (a + b));
}

std::vector<double> detuning_grid(double span, std::size_t points) {
  require(span > 0.0 && points >= 2, "detuning grid needs span > 0 and at least 2 points");
  std::vector<double> d(points);
  for (std::size_t i = 0; i < points; ++i) {
    d[i] = -span + 2.0 * span * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return d;
}

}  // namespace slaumzi::eit
