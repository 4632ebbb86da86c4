#include "slaumzi/tables.hpp"

#include <cmath>

#include "slaumzi/constants.hpp"
#include "slaumzi/fit.hpp"
#include "slaumzi/laser.hpp"
#include "slaumzi/optics.hpp"
#include "slaumzi/sensitivity.hpp"

namespace slaumzi::tables {

using namespace slaumzi::constants;

namespace {

laser::LaserSpec ring_laser(double reflectivity) {
  laser::LaserSpec s;
  s.wavelength = kRingWavelength;
  s.output_power = kRingPower;
  s.cavity_length = kRingLength;
  s.output_coupler_reflectivity = reflectivity;
  return s;
}

double photon_flux(double power, double wavelength) {
  return power / (kHbar * kTwoPi * kSpeedOfLight / wavelength);
}

// Probe laser of the EIT experiment.
constexpr double kProbeLinewidth = 2.4e6;      // rad/s
constexpr double kProbeCoherenceTime = 423e-9;  // s, as printed
constexpr double kLockInBandwidth = 20.7;       // 1/s
constexpr double kTau0 = 1.56e-9;
constexpr double kTauD = 0.27e-9;

struct EitCase {
  double group_index;
  double tau_sl;
  double transmission;
  double power;
  double efficiency;
  double noise_mv;
  double slope_mv_s;
};

// The second slope is printed as 9.5e-5 mV/s; 9.5e-6 is the value consistent
// with the printed experimental MMFS and observed SEF, and is used here.
constexpr EitCase kEitCases[] = {
    {142, 39.4e-9, 0.78, 1.2e-3, 2e-4, 0.080, 3.1e-6},
    {293, 79.7e-9, 0.60, 1.2e-3, 4e-4, 0.14, 9.5e-6},
    {659, 177.2e-9, 0.42, 1.2e-3, 5.5e-4, 0.10, 2.1e-5},
    {1343, 360.0e-9, 0.33, 1.6e-3, 5e-4, 0.066, 3.8e-5},
};

}  // namespace

Table quantum_limit_mmfs_table() {
  Table t;
  t.name = "quantum_limit_mmfs";
  t.columns = {"R",         "wavelength_nm",        "tau_m_s",
               "p_out_mw",  "length_cm",            "gamma_c_over_2pi_MHz",
               "gamma_stl_over_2pi_mHz", "dnu_std_Hz", "dnu_umzi_nHz"};
  const double printed[4][4] = {{7.7, 5.8, 0.24, 0.50},
                                {2.4, 0.58, 0.076, 0.050},
                                {1.1, 0.13, 0.036, 0.011},
                                {0.56, 0.031, 0.018, 0.0026}};
  for (std::size_t i = 0; i < 4; ++i) {
    const double r = kRingReflectivities[i];
    const auto spec = ring_laser(r);
    const auto cav = laser::cavity_decay(spec);
    const auto stl = laser::schawlow_townes(spec, cav);
    const double stl_hz = stl.linewidth / kTwoPi;
    const double dnu_std = std::sqrt(stl_hz / kRingMeasurementTime);
    const double ratio = kE / (2.0 * spec.photon_flux() * cav.decay_time);
    const double dnu_umzi = ratio * dnu_std;
    t.values.push_back({r, kRingWavelength * 1e9, kRingMeasurementTime, kRingPower * 1e3,
                        kRingLength * 1e2, cav.decay_rate / kTwoPi * 1e-6, stl_hz * 1e3, dnu_std,
                        dnu_umzi * 1e9});
    t.reference.push_back({std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                           printed[i][0], printed[i][1], printed[i][2], printed[i][3]});
  }
  t.notes.push_back("dnu_std = sqrt((Gamma_STL/2pi)/tau_M); dnu_umzi = e/(2 N tau_c) * dnu_std");
  return t;
}

Table quantum_limit_time_table() {
  Table t;
  t.name = "quantum_limit_time";
  t.columns = {"R", "wavelength_nm", "p_out_mw", "length_cm", "tau_m_std_s", "tau_m_umzi_1e20_s",
               "ratio"};
  const double printed[4][3] = {
      {27.33, 0.0643, 2.4e17}, {273.3, 6.43, 2.3e18}, {1230, 130, 1.1e19}, {5194, 2320, 4.5e19}};
  for (std::size_t i = 0; i < 4; ++i) {
    const double r = kRingReflectivities[i];
    const auto spec = ring_laser(r);
    const auto cav = laser::cavity_decay(spec);
    const auto stl = laser::schawlow_townes(spec, cav);
    const double t_std =
        sensitivity::quantum_time_bound(sensitivity::BoundMode::kStandard, spec, cav, stl.coherence_time);
    const double t_umzi =
        sensitivity::quantum_time_bound(sensitivity::BoundMode::kUmzi, spec, cav, stl.coherence_time);
    t.values.push_back({r, kRingWavelength * 1e9, kRingPower * 1e3, kRingLength * 1e2, t_std,
                        t_umzi * 1e-20, t_umzi / t_std});
    t.reference.push_back({std::nullopt, std::nullopt, std::nullopt, std::nullopt, printed[i][0],
                           printed[i][1], printed[i][2]});
  }
  return t;
}

Table eit_summary_table() {
  Table t;
  t.name = "eit_summary";
  t.label_column = "quantity";
  t.columns = {"ng_142", "ng_293", "ng_659", "ng_1343"};
  t.row_labels = {"v_n_mv",          "k_mv_per_s",     "mmfs_eit_experiment", "mmfs_eit_theory",
                  "mmfs_standard",   "sef_observed"};
  const double printed[6][4] = {{0.080, 0.14, 0.10, 0.066},
                                {3.1e-6, 9.5e-5, 2.1e-5, 3.8e-5},
                                {2.6e4, 1.5e4, 4.8e3, 1.7e3},
                                {1.2e3, 4.8e2, 2.1e2, 1.1e2},
                                {5.0e5, 3.5e5, 3.0e5, 3.2e5},
                                {19, 24, 63, 185}};
  t.values.assign(6, std::vector<double>(4));
  t.reference.assign(6, std::vector<std::optional<double>>(4));
  for (std::size_t j = 0; j < 4; ++j) {
    const auto& c = kEitCases[j];
    const double experiment = fit::mmfs_from_parameters(c.noise_mv, c.slope_mv_s);
    const double theory =
        kTwoPi * sensitivity::mmfs_slaumzi(c.tau_sl, c.transmission, c.efficiency,
                                           photon_flux(c.power, kRbD1Wavelength),
                                           1.0 / kLockInBandwidth);
    const double standard =
        sensitivity::mmfs_standard_linewidth(kProbeLinewidth, kLockInBandwidth, c.efficiency);
    const double col[6] = {c.noise_mv, c.slope_mv_s, experiment, theory, standard,
                           fit::observed_sef(standard, experiment)};
    for (std::size_t i = 0; i < 6; ++i) {
      t.values[i][j] = col[i];
      t.reference[i][j] = printed[i][j];
    }
  }
  t.notes.push_back("k for n_g = 293 is printed as 9.5e-5 mV/s; 9.5e-6 reproduces the printed "
                    "experimental MMFS and SEF and is used");
  t.notes.push_back("theory row is 2 pi times the shot-limited SLAUMZI MMFS");
  return t;
}

std::vector<DiffEntry> diff(const Table& t) {
  std::vector<DiffEntry> out;
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
      if (!t.reference[i][j]) continue;
      const double ref = *t.reference[i][j];
      const double v = t.values[i][j];
      out.push_back({i, t.row_labels.empty() ? std::string{} : t.row_labels[i], t.columns[j], v,
                     ref, (v - ref) / ref});
    }
  }
  return out;
}

bool WorkedNumber::pass() const {
  return std::abs(value - reference) <= tolerance * std::abs(reference);
}

std::vector<WorkedNumber> worked_numbers() {
  std::vector<WorkedNumber> w;
  const double n16 = photon_flux(1.6e-3, kRbD1Wavelength);
  const optics::InterferometerGeometry geom = optics::InterferometerGeometry::from_delays(kTau0, kTauD);
  const auto tc = optics::time_constants(geom, optics::DispersiveMedium::vacuum());

  w.push_back({"umzi_sef", sensitivity::sef(tc.tau_vac, 1.0, kProbeCoherenceTime, n16), 161, 0.03});

  const double eit_sef_ref[] = {2.6e3, 4.7e3, 8.7e3, 1.8e4};
  const double eit_mmfs_ref[] = {2.0e2, 77, 35, 18};
  for (std::size_t j = 0; j < 4; ++j) {
    const auto& c = kEitCases[j];
    const double n = photon_flux(c.power, kRbD1Wavelength);
    const std::string tag = "ng_" + std::to_string(static_cast<int>(c.group_index));
    w.push_back({"eit_sef_" + tag, sensitivity::sef(c.tau_sl, c.transmission, kProbeCoherenceTime, n),
                 eit_sef_ref[j], 0.05});
    w.push_back({"eit_mmfs_theory_" + tag,
                 sensitivity::mmfs_slaumzi(c.tau_sl, c.transmission, c.efficiency, n,
                                           1.0 / kLockInBandwidth),
                 eit_mmfs_ref[j], 0.10});
  }
  w.push_back({"eit_sef_ng_1759", sensitivity::sef(471e-9, 0.37, kProbeCoherenceTime, n16), 2.5e4, 0.05});
  w.push_back({"mmfs_standard_eta_eff",
               sensitivity::mmfs_standard_linewidth(kProbeLinewidth, kLockInBandwidth, 1.63e-4), 5.5e5,
               0.03});
  w.push_back({"mmfs_standard_eta_detector",
               sensitivity::mmfs_standard_linewidth(kProbeLinewidth, kLockInBandwidth, 0.5), 9.97e3, 0.03});
  w.push_back({"mmfs_umzi_measured", fit::mmfs_from_parameters(0.054, 2.2e-7), 2.45e5, 0.02});

  const double measured_1759 = fit::mmfs_from_parameters(0.033, 4.5e-5);
  const double std_1759 = sensitivity::mmfs_standard_linewidth(kProbeLinewidth, kLockInBandwidth, 2.95e-4);
  w.push_back({"mmfs_ng_1759_measured", measured_1759, 733, 0.02});
  w.push_back({"mmfs_standard_ng_1759", std_1759, 4.1e5, 0.02});
  w.push_back({"sef_observed_ng_1759", fit::observed_sef(std_1759, measured_1759), 560, 0.02});
  w.push_back({"mmfs_slaumzi_ng_1759",
               sensitivity::mmfs_slaumzi(471e-9, 0.37, 2.95e-4, n16, 1.0 / kLockInBandwidth), 16, 0.05});
  return w;
}

}  // namespace slaumzi::tables
