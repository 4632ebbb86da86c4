#include "slaumzi/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "slaumzi/constants.hpp"
#include "slaumzi/error.hpp"

namespace slaumzi::config {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Reads typed values from one section and remembers which keys were used.
class Reader {
 public:
  Reader(const IniFile& ini, std::string name) : ini_(ini), name_(std::move(name)) {
    auto it = ini.sections().find(name_);
    if (it != ini.sections().end()) section_ = &it->second;
  }

  bool present() const { return section_ != nullptr; }

  const IniFile::Entry* find(const std::string& key) {
    if (!section_) return nullptr;
    auto it = section_->find(key);
    if (it == section_->end()) return nullptr;
    used_.insert(key);
    return &it->second;
  }

  std::optional<double> number(const std::string& key) {
    const auto* e = find(key);
    if (!e) return std::nullopt;
    return parse_double(key, *e);
  }

  void number(const std::string& key, double& out) {
    if (auto v = number(key)) out = *v;
  }

  template <class U>
  void integer(const std::string& key, U& out) {
    const auto* e = find(key);
    if (!e) return;
    unsigned long long v = 0;
    const auto& s = e->value;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) fail(key, *e, "expected a non-negative integer");
    out = static_cast<U>(v);
  }

  void boolean(const std::string& key, bool& out) {
    const auto* e = find(key);
    if (!e) return;
    const std::string v = lower(e->value);
    if (v == "true" || v == "1" || v == "yes" || v == "on") {
      out = true;
    } else if (v == "false" || v == "0" || v == "no" || v == "off") {
      out = false;
    } else {
      fail(key, *e, "expected true or false");
    }
  }

  void list(const std::string& key, std::vector<double>& out) {
    const auto* e = find(key);
    if (!e) return;
    out.clear();
    std::stringstream ss(e->value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(key, {trim(item), e->line}));
    if (out.empty()) fail(key, *e, "expected a comma-separated list of numbers");
  }

  // Rejects keys that no reader call asked for.
  void finish() const {
    if (!section_) return;
    for (const auto& [key, entry] : *section_) {
      if (!used_.count(key)) {
        throw ConfigError(fmt::format("{}:{}: unknown key '{}' in section [{}]", ini_.source(),
                                      entry.line, key, name_));
      }
    }
  }

 private:
  double parse_double(const std::string& key, const IniFile::Entry& e) const {
    double v = 0.0;
    const auto& s = e.value;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) fail(key, e, "expected a number");
    return v;
  }

  [[noreturn]] void fail(const std::string& key, const IniFile::Entry& e, const char* what) const {
    throw ConfigError(fmt::format("{}:{}: [{}] {} = '{}': {}", ini_.source(), e.line, name_, key,
                                  e.value, what));
  }

  const IniFile& ini_;
  std::string name_;
  const IniFile::Section* section_ = nullptr;
  std::set<std::string> used_;
};

}  // namespace

IniFile IniFile::parse(const std::string& text, const std::string& source) {
  IniFile ini;
  ini.source_ = source;
  std::istringstream in(text);
  std::string raw;
  std::string current;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    if (auto c = s.find_first_of("#;"); c != std::string::npos) s.erase(c);
    s = trim(s);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError(fmt::format("{}:{}: malformed section header", source, line));
      current = lower(trim(s.substr(1, s.size() - 2)));
      if (current.empty()) throw ConfigError(fmt::format("{}:{}: empty section name", source, line));
      if (ini.sections_.count(current)) {
        throw ConfigError(fmt::format("{}:{}: duplicate section [{}]", source, line, current));
      }
      ini.sections_[current];
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError(fmt::format("{}:{}: expected key = value", source, line));
    if (current.empty()) throw ConfigError(fmt::format("{}:{}: key outside of any section", source, line));
    const std::string key = lower(trim(s.substr(0, eq)));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) throw ConfigError(fmt::format("{}:{}: empty key", source, line));
    auto& sec = ini.sections_[current];
    if (sec.count(key)) throw ConfigError(fmt::format("{}:{}: duplicate key '{}'", source, line, key));
    sec[key] = {value, line};
  }
  return ini;
}

IniFile IniFile::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError(fmt::format("cannot open config file '{}'", path));
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), path);
}

const std::map<std::string, std::vector<std::string>>& schema() {
  static const std::map<std::string, std::vector<std::string>> s{
      {"run", {"seed"}},
      {"laser",
       {"wavelength_m", "power_w", "cavity_length_m", "reflectivity", "linewidth_rad_s",
        "coherence_time_s", "henry_factor"}},
      {"interferometer",
       {"tau0_s", "tau_d_s", "imbalance_length_m", "medium_length_m", "magnification"}},
      {"medium", {"group_index", "phase_index", "transmission"}},
      {"detection", {"quantum_efficiency", "measurement_time_s", "bandwidth_per_s"}},
      {"eit",
       {"pump_rabi_13", "pump_rabi_14", "probe_rabi_23", "probe_rabi_24", "decay_31", "decay_32",
        "decay_41", "decay_42", "ground_exchange", "pump_detuning", "probe_detuning",
        "excited_splitting"}},
      {"cell",
       {"temperature_k", "length_m", "slices", "atom_mass_kg", "number_density", "dipole_constant",
        "wavelength_m", "velocity_points", "velocity_span", "calibrate_transmission",
        "spectrum_span_rad_s", "spectrum_points"}},
      {"noise",
       {"rms_voltage", "terms", "bandwidth_hz", "gain", "mixer_frequency_hz",
        "mixer_normalization_v", "mixer_scale", "lpf_bandwidth_hz", "amplifier_band_low_hz",
        "amplifier_band_high_hz", "dc_blocker_loading", "repetitions", "duration_s",
        "sample_rate_hz", "excess_coefficient", "excess_corner_hz", "v_dc_list"}},
      {"apd",
       {"conversion_v_per_w", "photon_energy_j", "bandwidth_hz", "excess_offset_v", "sd_offset_v"}},
      {"balanced",
       {"peak_signal", "phase_rad", "alpha", "residual_fraction", "extra_noise", "mismatch_gain"}},
  };
  return s;
}

ScenarioConfig load_scenario(const IniFile& ini) {
  const auto& known = schema();
  for (const auto& [name, sec] : ini.sections()) {
    if (!known.count(name)) {
      const int line = sec.empty() ? 0 : sec.begin()->second.line;
      throw ConfigError(fmt::format("{}: unknown section [{}] (near line {})", ini.source(), name, line));
    }
  }

  ScenarioConfig c;
  for (const auto& [name, sec] : ini.sections()) c.sections.insert(name);

  {
    Reader r(ini, "run");
    r.integer("seed", c.seed);
    r.finish();
  }
  {
    Reader r(ini, "laser");
    r.number("wavelength_m", c.laser.wavelength);
    r.number("power_w", c.laser.output_power);
    r.number("cavity_length_m", c.laser.cavity_length);
    r.number("reflectivity", c.laser.output_coupler_reflectivity);
    r.number("henry_factor", c.laser.henry_factor);
    if (auto v = r.number("linewidth_rad_s")) c.laser.measured_linewidth = *v;
    c.coherence_time = r.number("coherence_time_s");
    r.finish();
    if (r.present()) {
      detail::require(c.laser.wavelength > 0.0, "laser.wavelength_m must be > 0");
      detail::require(c.laser.output_power > 0.0, "laser.power_w must be > 0");
      detail::require(c.laser.henry_factor >= 1.0, "laser.henry_factor must be >= 1");
      if (c.coherence_time) detail::require(*c.coherence_time > 0.0, "laser.coherence_time_s must be > 0");
      if (c.laser.measured_linewidth) {
        detail::require(*c.laser.measured_linewidth > 0.0, "laser.linewidth_rad_s must be > 0");
      }
    }
  }
  {
    Reader r(ini, "interferometer");
    const auto t0 = r.number("tau0_s");
    const auto td = r.number("tau_d_s");
    const auto l0 = r.number("imbalance_length_m");
    const auto ls = r.number("medium_length_m");
    c.magnification = r.number("magnification");
    r.finish();
    if ((t0 || td) && (l0 || ls)) {
      throw ConfigError("[interferometer] give either delays (tau0_s, tau_d_s) or lengths, not both");
    }
    if (t0 || td) {
      c.geometry = optics::InterferometerGeometry::from_delays(t0.value_or(0.0), td.value_or(0.0));
    } else {
      c.geometry = {l0.value_or(0.0), ls.value_or(0.0)};
    }
    c.geometry.validate();
  }
  {
    Reader r(ini, "medium");
    r.number("group_index", c.medium.group_index);
    r.number("phase_index", c.medium.phase_index);
    r.number("transmission", c.medium.transmission);
    r.finish();
    if (c.magnification) {
      if (r.present() && ini.sections().at("medium").count("group_index")) {
        throw ConfigError("[interferometer] magnification and [medium] group_index are exclusive");
      }
      c.medium.group_index = optics::group_index_from_magnification(c.geometry, *c.magnification);
    }
    c.medium.validate();
  }
  {
    Reader r(ini, "detection");
    r.number("quantum_efficiency", c.detection.quantum_efficiency);
    r.number("measurement_time_s", c.detection.measurement_time);
    c.detection.measurement_bandwidth = r.number("bandwidth_per_s");
    r.finish();
    c.detection.validate();
  }
  {
    Reader r(ini, "eit");
    auto& s = c.scheme;
    r.number("pump_rabi_13", s.pump_rabi_13);
    r.number("pump_rabi_14", s.pump_rabi_14);
    r.number("probe_rabi_23", s.probe_rabi_23);
    r.number("probe_rabi_24", s.probe_rabi_24);
    r.number("decay_31", s.decay_31);
    r.number("decay_32", s.decay_32);
    r.number("decay_41", s.decay_41);
    r.number("decay_42", s.decay_42);
    r.number("ground_exchange", s.ground_exchange);
    r.number("pump_detuning", s.pump_detuning);
    r.number("probe_detuning", s.probe_detuning);
    r.number("excited_splitting", s.excited_splitting);
    r.finish();
    s.validate();
  }
  {
    Reader r(ini, "cell");
    auto& cell = c.cell;
    r.number("temperature_k", cell.temperature);
    r.number("length_m", cell.length);
    r.integer("slices", cell.slice_count);
    r.number("atom_mass_kg", cell.atom_mass);
    r.number("number_density", cell.number_density);
    r.number("dipole_constant", cell.dipole_constant);
    r.number("wavelength_m", cell.wavelength);
    r.integer("velocity_points", cell.velocity_points);
    r.number("velocity_span", cell.velocity_span);
    c.calibrate_transmission = r.number("calibrate_transmission");
    r.number("spectrum_span_rad_s", c.spectrum_span);
    r.integer("spectrum_points", c.spectrum_points);
    r.finish();
    cell.validate();
    if (c.calibrate_transmission) {
      detail::require(*c.calibrate_transmission > 0.0 && *c.calibrate_transmission < 1.0,
                      "cell.calibrate_transmission must lie in (0, 1)");
    }
    if (c.spectrum_points > 0) {
      detail::require(c.spectrum_points >= 2 && c.spectrum_span > 0.0,
                      "cell.spectrum_points >= 2 and cell.spectrum_span_rad_s > 0 required");
    }
  }
  {
    Reader r(ini, "noise");
    auto& n = c.noise;
    r.number("rms_voltage", n.rms_voltage);
    r.integer("terms", n.term_count);
    r.number("bandwidth_hz", n.noise_bandwidth);
    r.number("gain", n.amplifier_gain);
    r.number("mixer_frequency_hz", n.mixer_frequency);
    r.number("mixer_normalization_v", n.mixer_normalization);
    r.number("mixer_scale", n.mixer_scale);
    r.number("lpf_bandwidth_hz", n.lpf_bandwidth);
    r.number("amplifier_band_low_hz", n.amplifier_band_low);
    r.number("amplifier_band_high_hz", n.amplifier_band_high);
    r.boolean("dc_blocker_loading", n.dc_blocker_loading);
    r.integer("repetitions", c.noise_run.repetitions);
    r.number("duration_s", c.noise_run.duration);
    r.number("sample_rate_hz", c.noise_run.sample_rate);
    r.number("excess_coefficient", c.noise_run.excess_coefficient);
    r.number("excess_corner_hz", c.noise_run.excess_corner);
    r.list("v_dc_list", c.noise_run.v_dc);
    r.finish();
    n.validate();
    detail::require(c.noise_run.duration > 0.0 && c.noise_run.sample_rate > 0.0,
                    "noise.duration_s and noise.sample_rate_hz must be > 0");
    detail::require(c.noise_run.excess_coefficient >= 0.0, "noise.excess_coefficient must be >= 0");
    detail::require(c.noise_run.excess_corner > 0.0, "noise.excess_corner_hz must be > 0");
  }
  {
    Reader r(ini, "apd");
    r.number("conversion_v_per_w", c.apd.conversion);
    r.number("photon_energy_j", c.apd.photon_energy);
    r.number("bandwidth_hz", c.apd.bandwidth);
    r.number("excess_offset_v", c.apd.excess_offset);
    r.number("sd_offset_v", c.apd.sd_offset);
    r.finish();
    if (c.apd.photon_energy == 0.0) c.apd.photon_energy = constants::kHbar * constants::kTwoPi *
                                                          constants::kSpeedOfLight / constants::kRbD1Wavelength;
    c.apd.validate();
  }
  {
    Reader r(ini, "balanced");
    r.number("peak_signal", c.balanced.peak_signal);
    r.number("phase_rad", c.balanced.phase);
    r.number("alpha", c.balanced.intensity_noise_ratio);
    r.number("residual_fraction", c.balanced.residual_fraction);
    r.number("extra_noise", c.balanced.extra_noise);
    r.number("mismatch_gain", c.mismatch_gain);
    r.finish();
    c.balanced.validate();
    detail::require(c.mismatch_gain > 0.0, "balanced.mismatch_gain must be > 0");
  }
  return c;
}

ScenarioConfig load_scenario_file(const std::string& path) { return load_scenario(IniFile::load(path)); }

}  // namespace slaumzi::config
