#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "slaumzi/eit.hpp"
#include "slaumzi/laser.hpp"
#include "slaumzi/noise.hpp"
#include "slaumzi/optics.hpp"
#include "slaumzi/sensitivity.hpp"

namespace slaumzi::config {

// Flat key = value text with [section] headers; '#' and ';' start comments.
class IniFile {
 public:
  struct Entry {
    std::string value;
    int line;
  };
  using Section = std::map<std::string, Entry>;

  static IniFile parse(const std::string& text, const std::string& source = "<string>");
  static IniFile load(const std::string& path);

  const std::map<std::string, Section>& sections() const { return sections_; }
  const std::string& source() const { return source_; }

 private:
  std::string source_;
  std::map<std::string, Section> sections_;
};

struct NoiseRun {
  std::size_t repetitions = 400;
  double duration = 7e-3;      // s
  double sample_rate = 1e6;    // Hz
  double excess_coefficient = 0.0;
  double excess_corner = 1e6;  // Hz
  std::vector<double> v_dc{0.05, 0.1, 0.2, 0.4, 0.8, 1.6};  // V
};

struct ScenarioConfig {
  std::uint64_t seed = 1;
  std::set<std::string> sections;

  laser::LaserSpec laser;
  std::optional<double> coherence_time;  // tau_L, s

  optics::InterferometerGeometry geometry;
  std::optional<double> magnification;
  optics::DispersiveMedium medium;

  sensitivity::DetectionSpec detection;

  eit::FourLevelScheme scheme = eit::FourLevelScheme::reference();
  eit::CellConfig cell = eit::CellConfig::reference();
  std::optional<double> calibrate_transmission;
  double spectrum_span = 0.0;  // rad/s
  std::size_t spectrum_points = 0;

  noise::NoiseChainConfig noise;
  NoiseRun noise_run;
  noise::ApdModel apd;
  noise::BalancedPair balanced;
  double mismatch_gain = 1.0;

  bool has(const std::string& section) const { return sections.count(section) != 0; }
};

// Throws ConfigError on unknown sections/keys or unparsable values, and
// InvalidArgument when a loaded value violates a physical invariant.
ScenarioConfig load_scenario(const IniFile& ini);
ScenarioConfig load_scenario_file(const std::string& path);

// Documented key list per section, for help text and the README.
const std::map<std::string, std::vector<std::string>>& schema();

}  // namespace slaumzi::config
