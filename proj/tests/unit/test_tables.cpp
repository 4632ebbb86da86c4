#include <doctest.h>

#include <cmath>
#include <string>

#include "slaumzi/laser.hpp"
#include "slaumzi/sensitivity.hpp"
#include "slaumzi/tables.hpp"

using namespace slaumzi;
using namespace slaumzi::tables;

namespace {

std::size_t col(const Table& t, const std::string& name) {
  for (std::size_t j = 0; j < t.columns.size(); ++j) {
    if (t.columns[j] == name) return j;
  }
  FAIL("no column " << name);
  return 0;
}

}  // namespace

TEST_SUITE("tables") {

TEST_CASE("ring-laser MMFS table within 5% of the reference cells") {
  const auto t = quantum_limit_mmfs_table();
  REQUIRE(t.values.size() == 4);
  const auto d = diff(t);
  CHECK(d.size() == 16);
  for (const auto& e : d) {
    INFO(e.column << " row " << e.row << " value " << e.value << " ref " << e.reference);
    CHECK(std::abs(e.relative_deviation) <= 0.05);
  }
}

TEST_CASE("ring-laser UMZI column agrees with the optimizer") {
  const auto t = quantum_limit_mmfs_table();
  for (std::size_t i = 0; i < 4; ++i) {
    laser::LaserSpec s;
    s.wavelength = kRingWavelength;
    s.output_power = kRingPower;
    s.cavity_length = kRingLength;
    s.output_coupler_reflectivity = kRingReflectivities[i];
    const auto cav = laser::cavity_decay(s);
    const auto stl = laser::schawlow_townes(s, cav);
    const auto opt = sensitivity::umzi_optimal(s, cav, s.photon_flux() * kRingMeasurementTime, stl.coherence_time);
    const double ratio = t.values[i][col(t, "dnu_umzi_nHz")] * 1e-9 / t.values[i][col(t, "dnu_std_Hz")];
    CHECK(ratio == doctest::Approx(opt.ratio_to_std).epsilon(1e-6));
  }
}

TEST_CASE("measurement-time table: times within 5%, ratio within 10%") {
  const auto t = quantum_limit_time_table();
  for (const auto& e : diff(t)) {
    INFO(e.column << " row " << e.row << " value " << e.value << " ref " << e.reference);
    CHECK(std::abs(e.relative_deviation) <= (e.column == "ratio" ? 0.10 : 0.05));
  }
}

TEST_CASE("EIT summary: every cell but the known misprint within 10%") {
  const auto t = eit_summary_table();
  int outliers = 0;
  for (const auto& e : diff(t)) {
    if (e.row_label == "k_mv_per_s" && e.column == "ng_293") {
      CHECK(e.value == doctest::Approx(0.1 * e.reference));
      ++outliers;
      continue;
    }
    INFO(e.row_label << " " << e.column << " value " << e.value << " ref " << e.reference);
    CHECK(std::abs(e.relative_deviation) <= 0.10);
  }
  CHECK(outliers == 1);
}

TEST_CASE("worked numbers") {
  const auto w = worked_numbers();
  CHECK(w.size() == 17);
  for (const auto& x : w) {
    INFO(x.name << " " << x.value << " vs " << x.reference);
    CHECK(x.pass());
  }
}

}
