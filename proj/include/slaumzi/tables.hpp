#pragma once

#include <optional>
#include <string>
#include <vector>

// Regenerates the published parameter tables and worked numbers from the
// closed forms, next to the printed reference values.

namespace slaumzi::tables {

struct Table {
  std::string name;
  std::string label_column;             // empty when rows are unlabeled
  std::vector<std::string> row_labels;  // one per row when label_column is set
  std::vector<std::string> columns;
  std::vector<std::vector<double>> values;
  std::vector<std::vector<std::optional<double>>> reference;  // printed value, if any
  std::vector<std::string> notes;
};

// Ring He-Ne laser sweep over output coupler reflectivity: decay rate,
// Schawlow-Townes linewidth, standard and UMZI MMFS (Hz presentation).
Table quantum_limit_mmfs_table();

// Quantum-limited measurement times for the same lasers.
Table quantum_limit_time_table();

// EIT experiment summary: fitted noise level and slope, observed and
// predicted MMFS, standard-technique MMFS and observed SEF per group index.
Table eit_summary_table();

struct DiffEntry {
  std::size_t row;
  std::string row_label;
  std::string column;
  double value;
  double reference;
  double relative_deviation;
};

std::vector<DiffEntry> diff(const Table& t);

struct WorkedNumber {
  std::string name;
  double value;
  double reference;
  double tolerance;  // relative
  bool pass() const;
};

std::vector<WorkedNumber> worked_numbers();

// Input parameters shared by the ring-laser tables.
inline constexpr double kRingWavelength = 632.8e-9;
inline constexpr double kRingPower = 10e-3;
inline constexpr double kRingLength = 0.70;
inline constexpr double kRingMeasurementTime = 0.1;
inline constexpr double kRingReflectivities[] = {0.5, 0.8, 0.9, 0.95};

}  // namespace slaumzi::tables
