#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace slaumzi::csv {

// Round-trip-safe text form used for every numeric cell: fmt "{:.12g}".
std::string format_number(double v);

struct Table {
  std::vector<std::string> comments;  // written as "# ..." lines before the header
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(const std::vector<double>& values);
  std::string str() const;
};

// Writes to a temporary file in the same directory and renames it over path.
void write_atomic(const std::filesystem::path& path, const std::string& content);

struct NumericData {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<int> lines;  // source line of each row
};

// Comma-separated numbers with one header row; blank lines and lines starting
// with '#' are skipped. Malformed rows raise InvalidArgument naming the line.
NumericData parse_numeric(const std::string& text, const std::string& source = "<string>");
NumericData read_numeric(const std::filesystem::path& path);

// Index of a header column, or InvalidArgument listing what is available.
std::size_t column(const NumericData& d, const std::string& name);

}  // namespace slaumzi::csv
