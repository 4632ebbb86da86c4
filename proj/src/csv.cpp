#include "slaumzi/csv.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include <fmt/format.h>

#include "slaumzi/error.hpp"

namespace slaumzi::csv {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string format_number(double v) { return fmt::format("{:.12g}", v); }

void Table::add_row(const std::vector<double>& values) {
  std::vector<std::string> r;
  r.reserve(values.size());
  for (double v : values) r.push_back(format_number(v));
  rows.push_back(std::move(r));
}

std::string Table::str() const {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  auto join = [](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += ',';
      s += cells[i];
    }
    return s + "\n";
  };
  out += join(header);
  for (const auto& r : rows) out += join(r);
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  std::filesystem::create_directories(dir);
  const auto tmp = dir / ("." + path.filename().string() + ".tmp");
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(fmt::format("cannot write '{}'", tmp.string()));
    f << content;
    f.flush();
    if (!f) throw Error(fmt::format("write failed for '{}'", tmp.string()));
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(fmt::format("cannot move output into place at '{}': {}", path.string(), ec.message()));
  }
}

NumericData parse_numeric(const std::string& text, const std::string& source) {
  NumericData d;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string s = trim(raw);
    if (s.empty() || s.front() == '#') continue;
    auto cells = split(s);
    if (d.header.empty()) {
      d.header = cells;
      continue;
    }
    if (cells.size() != d.header.size()) {
      throw InvalidArgument(fmt::format("{}:{}: expected {} columns, found {}", source, line,
                                        d.header.size(), cells.size()));
    }
    std::vector<double> row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      double v = 0.0;
      const auto& c = cells[i];
      auto [p, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
      if (c.empty() || ec != std::errc{} || p != c.data() + c.size()) {
        throw InvalidArgument(fmt::format("{}:{}: column '{}' is not a number: '{}'", source, line,
                                          d.header[i], c));
      }
      row.push_back(v);
    }
    d.rows.push_back(std::move(row));
    d.lines.push_back(line);
  }
  if (d.header.empty()) throw InvalidArgument(fmt::format("{}: no header row", source));
  return d;
}

NumericData read_numeric(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument(fmt::format("cannot open '{}'", path.string()));
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_numeric(ss.str(), path.string());
}

std::size_t column(const NumericData& d, const std::string& name) {
  for (std::size_t i = 0; i < d.header.size(); ++i) {
    if (d.header[i] == name) return i;
  }
  std::string have;
  for (const auto& h : d.header) have += (have.empty() ? "" : ", ") + h;
  throw InvalidArgument(fmt::format("missing column '{}' (have: {})", name, have));
}

}  // namespace slaumzi::csv
