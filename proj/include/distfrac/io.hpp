#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace distfrac {

/// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double value);

/// Solution file: '#'-prefixed `key = value` metadata lines, a CSV header,
/// then one row per grid point.
struct SolutionFile {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::optional<std::string> find(const std::string& key) const;
};

void write_solution_file(std::ostream& os, const SolutionFile& file);
SolutionFile read_solution_file(std::istream& is);

}  // namespace distfrac
