#include "distfrac/io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace distfrac {

std::string format_double(double value) {
  std::array<char, 40> buffer;
  const auto result =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (result.ec != std::errc()) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buffer.data(), result.ptr);
}

std::optional<std::string> SolutionFile::find(const std::string& key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  return std::nullopt;
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

void write_solution_file(std::ostream& os, const SolutionFile& file) {
  for (const auto& [key, value] : file.metadata) {
    os << "# " << key << " = " << value << "\n";
  }
  for (std::size_t c = 0; c < file.columns.size(); ++c) {
    if (c > 0) os << ",";
    os << file.columns[c];
  }
  os << "\n";
  for (const auto& row : file.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << ",";
      os << format_double(row[c]);
    }
    os << "\n";
  }
}

SolutionFile read_solution_file(std::istream& is) {
  SolutionFile file;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    if (stripped.front() == '#') {
      const std::string body = trim(stripped.substr(1));
      const auto eq = body.find('=');
      if (eq == std::string::npos) continue;
      file.metadata.emplace_back(trim(body.substr(0, eq)),
                                 trim(body.substr(eq + 1)));
      continue;
    }
    if (!header_seen) {
      file.columns = split_csv(stripped);
      header_seen = true;
      continue;
    }
    const auto cells = split_csv(stripped);
    if (cells.size() != file.columns.size()) {
      throw std::runtime_error("read_solution_file: ragged row");
    }
    std::vector<double> row(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto& cell = cells[c];
      const auto result =
          std::from_chars(cell.data(), cell.data() + cell.size(), row[c]);
      if (result.ec != std::errc()) {
        throw std::runtime_error("read_solution_file: bad number '" + cell +
                                 "'");
      }
    }
    file.rows.push_back(std::move(row));
  }
  if (!header_seen) {
    throw std::runtime_error("read_solution_file: missing header row");
  }
  return file;
}

}  // namespace distfrac
