// File formats: solution-set CSV (header f1..fm, one row per solution, full
// round-trip precision) with a JSON sidecar carrying shape, m, n, seed and
// orientation, plus small helpers for the pipeline's result tables.

#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hvc/core.hpp"

namespace hvc {

// shortest text that parses back to the same double is overkill here; 17
// significant digits always round-trips and keeps files byte-stable
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) throw std::runtime_error("bad number in CSV: '" + s + "'");
  return v;
}

struct SetSidecar {
  std::string shape;
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;
  Orientation orientation = Orientation::Maximize;
};

inline std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  p.replace_extension(".json");
  return p;
}

inline void write_solution_set(const std::filesystem::path& csv_path,
                               const SolutionSet& set, const SetSidecar& meta) {
  std::ofstream out(csv_path);
  if (!out) throw std::runtime_error("cannot write " + csv_path.string());
  for (int j = 0; j < set.m; ++j) out << (j ? ",f" : "f") << (j + 1);
  out << "\n";
  for (const Vector& p : set.points) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) out << ",";
      out << format_double(p[j]);
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + csv_path.string());

  nlohmann::json side{{"shape", meta.shape},
                      {"m", meta.m},
                      {"n", meta.n},
                      {"seed", meta.seed},
                      {"orientation", to_string(meta.orientation)}};
  std::ofstream sout(sidecar_path(csv_path));
  if (!sout) throw std::runtime_error("cannot write sidecar for " + csv_path.string());
  sout << side.dump(2) << "\n";
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

inline std::pair<SolutionSet, SetSidecar> read_solution_set(
    const std::filesystem::path& csv_path) {
  std::ifstream side_in(sidecar_path(csv_path));
  if (!side_in) throw std::runtime_error("missing sidecar for " + csv_path.string());
  nlohmann::json side = nlohmann::json::parse(side_in);
  SetSidecar meta;
  meta.shape = side.at("shape").get<std::string>();
  meta.m = side.at("m").get<int>();
  meta.n = side.at("n").get<int>();
  meta.seed = side.at("seed").get<std::uint64_t>();
  meta.orientation = orientation_from_string(side.at("orientation").get<std::string>());

  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("missing set file " + csv_path.string());
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty set file " + csv_path.string());
  const std::size_t m = split_csv_line(line).size();
  SolutionSet set;
  set.orientation = meta.orientation;
  set.m = static_cast<int>(m);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != m) {
      throw std::runtime_error("ragged row in " + csv_path.string());
    }
    Vector p(m);
    for (std::size_t j = 0; j < m; ++j) p[j] = parse_double(fields[j]);
    set.points.push_back(std::move(p));
  }
  if (meta.m != set.m || meta.n != static_cast<int>(set.size())) {
    throw std::runtime_error("sidecar disagrees with CSV for " + csv_path.string());
  }
  return {std::move(set), std::move(meta)};
}

// minimal comma-separated table with a fixed header
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (std::size_t j = 0; j < table.header.size(); ++j) {
    if (j) out << ",";
    out << table.header[j];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ",";
      out << row[j];
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

inline CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing file " + path.string());
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty file " + path.string());
  table.header = split_csv_line(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    table.rows.push_back(split_csv_line(line));
  }
  return table;
}

}  // namespace hvc
