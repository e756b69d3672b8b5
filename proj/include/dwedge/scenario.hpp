#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dwedge/algebra.hpp"

namespace dwedge {

/// A validated batch job read from scenario text. The format is flat
/// `key = value` lines: `kind` and `dim` first, then kind-specific keys
/// with numbers, `[...]` arrays, or field expressions. `#` starts a
/// comment; `particle` and `v` may repeat.
struct Scenario {
  std::string kind;
  int dim = 0;

  std::map<std::string, Vector> vectors;
  std::map<std::string, double> scalars;
  std::map<std::string, std::string> field_exprs;   // v1..vN for curl
  std::vector<std::vector<double>> particles;       // [m, pos..., vel...]
  std::vector<Vector> volume_vectors;
  std::vector<int> indices;                         // 0-based triple
  std::vector<int> dims;                            // verify dims
  std::uint64_t seed = 0;
  int instances = 200;
  double tolerance = 1e-10;
};

/// Ordered key/value result document. Values are already formatted
/// (doubles with 17 significant digits).
struct Report {
  std::vector<std::pair<std::string, std::string>> lines;
  bool verify_failed = false;

  void add(const std::string& key, const std::string& value) {
    lines.emplace_back(key, value);
  }
  std::string to_text() const;
};

std::string format_double(double v);
std::string format_array(const std::vector<double>& v);

/// Parses and validates scenario text. Throws ParseError with position.
Scenario parse_scenario(const std::string& text);

/// Runs a validated scenario. Deterministic: identical scenarios produce
/// identical reports.
Report run(const Scenario& scenario);

}  // namespace dwedge
