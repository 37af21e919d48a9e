// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scatter/amplitude.hpp"
#include "scatter/errors.hpp"
#include "scatter/format.hpp"

namespace scatter::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailure = 1, kConfigError = 2 };

class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { Csv, JsonLines };

/// MIN:MAX:COUNT, sampled uniformly with both ends included.
struct Range {
  double min{0};
  double max{0};
  int count{0};

  std::vector<double> values() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
      out.push_back(count == 1 ? min : min + (max - min) * n / (count - 1));
    }
    return out;
  }
};

inline Range parse_range(const std::string& text, const std::string& what, int min_count) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos) throw ConfigError(what + ": expected MIN:MAX:COUNT, got '" + text + "'");
  Range r;
  double count = 0;
  if (!parse_double(text.substr(0, first), r.min) ||
      !parse_double(text.substr(first + 1, second - first - 1), r.max) ||
      !parse_double(text.substr(second + 1), count) || count != std::floor(count)) {
    throw ConfigError(what + ": expected MIN:MAX:COUNT, got '" + text + "'");
  }
  r.count = static_cast<int>(count);
  if (r.count < min_count) throw ConfigError(what + ": COUNT must be at least " + std::to_string(min_count));
  if (r.count > 1 && !(r.min < r.max)) throw ConfigError(what + ": MIN must be below MAX");
  return r;
}

/// Default tolerances of the verify suite, by name.
inline std::map<std::string, double> default_tolerances() {
  return {{"commutator", 1e-10}, {"casimir", 1e-10},   {"weyl", 1e-12},
          {"unitarity", 1e-12},  {"recurrence", 1e-12}, {"intertwining", 1e-10}};
}

/// Everything a subcommand needs, after flags and config-file keys are merged.
struct RunConfig {
  std::string command;
  std::optional<double> tau;
  std::optional<double> alpha;
  std::optional<double> mass;
  std::optional<double> k;
  std::optional<double> s;
  Range theta_deg{10.0, 170.0, 64};
  int l_max{30};
  int smatrix_l_max{200};
  std::map<std::string, double> tolerances = default_tolerances();
  std::string out;  // empty or "-" means stdout
  OutputFormat format{OutputFormat::Csv};
  bool partial_wave{false};
  bool units{false};
  std::string axis;
  Range sweep{};
  std::string mode{"amplitude"};
  std::string dump;
  int jobs{0};
};

/// Flat key-value config file: one `key = value` per line, `#` starts a comment.
/// Keys are long flag names without dashes; `tol.NAME = VALUE` sets a tolerance.
inline std::vector<std::pair<std::string, std::string>> read_flat_config(std::istream& is) {
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string{};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int number = 0;
  while (std::getline(is, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(number) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(number) + ": empty key");
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

inline std::vector<std::pair<std::string, std::string>> read_flat_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return read_flat_config(in);
}

}  // namespace scatter::cli
