// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "scatter/cli/config.hpp"
#include "scatter/format.hpp"

namespace scatter::cli {

struct Column {
  std::string name;
  std::string unit;
};

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;
};

/// CSV: header row naming every column (with `[unit]` when annotated), 17 significant digits.
inline void write_csv(std::ostream& os, const Table& table, bool annotate_units) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) os << ',';
    os << table.columns[c].name;
    if (annotate_units && !table.columns[c].unit.empty()) os << " [" << table.columns[c].unit << ']';
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      os << format_double(row[c]);
    }
    os << '\n';
  }
}

inline std::string json_number(double v) {
  const std::string s = format_double(v);
  return (s == "nan" || s == "inf" || s == "-inf") ? "null" : s;
}

inline std::string json_row(const Table& table, const std::vector<double>& row) {
  std::ostringstream os;
  os << '{';
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (c) os << ',';
    os << '"' << table.columns[c].name << "\":" << json_number(row[c]);
  }
  os << '}';
  return os.str();
}

/// One JSON object per row.
inline void write_jsonl(std::ostream& os, const Table& table) {
  for (const auto& row : table.rows) os << json_row(table, row) << '\n';
}

inline void write_table(std::ostream& os, const Table& table, OutputFormat format, bool annotate_units) {
  if (format == OutputFormat::Csv) {
    write_csv(os, table, annotate_units);
  } else {
    write_jsonl(os, table);
  }
}

}  // namespace scatter::cli
