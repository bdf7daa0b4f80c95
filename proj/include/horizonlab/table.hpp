#pragma once

#include <string>
#include <utility>
#include <vector>

namespace horizonlab {

/// Numeric table with a fixed column schema and ordered string metadata.
/// Rendering is byte-stable: same table, same bytes, on every platform.
struct OutputTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> meta;

  void add_meta(std::string key, std::string value) {
    meta.emplace_back(std::move(key), std::move(value));
  }
};

enum class TableFormat { Csv, Json };

/// 17 significant digits; round-trip exact for binary64.
std::string format_value(double v);

/// CSV: '#'-prefixed meta lines, a header row, then data rows, LF endings.
/// JSON: {"columns": [...], "rows": [[...], ...], "meta": {...}} with
/// non-finite numbers rendered as null.
std::string render_table(const OutputTable& t, TableFormat fmt);

/// Write to path, or to stdout when path is empty.
void emit_table(const OutputTable& t, const std::string& path, TableFormat fmt);

}  // namespace horizonlab
