#include "horizonlab/table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace horizonlab {

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string render_csv(const OutputTable& t) {
  std::string out;
  for (const auto& [key, value] : t.meta) {
    out += "# " + key + "=" + value + "\n";
  }
  for (size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ",";
    out += t.columns[i];
  }
  out += "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += format_value(row[i]);
    }
    out += "\n";
  }
  return out;
}

std::string render_json(const OutputTable& t) {
  std::string out = "{\n  \"columns\": [";
  for (size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + json_escape(t.columns[i]) + "\"";
  }
  out += "],\n  \"rows\": [";
  for (size_t r = 0; r < t.rows.size(); ++r) {
    out += r ? ",\n    [" : "\n    [";
    const auto& row = t.rows[r];
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ", ";
      out += std::isfinite(row[i]) ? format_value(row[i]) : "null";
    }
    out += "]";
  }
  out += t.rows.empty() ? "],\n" : "\n  ],\n";
  out += "  \"meta\": {";
  for (size_t i = 0; i < t.meta.size(); ++i) {
    if (i) out += ",";
    out += "\n    \"" + json_escape(t.meta[i].first) + "\": \"" +
           json_escape(t.meta[i].second) + "\"";
  }
  out += t.meta.empty() ? "}\n}\n" : "\n  }\n}\n";
  return out;
}

}  // namespace

std::string render_table(const OutputTable& t, TableFormat fmt) {
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) {
      throw std::logic_error("render_table: row width does not match the column schema");
    }
  }
  return fmt == TableFormat::Csv ? render_csv(t) : render_json(t);
}

void emit_table(const OutputTable& t, const std::string& path, TableFormat fmt) {
  const std::string body = render_table(t, fmt);
  if (path.empty()) {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("emit_table: cannot open " + path);
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!f) throw std::runtime_error("emit_table: write failed for " + path);
}

}  // namespace horizonlab
