#pragma once

// Tabular output shared by the command-line tool.
//
// CSV: one header line, comma separated, '\n' line ends. Floating-point cells
// use printf "%.12g", integers "%ld", booleans true/false, absent cells are
// empty. JSON: {"command": ..., "parameters": {...}, "columns": [...],
// "rows": [{column: value, ...}, ...]} with absent cells as null.

#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "acring/sweeps.hpp"

namespace acring::io {

using Cell = std::variant<std::monostate, double, long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("row width does not match header");
    rows.push_back(std::move(row));
  }
};

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string format_cell(const Cell& cell) {
  struct {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
  } visitor;
  return std::visit(visitor, cell);
}

inline void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
    out << '\n';
  }
}

inline nlohmann::ordered_json cell_to_json(const Cell& cell) {
  struct {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const { return v; }
    nlohmann::ordered_json operator()(long v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  } visitor;
  return std::visit(visitor, cell);
}

/// Echoed inputs, kept in insertion order.
using Parameters = std::vector<std::pair<std::string, Cell>>;

inline nlohmann::ordered_json to_json(const std::string& command, const Parameters& parameters,
                                      const Table& table) {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  auto& params = doc["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : parameters) params[key] = cell_to_json(value);
  doc["columns"] = table.columns;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell_to_json(row[i]);
    rows.push_back(std::move(obj));
  }
  return doc;
}

inline void write_json(std::ostream& out, const std::string& command, const Parameters& parameters,
                       const Table& table) {
  out << to_json(command, parameters, table).dump(2) << '\n';
}

inline Cell optional_cell(const std::optional<double>& v) {
  return v ? Cell{*v} : Cell{};
}

inline Table staircase_table(const std::vector<sweeps::SweepRecord>& records) {
  Table t{{"eta", "winding_T0", "classical_mean", "thermal_mean", "mu_eff", "degenerate"}, {}};
  for (const auto& r : records)
    t.add_row({r.eta, static_cast<long>(r.winding_T0), r.classical_mean, r.thermal_mean, r.mu_eff, r.degenerate});
  return t;
}

inline Table landscape_table(const std::vector<sweeps::LandscapeCurve>& curves) {
  Table t{{"eta", "x", "mu_eff", "x_peak", "mu_peak"}, {}};
  for (const auto& c : curves) {
    const auto x_peak = c.barrier ? std::optional<double>(c.barrier->x_peak) : std::nullopt;
    const auto mu_peak = c.barrier ? std::optional<double>(c.barrier->mu_peak) : std::nullopt;
    for (const auto& p : c.points) t.add_row({c.eta, p.x, p.mu_eff, optional_cell(x_peak), optional_cell(mu_peak)});
  }
  return t;
}

inline Table hysteresis_table(const std::vector<sweeps::HysteresisRecord>& records) {
  Table t{{"eta", "direction", "winding", "barrier_height"}, {}};
  for (const auto& r : records)
    t.add_row({r.eta, std::string(r.direction == sweeps::Direction::up ? "up" : "down"),
               static_cast<long>(r.winding), optional_cell(r.barrier_height)});
  return t;
}

/// Single-row table from named values.
inline Table record_table(const Parameters& values) {
  Table t;
  std::vector<Cell> row;
  for (const auto& [key, value] : values) {
    t.columns.push_back(key);
    row.push_back(value);
  }
  t.add_row(std::move(row));
  return t;
}

/// Reads a plain-text key=value file. Blank lines and lines starting with '#'
/// are skipped; whitespace around keys and values is trimmed.
inline std::map<std::string, std::string> parse_key_values(std::istream& in) {
  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string{};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || trim(line.substr(0, eq)).empty())
      throw invalid_input("config line " + std::to_string(lineno) + " is not key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

struct RangeSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
};

/// Splits "start:stop:step"; a bare number v becomes v:v:1.
inline RangeSpec parse_range_spec(const std::string& text) {
  std::vector<double> parts;
  std::size_t p = 0;
  for (;;) {
    const auto colon = text.find(':', p);
    const auto piece = text.substr(p, colon == std::string::npos ? std::string::npos : colon - p);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(piece, &used);
    } catch (const std::exception&) {
      throw invalid_input("not a number: '" + piece + "'");
    }
    if (used != piece.size()) throw invalid_input("not a number: '" + piece + "'");
    parts.push_back(v);
    if (colon == std::string::npos) break;
    p = colon + 1;
  }
  if (parts.size() == 1) return {parts[0], parts[0], 1.0};
  if (parts.size() != 3) throw invalid_input("range must be 'start:stop:step': '" + text + "'");
  detail::require(parts[2] > 0.0, "range step must be > 0");
  detail::require(parts[1] >= parts[0], "range stop must not precede start");
  return {parts[0], parts[1], parts[2]};
}

/// "start:stop:step" -> inclusive grid; a bare number -> that single value;
/// comma-separated items are concatenated.
inline std::vector<double> parse_range(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  auto parse_number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw invalid_input("not a number: '" + s + "'");
    }
    if (used != s.size()) throw invalid_input("not a number: '" + s + "'");
    return v;
  };
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::vector<std::string> parts;
    std::size_t p = 0;
    for (;;) {
      const auto colon = item.find(':', p);
      parts.push_back(item.substr(p, colon == std::string::npos ? std::string::npos : colon - p));
      if (colon == std::string::npos) break;
      p = colon + 1;
    }
    if (parts.size() == 1) {
      out.push_back(parse_number(parts[0]));
    } else if (parts.size() == 3) {
      const auto grid = sweeps::linear_grid(parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2]));
      out.insert(out.end(), grid.begin(), grid.end());
    } else {
      throw invalid_input("range must be 'start:stop:step' or a number: '" + item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace acring::io
