// Copyright 2026 The spinphoton Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinphoton/app/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace spinphoton::app {

namespace {

std::string located(const std::filesystem::path& file, int line, const std::string& what) {
  std::ostringstream os;
  os << file.string() << ":" << line << ": " << what;
  return os.str();
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string() : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

CsvError::CsvError(const std::filesystem::path& file, int line, const std::string& what)
    : std::runtime_error(located(file, line, what)) {}

const char* tool_version() { return SPINPHOTON_VERSION; }

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("no column '" + name + "'");
}

std::string render_csv(const CsvTable& table, const std::string& comment) {
  std::string out = "# " + comment + "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out += (i ? "," : "") + table.columns[i];
  out += "\n";
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw std::logic_error("render_csv: row width differs from header");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += format_number(row[i]);
    }
    out += "\n";
  }
  return out;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table, const std::string& comment) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << render_csv(table, comment);
  if (!f) throw std::runtime_error("write to " + path.string() + " failed");
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CsvError(path, 0, "cannot open file");
  CsvTable t;
  std::string line;
  int n = 0;
  bool have_header = false;
  while (std::getline(f, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cells = split(line);
    if (!have_header) {
      for (const auto& c : cells) {
        if (c.empty()) throw CsvError(path, n, "empty column name in header");
      }
      t.columns = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != t.columns.size()) {
      std::ostringstream os;
      os << "expected " << t.columns.size() << " fields, found " << cells.size();
      throw CsvError(path, n, os.str());
    }
    std::vector<double> row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      double v = 0.0;
      const char* b = cells[i].data();
      const char* e = b + cells[i].size();
      const auto res = std::from_chars(b, e, v);
      if (cells[i].empty() || res.ec != std::errc() || res.ptr != e) {
        throw CsvError(path, n, "field '" + t.columns[i] + "' is not a number: '" + cells[i] + "'");
      }
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  if (!have_header) throw CsvError(path, n, "no header line");
  return t;
}

StokesTrace read_stokes_csv(const std::filesystem::path& path) {
  const CsvTable t = read_csv(path);
  std::size_t c[4];
  const char* names[4] = {"tau_ns", "s_HV", "s_DA", "s_RL"};
  for (int k = 0; k < 4; ++k) {
    try {
      c[k] = t.column(names[k]);
    } catch (const std::out_of_range&) {
      throw CsvError(path, 1, std::string("missing column '") + names[k] + "' (schema: tau_ns,s_HV,s_DA,s_RL)");
    }
  }
  StokesTrace s;
  for (const auto& row : t.rows) {
    s.tau.push_back(row[c[0]] * 1e-9);
    s.s_HV.push_back(row[c[1]]);
    s.s_DA.push_back(row[c[2]]);
    s.s_RL.push_back(row[c[3]]);
  }
  try {
    s.validate();
  } catch (const std::exception& e) {
    throw CsvError(path, 0, e.what());
  }
  return s;
}

CsvTable stokes_table(const StokesTrace& trace) {
  CsvTable t{{"tau_ns", "s_HV", "s_DA", "s_RL"}, {}};
  for (std::size_t i = 0; i < trace.tau.size(); ++i) {
    t.rows.push_back({trace.tau[i] * 1e9, trace.s_HV[i], trace.s_DA[i], trace.s_RL[i]});
  }
  return t;
}

CsvTable bloch_table(const BlochTrace& trace) {
  CsvTable t{{"tau_ns", "sigma_x", "sigma_y", "sigma_z"}, {}};
  for (std::size_t i = 0; i < trace.tau.size(); ++i) {
    t.rows.push_back({trace.tau[i] * 1e9, trace.sx[i], trace.sy[i], trace.sz[i]});
  }
  return t;
}

}  // namespace spinphoton::app
