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

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinphoton/traces.hpp"

namespace spinphoton::app {

/// Malformed trace file. `line` is 1-based.
class CsvError : public std::runtime_error {
 public:
  CsvError(const std::filesystem::path& file, int line, const std::string& what);
};

const char* tool_version();

/// Shortest representation that round-trips; "nan", "inf", "-inf" otherwise.
std::string format_number(double v);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Column index by name, or throws std::out_of_range.
  [[nodiscard]] std::size_t column(const std::string& name) const;
};

/// `comment` is written verbatim after "# " as the first line.
std::string render_csv(const CsvTable& table, const std::string& comment);
void write_csv(const std::filesystem::path& path, const CsvTable& table, const std::string& comment);

/// Lines starting with '#' are skipped; the first remaining line is the header.
CsvTable read_csv(const std::filesystem::path& path);

/// Trace schema: tau_ns, s_HV, s_DA, s_RL (extra columns ignored).
StokesTrace read_stokes_csv(const std::filesystem::path& path);
CsvTable stokes_table(const StokesTrace& trace);
CsvTable bloch_table(const BlochTrace& trace);

}  // namespace spinphoton::app
