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

#include <cstdint>
#include <numbers>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinphoton/lindblad/config.hpp"
#include "spinphoton/tomography/fit.hpp"

namespace spinphoton::app {

/// Schema or value error in a run configuration. `line` is 1-based, 0 if unknown.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line = 0);
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

enum class Mode { lindblad, analytical };

/// Where the analytical engine takes P↑, P↓ and the reflection amplitudes from.
enum class AnalyticalSource {
  extracted,  ///< steady-state Lindblad extraction at the configured laser
  published,  ///< |r↑↑|² = 0.69, |r↓↓|² = 0.37, |r↓↑|² = 0.06, P↑ = 0.51, real amplitudes
};

struct ExperimentConfig {
  std::vector<double> phi{std::numbers::pi / 6.0};  ///< rad, first-photon angles for correlations/stokes
  std::vector<double> detuning;                     ///< rad/s, ω_laser − ω_QD for the reflectivity scan
  std::vector<double> coherence_phi;                ///< rad, coherence-sweep angles
  Mode mode = Mode::lindblad;
};

struct FitConfig {
  tomography::FitOptions options;
  /// Derive options.oscillation_window_end from the Overhauser quadrature horizon.
  bool auto_window = true;
  double at_tau = 0.0;  ///< s, C_S extrapolation point
};

struct RunConfig {
  lindblad::SimulationConfig simulation;
  ExperimentConfig experiment;
  FitConfig fit;
  AnalyticalSource analytical_source = AnalyticalSource::extracted;
  std::filesystem::path output_dir = "out";

  /// Defaults for every section.
  static RunConfig defaults();

  /// Fit options with the oscillation window resolved.
  [[nodiscard]] tomography::FitOptions fit_options() const;

  /// One `key = value` line per resolved field, fixed order, round-trip doubles.
  [[nodiscard]] std::string canonical() const;
  /// FNV-1a 64 of canonical().
  [[nodiscard]] std::uint64_t hash() const;
};

/// Parse YAML text. Unknown keys, wrong types and invalid values raise ConfigError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace spinphoton::app
