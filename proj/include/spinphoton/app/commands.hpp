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
#include <iosfwd>
#include <string>
#include <vector>

#include "spinphoton/app/config_file.hpp"
#include "spinphoton/app/csv.hpp"
#include "spinphoton/device/reflection.hpp"
#include "spinphoton/lindblad/simulation.hpp"
#include "spinphoton/tomography/fit.hpp"

namespace spinphoton::app {

using Paths = std::vector<std::filesystem::path>;

/// Inputs of the analytical engine, per RunConfig::analytical_source.
struct AnalyticalInputs {
  double p_up = 0.5;
  double p_down = 0.5;
  device::ReflectionSet r;
};
AnalyticalInputs analytical_inputs(const RunConfig& cfg);
AnalyticalInputs published_inputs();

/// "spinphoton <version> config fnv1a64=<hex>"
std::string provenance(const RunConfig& cfg);

/// Angle label used in file names: degrees, shortest form ("30", "22.5").
std::string angle_tag(double phi);

/// −stop … stop with the positive half taken from the configured τ grid.
std::vector<double> symmetric_grid(const lindblad::TauGrid& grid);

struct SweepRow {
  double phi = 0.0;  ///< rad
  double C_B = 0.0;
  double C_S_analytical = 0.0;
  double C_S_numerical = 0.0;
};
/// C_B follows the configured mode; C_S_numerical always comes from fits of
/// Lindblad traces. `sim` may be null, then one is built from the config.
std::vector<SweepRow> coherence_sweep_rows(const RunConfig& cfg, const lindblad::Simulation* sim = nullptr);

CsvTable reflectivity_table(const lindblad::ReflectivityScan& scan);
CsvTable coherence_table(const std::vector<SweepRow>& rows);
CsvTable correlation_table(const qcore::CorrelationTrace& trace);

/// Conditional Stokes trace for the configured mode.
StokesTrace stokes_for_mode(const RunConfig& cfg, double phi, const lindblad::Simulation* sim);

/// Structured text for a fit, one `key: value` per line.
std::string describe_fit(const tomography::FitResult& fit, double at_tau);

// Subcommands. Each writes into cfg.output_dir and returns the files written.
Paths cmd_reflectivity_scan(const RunConfig& cfg);
Paths cmd_correlations(const RunConfig& cfg);
Paths cmd_stokes(const RunConfig& cfg);
Paths cmd_coherence_sweep(const RunConfig& cfg);
/// Fits a trace file; the structured result also goes to `report`.
Paths cmd_fit(const RunConfig& cfg, const std::filesystem::path& trace, std::ostream& report);

}  // namespace spinphoton::app
