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

#include "spinphoton/app/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "spinphoton/backaction/backaction.hpp"
#include "spinphoton/device/units.hpp"

namespace spinphoton::app {

namespace {

namespace u = spinphoton::units;

void require_lindblad(const RunConfig& cfg, const char* command) {
  if (cfg.experiment.mode != Mode::lindblad) {
    throw ConfigError(std::string("experiment.mode 'analytical' is not available for ") + command);
  }
}

backaction::SpinDynamicsParams dynamics(const RunConfig& cfg, const AnalyticalInputs& in) {
  return backaction::SpinDynamicsParams::from_device(cfg.simulation.device, in.p_up, in.p_down,
                                                     cfg.fit.options.envelope);
}

}  // namespace

AnalyticalInputs published_inputs() {
  return {0.51, 0.49, device::ReflectionSet::real_positive(0.69, 0.37, 0.06)};
}

AnalyticalInputs analytical_inputs(const RunConfig& cfg) {
  if (cfg.analytical_source == AnalyticalSource::published) return published_inputs();
  const lindblad::ReflectionExtraction ex = lindblad::extract_reflection_data(cfg.simulation);
  return {ex.p_up, ex.p_down, ex.r};
}

std::string provenance(const RunConfig& cfg) {
  std::ostringstream os;
  os << "spinphoton " << tool_version() << " config fnv1a64=" << std::hex << std::setw(16) << std::setfill('0')
     << cfg.hash();
  return os.str();
}

std::string angle_tag(double phi) {
  const double deg = std::round(u::rad_to_deg(phi) * 1e6) / 1e6;
  return format_number(deg);
}

std::vector<double> symmetric_grid(const lindblad::TauGrid& grid) {
  const std::vector<double> pos = grid.values();
  std::vector<double> out;
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
    if (*it > 0.0) out.push_back(-*it);
  }
  out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

StokesTrace stokes_for_mode(const RunConfig& cfg, double phi, const lindblad::Simulation* sim) {
  const std::vector<double> grid = cfg.simulation.tau_grid.values();
  if (cfg.experiment.mode == Mode::analytical) {
    const AnalyticalInputs in = analytical_inputs(cfg);
    return backaction::stokes_trace(phi, in.p_up, in.p_down, in.r, dynamics(cfg, in), grid);
  }
  if (sim) return sim->stokes(phi, grid);
  return lindblad::Simulation(cfg.simulation).stokes(phi, grid);
}

std::vector<SweepRow> coherence_sweep_rows(const RunConfig& cfg, const lindblad::Simulation* sim) {
  std::optional<lindblad::Simulation> own;
  if (!sim) sim = &own.emplace(cfg.simulation);
  const AnalyticalInputs in = analytical_inputs(cfg);
  const backaction::SpinDynamicsParams dyn = dynamics(cfg, in);
  const std::vector<backaction::CoherencePoint> ana =
      backaction::coherence_sweep(cfg.experiment.coherence_phi, in.p_up, in.p_down, in.r, cfg.fit.at_tau, dyn);
  const std::vector<double> grid = cfg.simulation.tau_grid.values();
  const tomography::FitOptions options = cfg.fit_options();
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < ana.size(); ++i) {
    const double phi = cfg.experiment.coherence_phi[i];
    SweepRow row;
    row.phi = phi;
    row.C_S_analytical = ana[i].C_S;
    row.C_B = cfg.experiment.mode == Mode::analytical ? ana[i].C_B : sim->click(phi).reduced_spin.coherence();
    const tomography::FitResult fit = tomography::extract_all(sim->stokes(phi, grid), options);
    row.C_S_numerical = tomography::stokes_coherence(fit, cfg.fit.at_tau);
    rows.push_back(row);
  }
  return rows;
}

CsvTable reflectivity_table(const lindblad::ReflectivityScan& scan) {
  CsvTable t{{"detuning_GHz", "P_VtoV", "P_VtoH", "P_cav"}, {}};
  for (std::size_t i = 0; i < scan.detuning.size(); ++i) {
    t.rows.push_back({u::angular_to_ghz(scan.detuning[i]), scan.P_VtoV[i], scan.P_VtoH[i], scan.P_cav[i]});
  }
  return t;
}

CsvTable coherence_table(const std::vector<SweepRow>& rows) {
  CsvTable t{{"phi_deg", "C_B", "C_S_analytical", "C_S_numerical"}, {}};
  for (const SweepRow& r : rows) t.rows.push_back({u::rad_to_deg(r.phi), r.C_B, r.C_S_analytical, r.C_S_numerical});
  return t;
}

CsvTable correlation_table(const qcore::CorrelationTrace& trace) {
  CsvTable t{{"tau_ns", "g2"}, {}};
  for (std::size_t i = 0; i < trace.size(); ++i) t.rows.push_back({trace.tau()[i] * 1e9, trace.values()[i]});
  return t;
}

std::string describe_fit(const tomography::FitResult& fit, double at_tau) {
  std::ostringstream os;
  auto put = [&](const char* k, double v) { os << k << ": " << format_number(v) << "\n"; };
  os << "status: " << fit.oscillation_status << "\n";
  put("T1_ns", fit.T1 * 1e9);
  put("T1_ns_stderr", fit.T1_error * 1e9);
  put("hv_offset", fit.hv.params.offset);
  put("hv_amplitude", fit.hv.params.amplitude);
  put("hv_norm_gamma", fit.hv.params.norm_gamma);
  if (fit.has_oscillation()) {
    put("omega_L_rad_per_ns", fit.omega_L * 1e-9);
    put("omega_L_rad_per_ns_stderr", fit.omega_L_error * 1e-9);
    put("T_L_ps", u::kTwoPi / fit.omega_L * 1e12);
    put("T2_star_ns", fit.T2_star * 1e9);
    put("T2_star_ns_stderr", fit.T2_star_error * 1e9);
    for (const auto& [name, f] : {std::pair{"da", &*fit.da}, std::pair{"rl", &*fit.rl}}) {
      os << name << "_amplitude: " << format_number(f->params.amplitude) << "\n";
      os << name << "_phase_rad: " << format_number(f->params.phase) << "\n";
      os << name << "_offset: " << format_number(f->params.offset) << "\n";
    }
    put("quadrature_error", fit.quadrature_error);
  }
  put("C_S", tomography::stokes_coherence(fit, at_tau));
  put("residual_norm", fit.residual_norm);
  return os.str();
}

Paths cmd_reflectivity_scan(const RunConfig& cfg) {
  require_lindblad(cfg, "reflectivity-scan");
  const lindblad::ReflectivityScan scan = lindblad::unconditional_reflectivities(cfg.simulation, cfg.experiment.detuning);
  const auto path = cfg.output_dir / "reflectivity_scan.csv";
  write_csv(path, reflectivity_table(scan), provenance(cfg));
  return {path};
}

Paths cmd_correlations(const RunConfig& cfg) {
  require_lindblad(cfg, "correlations");
  const lindblad::Simulation sim(cfg.simulation);
  const std::vector<double> grid = symmetric_grid(cfg.simulation.tau_grid);
  Paths out;
  for (double phi : cfg.experiment.phi) {
    for (device::Basis b : device::kAllBases) {
      const auto path = cfg.output_dir / ("g2_M" + angle_tag(phi) + "_" + std::string(device::basis_name(b)) + ".csv");
      write_csv(path, correlation_table(sim.g2(phi, b, grid)), provenance(cfg));
      out.push_back(path);
    }
  }
  return out;
}

Paths cmd_stokes(const RunConfig& cfg) {
  std::optional<lindblad::Simulation> sim;
  std::optional<AnalyticalInputs> in;
  if (cfg.experiment.mode == Mode::lindblad) {
    sim.emplace(cfg.simulation);
  } else {
    in = analytical_inputs(cfg);
  }
  const std::vector<double> grid = cfg.simulation.tau_grid.values();
  Paths out;
  for (double phi : cfg.experiment.phi) {
    StokesTrace s;
    BlochTrace b;
    if (sim) {
      s = sim->stokes(phi, grid);
      b = sim->bloch(phi, grid);
    } else {
      const backaction::SpinDynamicsParams dyn = dynamics(cfg, *in);
      s = backaction::stokes_trace(phi, in->p_up, in->p_down, in->r, dyn, grid);
      b = backaction::bloch_trace(phi, in->p_up, in->p_down, in->r, dyn, grid);
    }
    const std::string tag = angle_tag(phi);
    out.push_back(cfg.output_dir / ("stokes_M" + tag + ".csv"));
    write_csv(out.back(), stokes_table(s), provenance(cfg));
    out.push_back(cfg.output_dir / ("bloch_M" + tag + ".csv"));
    write_csv(out.back(), bloch_table(b), provenance(cfg));
  }
  return out;
}

Paths cmd_coherence_sweep(const RunConfig& cfg) {
  const auto path = cfg.output_dir / "coherence_sweep.csv";
  write_csv(path, coherence_table(coherence_sweep_rows(cfg)), provenance(cfg));
  return {path};
}

Paths cmd_fit(const RunConfig& cfg, const std::filesystem::path& trace, std::ostream& report) {
  const StokesTrace s = read_stokes_csv(trace);
  const tomography::FitResult fit = tomography::extract_all(s, cfg.fit_options());
  const std::string text = describe_fit(fit, cfg.fit.at_tau);
  report << text;

  const auto stem = trace.stem().string();
  Paths out{cfg.output_dir / ("fit_" + stem + ".txt"), cfg.output_dir / ("fit_" + stem + "_residuals.csv")};
  std::filesystem::create_directories(cfg.output_dir);
  {
    std::ofstream f(out[0], std::ios::binary | std::ios::trunc);
    f << "# " << provenance(cfg) << "\n" << text;
    if (!f) throw std::runtime_error("write to " + out[0].string() + " failed");
  }
  CsvTable t{{"tau_ns", "r_HV"}, {}};
  if (fit.has_oscillation()) {
    t.columns.push_back("r_DA");
    t.columns.push_back("r_RL");
  }
  for (std::size_t i = 0; i < s.tau.size(); ++i) {
    std::vector<double> row{s.tau[i] * 1e9, s.s_HV[i] - fit.hv.value(s.tau[i])};
    if (fit.has_oscillation()) {
      row.push_back(s.s_DA[i] - fit.da->value(s.tau[i]));
      row.push_back(s.s_RL[i] - fit.rl->value(s.tau[i]));
    }
    t.rows.push_back(std::move(row));
  }
  write_csv(out[1], t, provenance(cfg) + " trace=" + trace.filename().string());
  return out;
}

}  // namespace spinphoton::app
