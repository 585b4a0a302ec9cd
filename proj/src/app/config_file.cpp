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

#include "spinphoton/app/config_file.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "spinphoton/app/csv.hpp"
#include "spinphoton/device/units.hpp"
#include "spinphoton/lindblad/overhauser.hpp"

namespace spinphoton::app {

namespace {

namespace u = spinphoton::units;

constexpr double kGHz = u::kTwoPi * 1e9;  // config GHz are ω/2π
constexpr double kNs = 1e-9;
constexpr double kMilliTesla = 1e-3;
constexpr double kDeg = u::kPi / 180.0;

std::string with_line(const std::string& what, int line) {
  return line > 0 ? "line " + std::to_string(line) + ": " + what : what;
}

int line_of(const YAML::Node& n) { return n.Mark().is_null() ? 0 : n.Mark().line + 1; }

// A mapping whose keys are consumed one by one; leftovers are unknown keys.
class Section {
 public:
  Section(const YAML::Node& node, std::string path) : node_(node), path_(std::move(path)) {
    if (node_ && !node_.IsNull() && !node_.IsMap()) {
      throw ConfigError("'" + path_ + "' must be a mapping", line_of(node_));
    }
  }

  [[nodiscard]] bool has(const std::string& key) const { return node_ && node_.IsMap() && node_[key]; }

  YAML::Node take(const std::string& key) {
    seen_.insert(key);
    return has(key) ? node_[key] : YAML::Node();
  }

  template <class T>
  void read(const std::string& key, T& out, const char* type) {
    const YAML::Node n = take(key);
    if (!has(key)) return;
    try {
      out = n.as<T>();
    } catch (const YAML::Exception&) {
      throw ConfigError("'" + name(key) + "' must be " + type, line_of(n));
    }
  }

  /// Reads a number given in `factor` units into SI.
  void number(const std::string& key, double& si, double factor) {
    double v = si / factor;
    read(key, v, "a number");
    if (has(key)) {
      if (!std::isfinite(v)) throw ConfigError("'" + name(key) + "' must be finite", line_of(node_[key]));
      si = v * factor;
    }
  }

  Section sub(const std::string& key) { return Section(take(key), name(key)); }

  [[nodiscard]] std::string name(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  [[nodiscard]] int line() const { return line_of(node_); }

  void finish() const {
    if (!node_ || !node_.IsMap()) return;
    for (const auto& kv : node_) {
      const std::string k = kv.first.as<std::string>();
      if (!seen_.count(k)) throw ConfigError("unknown key '" + name(k) + "'", line_of(kv.first));
    }
  }

 private:
  YAML::Node node_;
  std::string path_;
  std::set<std::string> seen_;
};

std::vector<double> range(double start, double stop, int points) {
  std::vector<double> v;
  for (int i = 0; i < points; ++i) {
    v.push_back(points == 1 ? start : start + (stop - start) * i / static_cast<double>(points - 1));
  }
  return v;
}

std::vector<double> angle_list(Section& s, const std::string& key, std::vector<double> fallback) {
  const YAML::Node n = s.take(key);
  if (!s.has(key)) return fallback;
  std::vector<double> out;
  try {
    if (n.IsSequence()) {
      for (const auto& e : n) out.push_back(e.as<double>() * kDeg);
    } else {
      out.push_back(n.as<double>() * kDeg);
    }
  } catch (const YAML::Exception&) {
    throw ConfigError("'" + s.name(key) + "' must be a number or a list of numbers (degrees)", line_of(n));
  }
  if (out.empty()) throw ConfigError("'" + s.name(key) + "' must not be empty", line_of(n));
  for (double a : out) {
    if (!std::isfinite(a)) throw ConfigError("'" + s.name(key) + "' must be finite", line_of(n));
  }
  return out;
}

template <class E>
E choice(Section& s, const std::string& key, E current, std::initializer_list<std::pair<const char*, E>> options) {
  const YAML::Node n = s.take(key);
  if (!s.has(key)) return current;
  std::string v;
  std::string allowed;
  try {
    v = n.as<std::string>();
  } catch (const YAML::Exception&) {
    v = "";
  }
  for (const auto& [label, value] : options) {
    if (v == label) return value;
    allowed += (allowed.empty() ? "" : ", ") + std::string(label);
  }
  throw ConfigError("'" + s.name(key) + "' must be one of: " + allowed, line_of(n));
}

// Wraps validation failures of the library types with the section line.
template <class F>
void checked(F&& f, int line) {
  try {
    f();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what(), line);
  }
}

}  // namespace

ConfigError::ConfigError(const std::string& what, int line) : std::runtime_error(with_line(what, line)), line_(line) {}

RunConfig RunConfig::defaults() {
  RunConfig c;
  c.experiment.detuning = range(-5.0 * kGHz, 5.0 * kGHz, 101);
  c.experiment.coherence_phi = range(0.0, u::kPi, 19);
  return c;
}

tomography::FitOptions RunConfig::fit_options() const {
  tomography::FitOptions o = fit.options;
  if (fit.auto_window) {
    const double h = lindblad::quadrature_horizon(simulation.device.gamma_e, simulation.overhauser_nodes);
    o.oscillation_window_end = std::isfinite(h) ? h : 0.0;
  }
  return o;
}

std::string RunConfig::canonical() const {
  std::ostringstream os;
  auto put = [&](const char* k, double v) { os << k << " = " << format_number(v) << "\n"; };
  auto list = [&](const char* k, const std::vector<double>& v) {
    os << k << " = [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << format_number(v[i]);
    os << "]\n";
  };
  const device::DeviceParams& d = simulation.device;
  put("device.kappa_H", d.kappa_H);
  put("device.kappa_V", d.kappa_V);
  put("device.eta_top_H", d.eta_top_H);
  put("device.eta_top_V", d.eta_top_V);
  put("device.delta_c", d.delta_c);
  put("device.delta_QD", d.delta_QD);
  put("device.g", d.g);
  put("device.gamma_sp", d.gamma_sp);
  put("device.gamma_star", d.gamma_star);
  put("device.g_e_perp", d.g_e_perp);
  put("device.g_h_perp", d.g_h_perp);
  put("device.B", d.B);
  put("device.gamma_e", d.gamma_e);
  put("device.tau_esc", d.tau_esc);
  put("device.P_charge", d.P_charge);
  put("device.drive_photon_rate", d.drive_photon_rate);
  put("simulation.fock_cutoff", simulation.fock_cutoff);
  put("simulation.laser_detuning", simulation.laser_detuning);
  put("simulation.overhauser_nodes", simulation.overhauser_nodes);
  put("simulation.gamma_sp_per_transition", simulation.gamma_sp_per_transition ? 1 : 0);
  put("simulation.g2_charged_only", simulation.g2_normalization == lindblad::G2Normalization::charged_only ? 1 : 0);
  put("simulation.tau_grid.start", simulation.tau_grid.start);
  put("simulation.tau_grid.stop", simulation.tau_grid.stop);
  put("simulation.tau_grid.points", simulation.tau_grid.points);
  list("experiment.phi", experiment.phi);
  list("experiment.detuning", experiment.detuning);
  list("experiment.coherence_phi", experiment.coherence_phi);
  put("experiment.analytical", experiment.mode == Mode::analytical ? 1 : 0);
  const tomography::FitOptions o = fit_options();
  put("fit.exponential", o.envelope == tomography::Envelope::exponential ? 1 : 0);
  put("fit.exclude_before", o.exclude_before);
  put("fit.t1_limited_coherence", o.t1_limited_coherence ? 1 : 0);
  put("fit.rational_relaxation", o.rational_relaxation ? 1 : 0);
  put("fit.amplitude_floor", o.amplitude_floor);
  put("fit.oscillation_window_end", o.oscillation_window_end);
  put("fit.at_tau", fit.at_tau);
  put("analytical.published", analytical_source == AnalyticalSource::published ? 1 : 0);
  os << "seed = " << simulation.rng_seed << "\n";
  return os.str();
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t RunConfig::hash() const { return fnv1a64(canonical()); }

RunConfig parse_config(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError("YAML syntax: " + e.msg, e.mark.line + 1);
  }
  RunConfig c = RunConfig::defaults();
  Section top(root, "");

  Section dev = top.sub("device");
  device::DeviceParams& d = c.simulation.device;
  dev.number("kappa_H_GHz", d.kappa_H, kGHz);
  dev.number("kappa_V_GHz", d.kappa_V, kGHz);
  dev.number("eta_top_H", d.eta_top_H, 1.0);
  dev.number("eta_top_V", d.eta_top_V, 1.0);
  dev.number("delta_c_GHz", d.delta_c, kGHz);
  dev.number("delta_QD_GHz", d.delta_QD, kGHz);
  dev.number("g_GHz", d.g, kGHz);
  dev.number("gamma_sp_GHz", d.gamma_sp, kGHz);
  dev.number("gamma_star_GHz", d.gamma_star, kGHz);
  dev.number("g_e_perp", d.g_e_perp, 1.0);
  dev.number("g_h_perp", d.g_h_perp, 1.0);
  dev.number("B_mT", d.B, kMilliTesla);
  dev.number("gamma_e_GHz", d.gamma_e, kGHz);
  dev.number("tau_esc_ns", d.tau_esc, kNs);
  dev.number("P_charge", d.P_charge, 1.0);
  dev.number("drive_photon_rate", d.drive_photon_rate, 1.0);
  dev.finish();
  checked([&] { d.validate(); }, dev.line());

  Section sim = top.sub("simulation");
  lindblad::SimulationConfig& s = c.simulation;
  sim.read("fock_cutoff", s.fock_cutoff, "an integer");
  sim.number("laser_detuning_GHz", s.laser_detuning, kGHz);
  sim.read("overhauser_nodes", s.overhauser_nodes, "an integer");
  sim.read("gamma_sp_per_transition", s.gamma_sp_per_transition, "a boolean");
  s.g2_normalization = choice(sim, "g2_normalization", s.g2_normalization,
                              {{"charge_blended", lindblad::G2Normalization::charge_blended},
                               {"charged_only", lindblad::G2Normalization::charged_only}});
  Section grid = sim.sub("tau_grid");
  grid.number("start_ns", s.tau_grid.start, kNs);
  grid.number("stop_ns", s.tau_grid.stop, kNs);
  grid.read("points", s.tau_grid.points, "an integer");
  grid.finish();
  sim.finish();
  checked([&] { s.validate(); }, sim.line());

  Section exp = top.sub("experiment");
  ExperimentConfig& e = c.experiment;
  e.phi = angle_list(exp, "phi_deg", e.phi);
  e.coherence_phi = angle_list(exp, "coherence_phi_deg", e.coherence_phi);
  e.mode = choice(exp, "mode", e.mode, {{"lindblad", Mode::lindblad}, {"analytical", Mode::analytical}});
  Section det = exp.sub("detuning");
  double d0 = e.detuning.front();
  double d1 = e.detuning.back();
  int dn = static_cast<int>(e.detuning.size());
  det.number("start_GHz", d0, kGHz);
  det.number("stop_GHz", d1, kGHz);
  det.read("points", dn, "an integer");
  det.finish();
  if (dn < 1 || (dn > 1 && !(d1 > d0))) throw ConfigError("'experiment.detuning' needs points >= 1 and stop > start", det.line());
  e.detuning = range(d0, d1, dn);
  exp.finish();

  Section fit = top.sub("fit");
  tomography::FitOptions& o = c.fit.options;
  o.envelope = choice(fit, "envelope", o.envelope,
                      {{"gaussian", tomography::Envelope::gaussian}, {"exponential", tomography::Envelope::exponential}});
  fit.number("exclude_before_ns", o.exclude_before, kNs);
  fit.read("t1_limited_coherence", o.t1_limited_coherence, "a boolean");
  fit.read("rational_relaxation", o.rational_relaxation, "a boolean");
  fit.number("amplitude_floor", o.amplitude_floor, 1.0);
  if (fit.has("oscillation_window_end_ns")) {
    const YAML::Node n = fit.take("oscillation_window_end_ns");
    std::string v;
    try {
      v = n.as<std::string>();
    } catch (const YAML::Exception&) {
    }
    if (v != "auto") {
      fit.number("oscillation_window_end_ns", o.oscillation_window_end, kNs);
      if (o.oscillation_window_end < 0.0) throw ConfigError("'fit.oscillation_window_end_ns' must be >= 0", line_of(n));
      c.fit.auto_window = false;
    }
  }
  fit.number("at_tau_ns", c.fit.at_tau, kNs);
  fit.finish();
  if (!(o.exclude_before >= 0.0)) throw ConfigError("'fit.exclude_before_ns' must be >= 0", fit.line());
  if (!(o.amplitude_floor >= 0.0)) throw ConfigError("'fit.amplitude_floor' must be >= 0", fit.line());
  if (!(c.fit.at_tau >= 0.0)) throw ConfigError("'fit.at_tau_ns' must be >= 0", fit.line());

  Section an = top.sub("analytical");
  c.analytical_source = choice(an, "source", c.analytical_source,
                               {{"extracted", AnalyticalSource::extracted}, {"published", AnalyticalSource::published}});
  an.finish();

  Section out = top.sub("output");
  std::string dir = c.output_dir.string();
  out.read("dir", dir, "a string");
  out.finish();
  c.output_dir = dir;

  long long seed = 0;
  top.read("seed", seed, "an integer");
  if (seed < 0) throw ConfigError("'seed' must be >= 0");
  c.simulation.rng_seed = static_cast<std::uint64_t>(seed);
  top.finish();
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream os;
  os << f.rdbuf();
  try {
    return parse_config(os.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace spinphoton::app
