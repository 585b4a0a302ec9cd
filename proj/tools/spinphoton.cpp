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

// Command-line front end.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "spinphoton/app/acceptance.hpp"
#include "spinphoton/app/commands.hpp"
#include "spinphoton/app/config_file.hpp"
#include "spinphoton/app/csv.hpp"
#include "spinphoton/errors.hpp"

namespace {

using namespace spinphoton;

enum Exit : int { kOk = 0, kUsage = 1, kConfig = 2, kNumerical = 3, kValidation = 4 };

struct Common {
  std::string config;
  std::string out;
  std::optional<long long> seed;
  std::string mode;
};

void add_common(CLI::App* cmd, Common& c, bool with_mode) {
  cmd->add_option("--config", c.config, "YAML run configuration");
  cmd->add_option("--out", c.out, "output directory (overrides output.dir)");
  cmd->add_option("--seed", c.seed, "random seed (overrides seed)")->check(CLI::NonNegativeNumber);
  if (with_mode) {
    cmd->add_option("--mode", c.mode, "engine for traces")->check(CLI::IsMember({"analytical", "lindblad"}));
  }
}

app::RunConfig resolve(const Common& c) {
  app::RunConfig cfg = c.config.empty() ? app::RunConfig::defaults() : app::load_config(c.config);
  if (!c.out.empty()) cfg.output_dir = c.out;
  if (c.seed) cfg.simulation.rng_seed = static_cast<std::uint64_t>(*c.seed);
  if (c.mode == "analytical") cfg.experiment.mode = app::Mode::analytical;
  if (c.mode == "lindblad") cfg.experiment.mode = app::Mode::lindblad;
  return cfg;
}

void report(const app::Paths& paths) {
  for (const auto& p : paths) std::cout << "wrote " << p.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Spin-photon back-action simulator and tomography fitter"};
  cli.set_version_flag("--version", app::tool_version());
  cli.require_subcommand(1);

  Common common;
  auto* scan = cli.add_subcommand("reflectivity-scan", "unconditional reflectivities versus laser-QD detuning");
  auto* corr = cli.add_subcommand("correlations", "g2 for each first-photon angle and all six bases");
  auto* stokes = cli.add_subcommand("stokes", "conditional Stokes and Bloch traces");
  auto* sweep = cli.add_subcommand("coherence-sweep", "Bloch and Stokes coherence versus measurement angle");
  auto* fit = cli.add_subcommand("fit", "fit omega_L, T1 and T2* to a Stokes trace CSV");
  auto* validate = cli.add_subcommand("validate", "run the acceptance criteria");
  for (auto* c : {scan, corr, stokes, sweep, fit, validate}) add_common(c, common, c == stokes || c == sweep);

  std::string trace;
  fit->add_option("trace", trace, "CSV with columns tau_ns,s_HV,s_DA,s_RL")->required();
  bool list = false;
  std::vector<int> only;
  validate->add_flag("--list", list, "list the criteria without running them");
  validate->add_option("--only", only, "run only these criterion numbers");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return cli.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed() && list) {
      for (const auto& c : app::acceptance_criteria()) std::cout << c.id << "  " << c.title << "\n";
      return kOk;
    }
    const app::RunConfig cfg = resolve(common);
    if (scan->parsed()) report(app::cmd_reflectivity_scan(cfg));
    if (corr->parsed()) report(app::cmd_correlations(cfg));
    if (stokes->parsed()) report(app::cmd_stokes(cfg));
    if (sweep->parsed()) report(app::cmd_coherence_sweep(cfg));
    if (fit->parsed()) report(app::cmd_fit(cfg, trace, std::cout));
    if (validate->parsed()) {
      bool all = true;
      for (const auto& r : app::run_acceptance(cfg, &std::cout, only)) all = all && r.pass;
      return all ? kOk : kValidation;
    }
    return kOk;
  } catch (const app::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const app::CsvError& e) {
    std::cerr << "trace error: " << e.what() << "\n";
    return kConfig;
  } catch (const tomography::NoOscillationDetected& e) {
    std::cerr << "fit error: " << e.what() << "\n";
    return kNumerical;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::domain_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  }
}
