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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>

#include "spinphoton/app/commands.hpp"
#include "spinphoton/app/config_file.hpp"
#include "spinphoton/app/csv.hpp"
#include "spinphoton/device/units.hpp"

using namespace spinphoton;
using namespace spinphoton::app;

namespace {

std::filesystem::path scratch_dir() {
  const auto d = std::filesystem::temp_directory_path() / "spinphoton_test_app";
  std::filesystem::create_directories(d);
  return d;
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
  const auto p = scratch_dir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

int error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("empty config gives the defaults") {
  const RunConfig a = parse_config("");
  const RunConfig b = RunConfig::defaults();
  CHECK(a.canonical() == b.canonical());
  CHECK(a.hash() == b.hash());
  CHECK(a.experiment.detuning.size() == 101);
  CHECK(a.experiment.coherence_phi.size() == 19);
}

TEST_CASE("units are converted to SI") {
  const RunConfig c = parse_config(
      "device:\n"
      "  kappa_H_GHz: 10\n"
      "  B_mT: 100\n"
      "  tau_esc_ns: 3.5\n"
      "experiment:\n"
      "  phi_deg: [0, 90]\n"
      "fit:\n"
      "  exclude_before_ns: 0.5\n"
      "  oscillation_window_end_ns: 4\n");
  CHECK(c.simulation.device.kappa_H == doctest::Approx(units::kTwoPi * 10e9));
  CHECK(c.simulation.device.B == doctest::Approx(0.1));
  CHECK(c.simulation.device.tau_esc == doctest::Approx(3.5e-9));
  REQUIRE(c.experiment.phi.size() == 2);
  CHECK(c.experiment.phi[1] == doctest::Approx(units::kPi / 2));
  CHECK(c.fit.options.exclude_before == doctest::Approx(0.5e-9));
  CHECK_FALSE(c.fit.auto_window);
  CHECK(c.fit_options().oscillation_window_end == doctest::Approx(4e-9));
}

TEST_CASE("auto oscillation window follows the quadrature horizon") {
  const RunConfig c = parse_config("fit:\n  oscillation_window_end_ns: auto\n");
  CHECK(c.fit.auto_window);
  const double w = c.fit_options().oscillation_window_end;
  CHECK(w > 3e-9);
  CHECK(w < 5e-9);
  const RunConfig one = parse_config("simulation:\n  overhauser_nodes: 1\n");
  CHECK(one.fit_options().oscillation_window_end == 0.0);
}

TEST_CASE("schema errors carry line numbers") {
  CHECK(error_line("device:\n  kappa_H_GHz: 10\n  kapa_V_GHz: 3\n") == 3);
  CHECK(error_line("simulation:\n  fock_cutoff: many\n") == 2);
  CHECK(error_line("fit:\n  envelope: lorentzian\n") == 2);
  CHECK(error_line("bogus: 1\n") == 1);
  CHECK_THROWS_AS(parse_config("device: [1, 2]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("device:\n  g_GHz: -1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("seed: -3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("device: {g_GHz: 1\n"), ConfigError);
  try {
    parse_config("device:\n  kapa_V_GHz: 3\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("device.kapa_V_GHz") != std::string::npos);
  }
}

TEST_CASE("config hash is stable and sensitive") {
  const std::string text = "device:\n  B_mT: 250\nseed: 4\n";
  CHECK(parse_config(text).hash() == parse_config(text).hash());
  CHECK(parse_config(text).hash() == parse_config("seed: 4\ndevice: {B_mT: 250.0}\n").hash());
  CHECK(parse_config(text).hash() != parse_config("device:\n  B_mT: 251\nseed: 4\n").hash());
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("load_config reports the file") {
  const auto p = write_file("bad.yaml", "fit:\n  nope: 1\n");
  try {
    load_config(p);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("bad.yaml") != std::string::npos);
    CHECK(msg.find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(load_config(scratch_dir() / "missing.yaml"), ConfigError);
}

TEST_CASE("format_number round-trips") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng) * std::pow(10.0, 40.0 * u(rng));
    CHECK(std::stod(format_number(v)) == v);
  }
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("stokes CSV round trip") {
  StokesTrace s;
  for (int i = 0; i < 5; ++i) {
    s.tau.push_back(i * 0.1e-9);
    s.s_HV.push_back(-0.9 + 0.01 * i);
    s.s_DA.push_back(0.1 / (i + 3));
    s.s_RL.push_back(-0.2 * i);
  }
  const auto p = scratch_dir() / "trace.csv";
  write_csv(p, stokes_table(s), "test");
  const StokesTrace r = read_stokes_csv(p);
  REQUIRE(r.tau.size() == s.tau.size());
  for (std::size_t i = 0; i < s.tau.size(); ++i) {
    CHECK(r.tau[i] == doctest::Approx(s.tau[i]).epsilon(1e-15));
    CHECK(r.s_HV[i] == s.s_HV[i]);
    CHECK(r.s_DA[i] == s.s_DA[i]);
    CHECK(r.s_RL[i] == s.s_RL[i]);
  }
  const std::string text = render_csv(stokes_table(s), "hello");
  CHECK(text.rfind("# hello\ntau_ns,", 0) == 0);
}

TEST_CASE("malformed CSV is rejected with a line number") {
  const auto bad = write_file("bad.csv", "# c\ntau_ns,s_HV,s_DA,s_RL\n0,1,2,3\n0.1,1,x,3\n");
  try {
    read_stokes_csv(bad);
    FAIL("expected CsvError");
  } catch (const CsvError& e) {
    CHECK(std::string(e.what()).find("4") != std::string::npos);
  }
  CHECK_THROWS_AS(read_stokes_csv(write_file("short.csv", "tau_ns,s_HV,s_DA,s_RL\n0,1,2\n")), CsvError);
  CHECK_THROWS_AS(read_stokes_csv(write_file("cols.csv", "tau_ns,s_HV,s_DA\n0,1,2\n")), CsvError);
  CHECK_THROWS_AS(read_stokes_csv(scratch_dir() / "missing.csv"), CsvError);
}

TEST_CASE("symmetric grid and angle tags") {
  lindblad::TauGrid g;
  g.start = 0.0;
  g.stop = 2e-9;
  g.points = 3;
  const std::vector<double> v = symmetric_grid(g);
  REQUIRE(v.size() == 5);
  CHECK(v.front() == doctest::Approx(-2e-9));
  CHECK(v[2] == 0.0);
  CHECK(v.back() == doctest::Approx(2e-9));
  CHECK(angle_tag(units::kPi / 6) == "30");
  CHECK(angle_tag(units::kPi / 8) == "22.5");
  CHECK(angle_tag(0.0) == "0");
}

TEST_CASE("analytical inputs from the published values") {
  const AnalyticalInputs in = published_inputs();
  CHECK(in.p_up == doctest::Approx(0.51));
  CHECK(std::norm(in.r.r_uu) == doctest::Approx(0.69));
  CHECK(std::norm(in.r.r_dd) == doctest::Approx(0.37));
  CHECK(std::norm(in.r.r_du) == doctest::Approx(0.06));
}

TEST_CASE("provenance line") {
  const RunConfig c = RunConfig::defaults();
  const std::string p = provenance(c);
  CHECK(p.rfind(std::string("spinphoton ") + tool_version() + " config fnv1a64=", 0) == 0);
  CHECK(p.size() == std::string("spinphoton ").size() + std::string(tool_version()).size() + 16 + 16);
}

namespace {

// Half-period from a least-squares line through the zero crossings in (lo, hi].
double half_period(const StokesTrace& s, double lo, double hi) {
  std::vector<double> z;
  for (std::size_t i = 1; i < s.tau.size(); ++i) {
    if (s.tau[i - 1] <= lo || s.tau[i] > hi) continue;
    const double a = s.s_DA[i - 1];
    const double b = s.s_DA[i];
    if ((a < 0.0) != (b < 0.0)) z.push_back(s.tau[i - 1] + (s.tau[i] - s.tau[i - 1]) * a / (a - b));
  }
  REQUIRE(z.size() >= 3);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    const double x = static_cast<double>(k);
    sx += x;
    sy += z[k];
    sxx += x * x;
    sxy += x * z[k];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("analytical and Lindblad engines agree on the precession frequency") {
  RunConfig c = parse_config("simulation:\n  fock_cutoff: 1\n  tau_grid: {start_ns: 0, stop_ns: 5, points: 501}\n");
  const lindblad::Simulation sim(c.simulation);
  const double hi = c.fit_options().oscillation_window_end;
  const double lo = c.fit.options.exclude_before;
  const StokesTrace num = stokes_for_mode(c, units::kPi / 6.0, &sim);
  c.experiment.mode = Mode::analytical;
  const StokesTrace ana = stokes_for_mode(c, units::kPi / 6.0, &sim);
  const double t_num = half_period(num, lo, hi);
  const double t_ana = half_period(ana, lo, hi);
  MESSAGE("T_L lindblad " << 2e12 * t_num << " ps, analytical " << 2e12 * t_ana << " ps");
  CHECK(std::abs(t_num / t_ana - 1.0) < 0.02);
}
