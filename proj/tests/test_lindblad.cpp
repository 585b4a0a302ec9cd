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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinphoton/device/levels.hpp"
#include "spinphoton/device/polarization.hpp"
#include "spinphoton/errors.hpp"
#include "spinphoton/lindblad/overhauser.hpp"
#include "spinphoton/lindblad/simulation.hpp"
#include "spinphoton/lindblad/system.hpp"

using namespace spinphoton;
using namespace spinphoton::lindblad;

namespace {

constexpr double kPi = std::numbers::pi;

// Dimension 16 instead of 36; the physics checks below do not need the second photon level.
SimulationConfig small(int nodes = 1) {
  SimulationConfig c;
  c.fock_cutoff = 1;
  c.overhauser_nodes = nodes;
  return c;
}

std::vector<double> grid(double stop, int n) {
  std::vector<double> t;
  for (int i = 0; i < n; ++i) t.push_back(stop * i / (n - 1));
  return t;
}

}  // namespace

TEST_CASE("Gauss-Hermite Overhauser rule") {
  const double g = 2.0 * kPi * 0.12e9;
  for (int n : {1, 3, 9, 15}) {
    const auto q = overhauser_quadrature(g, n);
    double w = 0, m2 = 0, m4 = 0;
    for (const auto& x : q) {
      w += x.weight;
      m2 += x.weight * x.offset * x.offset;
      m4 += x.weight * std::pow(x.offset, 4);
    }
    CHECK(w == doctest::Approx(1.0).epsilon(1e-14));
    if (n >= 3) {
      CHECK(m2 == doctest::Approx(g * g).epsilon(1e-12));
      CHECK(m4 == doctest::Approx(3.0 * std::pow(g, 4)).epsilon(1e-10));
    }
    CHECK(q[static_cast<std::size_t>(n / 2)].offset == 0.0);
  }
  CHECK_THROWS_AS(overhauser_quadrature(g, 4), std::invalid_argument);
  CHECK(overhauser_quadrature(g, 1)[0].offset == 0.0);
}

TEST_CASE("bare-spin Overhauser envelope") {
  const double g = 2.0 * kPi * 0.12e9;
  const double t2 = std::numbers::sqrt2 / g;
  auto bare = [](double t) { return [t](double d) { return std::cos(d * t); }; };
  for (double t : grid(2.0 * t2, 41)) {
    const double avg = overhauser_average(bare(t), g, 9);
    CHECK(std::abs(avg - std::exp(-0.5 * g * g * t * t)) < 0.01);
  }
  const double h = quadrature_horizon(g, 9);
  CHECK(h > 1.9 * t2);  // defined at 1e-3, tighter than the 1% envelope check
  for (double t : grid(h, 41)) {
    CHECK(std::abs(overhauser_average(bare(t), g, 9) - overhauser_average(bare(t), g, 15)) < 1e-3);
  }
  CHECK(std::isinf(quadrature_horizon(g, 1)));
}

TEST_CASE("steady state of the small model") {
  const Simulation sim(small());
  const SteadySummary s = sim.steady_summary();
  CHECK(s.p_up + s.p_down == doctest::Approx(1.0));
  CHECK(s.p_up > 0.5);  // the V drive pumps out of ↓
  CHECK(s.trion_population < 0.05);  // weak-drive regime
  CHECK(sim.max_top_fock_population() < 1e-4);
}

TEST_CASE("Fock cutoff violations are reported") {
  SimulationConfig c = small();
  c.device.drive_photon_rate = 1e12;
  CHECK_THROWS_AS(NodeModel(c, 0.0), CutoffError);
}

TEST_CASE("negative delays are the swapped correlation") {
  const Simulation sim(small(3));
  const auto m = device::measurement_polarization(kPi / 6.0);
  const auto d = device::basis_state(device::Basis::D);
  const std::vector<double> t = grid(5e-9, 21);
  std::vector<double> neg;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    if (*it > 0.0) neg.push_back(-*it);
  }
  const auto a = sim.g2(m, d, neg);
  const auto b = sim.g2(d, m, t);
  for (std::size_t i = 0; i < neg.size(); ++i) CHECK(std::abs(a.values()[i] - b.values()[t.size() - 1 - i]) < 1e-8);
}

TEST_CASE("correlations factorize at long delay") {
  const Simulation sim(small(3));
  const std::vector<double> t{-20e-9, 0.0, 20e-9};
  for (device::Basis b : device::kAllBases) {
    const auto g = sim.g2(kPi / 6.0, b, t);
    CHECK(std::abs(g.values()[0] - 1.0) < 0.02);
    CHECK(std::abs(g.values()[2] - 1.0) < 0.02);
  }
  const auto h = sim.g2(kPi / 6.0, device::Basis::H, t);
  const auto v = sim.g2(kPi / 6.0, device::Basis::V, t);
  CHECK(h.values()[1] < 1.0);
  CHECK(v.values()[1] > 1.0);
}

TEST_CASE("H detection carries no coherence") {
  const Simulation sim(small(3));
  const std::vector<double> t = grid(10e-9, 51);
  const StokesTrace s = sim.stokes(0.0, t);
  const BlochTrace b = sim.bloch(0.0, t);
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(std::abs(s.s_DA[i]) < 1e-9);
    CHECK(std::abs(s.s_RL[i]) < 1e-9);
    CHECK(std::abs(b.sy[i]) < 1e-9);
    CHECK(std::abs(b.sz[i]) < 1e-9);
  }
  const ClickConditionedState c = sim.click(0.0);
  CHECK(c.reduced_spin.rho_uu() > 0.9);
  CHECK(c.reduced_spin.coherence() < 1e-9);
}

TEST_CASE("conditioned states relax to the steady state") {
  const Simulation sim(small());
  const SteadySummary ss = sim.steady_summary();
  const std::vector<double> t{0.0, 1e-9, 5e-9, 200e-9};  // coherence decays on the 2 T1 scale
  const BlochTrace b = sim.bloch(kPi / 6.0, t);
  CHECK(std::hypot(b.sy[0], b.sz[0]) > 0.1);
  CHECK(b.sx.back() == doctest::Approx(ss.p_up - ss.p_down).epsilon(1e-6));
  CHECK(std::hypot(b.sy.back(), b.sz.back()) < 1e-6);
  for (double x : t) CHECK(sim.conditioned_state(kPi / 6.0, x).check().ok());
}

TEST_CASE("Overhauser averaging converges in the node count") {
  const std::vector<double> t = grid(3.5e-9, 36);
  const StokesTrace a = Simulation(small(9)).stokes(kPi / 6.0, t);
  const StokesTrace b = Simulation(small(15)).stokes(kPi / 6.0, t);
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(std::abs(a.s_DA[i] - b.s_DA[i]) < 1e-3);
    CHECK(std::abs(a.s_RL[i] - b.s_RL[i]) < 1e-3);
  }
}

TEST_CASE("reruns are bit-identical") {
  const std::vector<double> t = grid(4e-9, 21);
  const StokesTrace a = Simulation(small(3)).stokes(kPi / 6.0, t);
  const StokesTrace b = Simulation(small(3)).stokes(kPi / 6.0, t);
  CHECK(a.s_DA == b.s_DA);
  CHECK(a.s_RL == b.s_RL);
  CHECK(a.s_HV == b.s_HV);
}

TEST_CASE("uncharged dot never converts V to H") {
  SimulationConfig c = small();
  c.device.P_charge = 0.0;
  const std::vector<double> det{-2e10, 0.0, 2e10};
  const ReflectivityScan s = unconditional_reflectivities(c, det);
  for (double v : s.P_VtoH) CHECK(v < 1e-6);
  for (std::size_t i = 0; i < det.size(); ++i) CHECK(s.P_VtoV[i] == doctest::Approx(s.P_cav[i]).epsilon(1e-9));
}

TEST_CASE("radiative lifetime lies in the accepted window") {
  const double t = radiative_lifetime(SimulationConfig{});
  CHECK(t > 330e-12);
  CHECK(t < 610e-12);
}

TEST_CASE("configuration validation") {
  SimulationConfig c = small();
  c.overhauser_nodes = 2;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = small();
  c.fock_cutoff = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = small();
  c.tau_grid.points = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("reflectivity scan shows the dip and Raman peak near omega_1") {
  // ±1 GHz around ω1; the ω4 line sits about 1.6 GHz lower and has its own dip
  const SimulationConfig c = small();
  const double ghz = 2.0 * kPi * 1e9;
  const double w1 = device::level_structure(c.device).omega_1() - c.device.delta_QD;
  std::vector<double> d;
  for (int i = 0; i <= 20; ++i) d.push_back(w1 + ghz * (-1.0 + 0.1 * i));
  const ReflectivityScan s = unconditional_reflectivities(c, d);
  const auto dip = static_cast<std::size_t>(std::min_element(s.P_VtoV.begin(), s.P_VtoV.end()) - s.P_VtoV.begin());
  const auto peak = static_cast<std::size_t>(std::max_element(s.P_VtoH.begin(), s.P_VtoH.end()) - s.P_VtoH.begin());
  CHECK(dip > 0);
  CHECK(dip < d.size() - 1);
  CHECK(peak > 0);
  CHECK(peak < d.size() - 1);
  CHECK(s.P_VtoV[dip] < s.P_cav[dip] - 0.1);
  CHECK(s.P_VtoH[peak] > 2.0 * std::max(s.P_VtoH.front(), s.P_VtoH.back()));
}
