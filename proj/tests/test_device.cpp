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
#include <complex>

#include "spinphoton/device/levels.hpp"
#include "spinphoton/device/output_field.hpp"
#include "spinphoton/device/params.hpp"
#include "spinphoton/device/polarization.hpp"
#include "spinphoton/device/reflection.hpp"
#include "spinphoton/device/units.hpp"
#include "spinphoton/qcore/liouvillian.hpp"
#include "spinphoton/qcore/matrix.hpp"

using namespace spinphoton;
using namespace spinphoton::device;
using qcore::Complex;

TEST_CASE("unit conversions") {
  CHECK(units::ghz_to_angular(1.0) == doctest::Approx(2.0 * units::kPi * 1e9));
  CHECK(units::angular_to_ghz(units::ghz_to_angular(3.7)) == doctest::Approx(3.7));
  CHECK(units::rad_to_deg(units::deg_to_rad(30.0)) == doctest::Approx(30.0));
}

TEST_CASE("Larmor period of the default device") {
  // h / (g_e μ_B B) with CODATA constants
  const double expected = 6.62607015e-34 / (0.48 * 9.2740100783e-24 * 0.2);
  const LevelStructure s = level_structure(DeviceParams{});
  CHECK(s.larmor_period() == doctest::Approx(expected).epsilon(1e-9));
  CHECK(s.larmor_period() == doctest::Approx(745e-12).epsilon(0.02));
  CHECK(s.omega_1() - s.omega_2() == doctest::Approx(s.electron_zeeman));
  CHECK(s.omega_1() - s.omega_3() == doctest::Approx(s.hole_zeeman));
}

TEST_CASE("default parameters validate and bad ones name the field") {
  CHECK_NOTHROW(DeviceParams{}.validate());
  DeviceParams p;
  p.eta_top_V = 1.5;
  try {
    p.validate();
    FAIL("no exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("eta_top_V") != std::string::npos);
  }
}

TEST_CASE("empty-cavity reflection matches a time-domain driven cavity") {
  // dα/dt = −(i(ω_c − ω) + κ/2) α + √(ηκ) β, r = 1 − √(ηκ) α/β, in units of κ
  const DeviceParams p;
  const double kappa = p.kappa_V;
  const double eta = p.eta_top_V;
  for (double det_ghz : {-60.0, -25.0, 0.0, 17.0}) {
    const double w = cavity_frequency(p, CavityMode::V) + units::ghz_to_angular(det_ghz);
    const Complex a_rate = -(Complex(0.0, (cavity_frequency(p, CavityMode::V) - w) / kappa) + 0.5);
    const double drive = std::sqrt(eta);
    Complex alpha = 0.0;
    const double dt = 1e-3;
    auto f = [&](Complex a) { return a_rate * a + drive; };
    for (int i = 0; i < 60000; ++i) {  // transient e^{-30}
      const Complex k1 = f(alpha);
      const Complex k2 = f(alpha + 0.5 * dt * k1);
      const Complex k3 = f(alpha + 0.5 * dt * k2);
      const Complex k4 = f(alpha + dt * k3);
      alpha += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    const Complex r_td = 1.0 - std::sqrt(eta) * alpha;
    CHECK(std::abs(empty_cavity_reflection(p, CavityMode::V, w) - r_td) < 1e-9);
  }
}

TEST_CASE("coherent output of a driven empty cavity") {
  // Lindblad single mode in units of κ; ⟨b†b⟩ must equal |r|² β² for a coherent state
  DeviceParams p;
  p.kappa_V = 1.0;
  p.delta_c = 0.6;  // ω_V = −0.3
  const double w = 0.2;
  const double beta = 0.05;
  const int n = 6;
  const qcore::ComplexMatrix a = qcore::annihilation(n);
  const double s = std::sqrt(p.eta_top_V * p.kappa_V);
  const qcore::ComplexMatrix h = (cavity_frequency(p, CavityMode::V) - w) * a.adjoint() * a +
                                 qcore::kI * s * beta * (a.adjoint() - a);
  const qcore::Liouvillian L = qcore::build_lindblad(h, {{a, p.kappa_V}});
  const qcore::DensityOperator rho = qcore::steady_state(L);
  const qcore::ComplexMatrix zero = qcore::ComplexMatrix::Zero(n, n);
  const qcore::ComplexMatrix b = output_field_operator(p, basis_state(Basis::V), zero, a, beta);
  const double flux = rho.expectation(b.adjoint() * b).real();
  CHECK(flux == doctest::Approx(std::norm(empty_cavity_reflection(p, CavityMode::V, w)) * beta * beta).epsilon(1e-8));
}

TEST_CASE("polarization bases") {
  for (Basis b : kAllBases) {
    const PolarizationState x = basis_state(b);
    const PolarizationState y = basis_state(partner(b));
    CHECK(std::norm(x.c_H) + std::norm(x.c_V) == doctest::Approx(1.0));
    CHECK(std::abs(std::conj(x.c_H) * y.c_H + std::conj(x.c_V) * y.c_V) < 1e-15);
    CHECK(parse_basis(basis_name(b)) == b);
  }
  const PolarizationState h = measurement_polarization(0.0);
  const PolarizationState v = measurement_polarization(units::kPi);
  CHECK(std::abs(h.c_H - 1.0) < 1e-15);
  CHECK(std::abs(v.c_V - 1.0) < 1e-15);
  CHECK_THROWS(parse_basis("X"));
}

TEST_CASE("reflection sets") {
  const ReflectionSet r = ReflectionSet::real_positive(0.69, 0.37, 0.06);
  CHECK(std::norm(r.r_uu) == doctest::Approx(0.69));
  CHECK_THROWS_AS(ReflectionSet::real_positive(0.69, 0.8, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(ReflectionSet::real_positive(-0.1, 0.3, 0.3), std::invalid_argument);
}
