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

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>

#include "spinphoton/backaction/backaction.hpp"
#include "spinphoton/device/polarization.hpp"

using namespace spinphoton;
using namespace spinphoton::backaction;
using Complex = std::complex<double>;
using device::ReflectionSet;

namespace {

constexpr double kPi = std::numbers::pi;

// Spin ⊗ polarization, index 2·spin + pol with spin ↑=0, ↓=1 and pol H=0, V=1.
// U|↑⟩ = r↑↑|↑,V⟩, U|↓⟩ = r↓↓|↓,V⟩ + r↓↑|↑,H⟩
Eigen::Matrix<Complex, 4, 2> scattering(const ReflectionSet& r) {
  Eigen::Matrix<Complex, 4, 2> u = Eigen::Matrix<Complex, 4, 2>::Zero();
  u(1, 0) = r.r_uu;
  u(3, 1) = r.r_dd;
  u(0, 1) = r.r_du;
  return u;
}

// Spin state after projecting the scattered photon onto M(φ).
Eigen::Matrix2cd project(double phi, const Eigen::Matrix2cd& spin, const ReflectionSet& r) {
  const Eigen::Matrix<Complex, 4, 2> u = scattering(r);
  const Eigen::Matrix4cd joint = u * spin * u.adjoint();
  const Eigen::Vector2cd m(std::cos(phi / 2.0), std::sin(phi / 2.0));
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) out(a, b) += std::conj(m(p)) * joint(2 * a + p, 2 * b + q) * m(q);
      }
    }
  }
  return out;
}

// Polarization density of a photon scattered off `spin`, spin traced out.
Eigen::Matrix2cd photon(const Eigen::Matrix2cd& spin, const ReflectionSet& r) {
  const Eigen::Matrix<Complex, 4, 2> u = scattering(r);
  const Eigen::Matrix4cd joint = u * spin * u.adjoint();
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (int s = 0; s < 2; ++s) out += joint.block(2 * s, 2 * s, 2, 2);
  return out;
}

double basis_probability(const Eigen::Matrix2cd& rho, device::Basis b) {
  const device::PolarizationState t = device::basis_state(b);
  const Eigen::Vector2cd v(t.c_H, t.c_V);
  return (v.adjoint() * rho * v)(0, 0).real();
}

const ReflectionSet kR{std::polar(0.83, 0.0), std::polar(0.64, 0.26), std::polar(0.26, -1.84)};

}  // namespace

TEST_CASE("conditional spin state equals the projected scattering state") {
  Eigen::Matrix2cd spin = Eigen::Matrix2cd::Zero();
  spin(0, 0) = 0.51;
  spin(1, 1) = 0.49;
  for (double phi : {0.0, kPi / 6.0, kPi / 3.0, kPi / 2.0, 2.0, kPi}) {
    const Eigen::Matrix2cd ref = project(phi, spin, kR);
    const double pm = ref.trace().real();
    CHECK(detection_probability(phi, 0.51, 0.49, kR) == doctest::Approx(pm).epsilon(1e-14));
    const SpinState s = conditional_spin_state(phi, 0.51, 0.49, kR);
    CHECK((s.matrix() - ref / pm).norm() < 1e-14);
  }
}

TEST_CASE("H and V detections act only on populations") {
  const SpinState h = conditional_spin_state(0.0, 0.51, 0.49, kR);
  CHECK(h.rho_uu() == doctest::Approx(1.0));
  CHECK(h.coherence() == 0.0);
  const SpinState v = conditional_spin_state(kPi, 0.51, 0.49, kR);
  const double expected = 0.49 * std::norm(kR.r_dd) / (0.51 * std::norm(kR.r_uu) + 0.49 * std::norm(kR.r_dd));
  CHECK(v.rho_dd() == doctest::Approx(expected));
  CHECK(v.coherence() < 1e-15);
}

TEST_CASE("zero detection probability is a domain error") {
  const ReflectionSet dark{0.0, 0.0, 0.0};
  CHECK_THROWS_AS(conditional_spin_state(kPi / 6.0, 0.5, 0.5, dark), std::domain_error);
  CHECK_THROWS_AS(conditional_spin_state(kPi / 6.0, 0.7, 0.5, kR), std::invalid_argument);
}

TEST_CASE("conditional Stokes parameters equal the scattered photon polarization") {
  const SpinState s = SpinState::from_elements(0.7, 0.3, Complex(0.12, -0.31));
  const Eigen::Matrix2cd rho = photon(s.matrix(), kR);
  const StokesVector st = conditional_stokes(s, kR);
  auto stokes = [&](device::Basis t) {
    const double a = basis_probability(rho, t);
    const double b = basis_probability(rho, device::partner(t));
    return (a - b) / (a + b);
  };
  CHECK(st.s_HV == doctest::Approx(stokes(device::Basis::H)).epsilon(1e-13));
  CHECK(st.s_DA == doctest::Approx(stokes(device::Basis::D)).epsilon(1e-13));
  CHECK(st.s_RL == doctest::Approx(stokes(device::Basis::R)).epsilon(1e-13));
  const ConditionalProbabilities p = conditional_probabilities(s, kR);
  CHECK(p.P_refl == doctest::Approx(rho.trace().real()));
  CHECK(p.P_H == doctest::Approx(basis_probability(rho, device::Basis::H)));
}

TEST_CASE("free evolution: relaxation, dephasing and precession") {
  SpinDynamicsParams d;
  d.omega_L = 2.0 * kPi / 745e-12;
  d.T1 = 4.1e-9;
  d.T2_star = 1.9e-9;
  d.stationary = SpinState::from_elements(0.51, 0.49, 0.0);
  const SpinState s0 = SpinState::from_elements(0.9, 0.1, Complex(0.2, 0.1));
  const double t = 1.3e-9;
  const SpinState s = evolve_spin(s0, t, d);
  CHECK(s.rho_uu() == doctest::Approx(0.51 + 0.39 * std::exp(-t / d.T1)));
  CHECK(std::abs(s.rho_du()) == doctest::Approx(std::abs(s0.rho_du()) * std::exp(-std::pow(t / d.T2_star, 2))));
  CHECK(std::arg(s.rho_du() / s0.rho_du()) == doctest::Approx(std::remainder(d.omega_L * t, 2.0 * kPi)));
  const SpinState late = evolve_spin(s0, 200e-9, d);
  CHECK(late.rho_uu() == doctest::Approx(0.51));
  CHECK(late.coherence() < 1e-12);
  CHECK_THROWS_AS(evolve_spin(s0, -1e-9, d), std::invalid_argument);
  d.T1 = 0.0;
  CHECK_THROWS_AS(evolve_spin(s0, 1e-9, d), std::invalid_argument);
}

TEST_CASE("coherence sweep") {
  const SpinDynamicsParams d = SpinDynamicsParams::from_device(device::DeviceParams{}, 0.51, 0.49);
  std::vector<double> phi;
  for (int k = 0; k <= 12; ++k) phi.push_back(kPi * k / 12.0);
  const auto pts = coherence_sweep(phi, 0.51, 0.49, kR, 0.0, d);
  CHECK(pts.front().C_B == 0.0);
  CHECK(pts.back().C_B < 1e-12);
  CHECK(pts.back().C_S < 1e-12);
  for (const auto& p : pts) {
    // C_S = 2|ρ↓↑ r↑↑* r↓↑| / P_refl
    const SpinState s = conditional_spin_state(p.phi, 0.51, 0.49, kR);
    const double ref = 2.0 * std::abs(s.rho_du() * std::conj(kR.r_uu) * kR.r_du) /
                       conditional_probabilities(s, kR).P_refl;
    CHECK(p.C_S == doctest::Approx(ref).epsilon(1e-12));
    CHECK(p.C_B == doctest::Approx(2.0 * std::abs(s.rho_du())));
  }
}

TEST_CASE("Bloch and Stokes traces") {
  const SpinDynamicsParams d = SpinDynamicsParams::from_device(device::DeviceParams{}, 0.51, 0.49);
  std::vector<double> tau;
  for (int i = 0; i <= 200; ++i) tau.push_back(1e-10 * i);
  const BlochTrace b0 = bloch_trace(0.0, 0.51, 0.49, kR, d, tau);
  for (std::size_t i = 0; i < tau.size(); ++i) {
    CHECK(b0.sy[i] == 0.0);
    CHECK(b0.sz[i] == 0.0);
  }
  const StokesTrace s = stokes_trace(kPi / 6.0, 0.51, 0.49, kR, d, tau);
  CHECK(s.tau.size() == tau.size());
  CHECK(std::abs(s.s_DA.front()) > 0.01);
  const std::vector<double> bad{1e-9, 0.0};
  CHECK_THROWS(stokes_trace(kPi / 6.0, 0.51, 0.49, kR, d, bad));
}
