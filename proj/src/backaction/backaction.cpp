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

#include "spinphoton/backaction/backaction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinphoton/device/levels.hpp"

namespace spinphoton::backaction {

namespace {

void check_populations(double p_up, double p_down) {
  if (!(p_up >= 0.0 && p_up <= 1.0 && p_down >= 0.0 && p_down <= 1.0)) {
    throw std::invalid_argument("spin populations must lie in [0, 1]");
  }
  if (std::abs(p_up + p_down - 1.0) > 1e-9) throw std::invalid_argument("spin populations must sum to 1");
}

}  // namespace

double envelope_value(Envelope env, double tau, double T) {
  const double x = tau / T;
  return env == Envelope::gaussian ? std::exp(-x * x) : std::exp(-x);
}

void SpinDynamicsParams::validate() const {
  if (!(T1 > 0.0) || !(T2_star > 0.0) || !std::isfinite(T1) || !std::isfinite(T2_star)) {
    throw std::invalid_argument("SpinDynamicsParams: T1 and T2* must be positive");
  }
  if (!std::isfinite(omega_L)) throw std::invalid_argument("SpinDynamicsParams: omega_L must be finite");
  if (stationary.rho_du() != Complex(0.0, 0.0)) {
    throw std::invalid_argument("SpinDynamicsParams: stationary state must be diagonal");
  }
}

SpinDynamicsParams SpinDynamicsParams::from_device(const device::DeviceParams& params, double p_up, double p_down,
                                                   Envelope envelope) {
  check_populations(p_up, p_down);
  SpinDynamicsParams d;
  d.omega_L = device::electron_zeeman(params);
  d.T1 = params.tau_esc;
  d.T2_star = std::numbers::sqrt2 / params.gamma_e;
  d.stationary = SpinState::from_elements(p_up, p_down, 0.0);
  d.envelope = envelope;
  return d;
}

device::PolarizationState measurement_state(double phi) { return device::measurement_polarization(phi); }

double detection_probability(double phi, double p_up, double p_down, const ReflectionSet& r) {
  check_populations(p_up, p_down);
  r.validate();
  const double s2 = std::pow(std::sin(phi / 2.0), 2);
  const double c2 = std::pow(std::cos(phi / 2.0), 2);
  return p_up * std::norm(r.r_uu) * s2 + p_down * (std::norm(r.r_dd) * s2 + std::norm(r.r_du) * c2);
}

SpinState conditional_spin_state(double phi, double p_up, double p_down, const ReflectionSet& r) {
  const double pm = detection_probability(phi, p_up, p_down, r);
  if (!(pm > 0.0)) throw std::domain_error("conditional_spin_state: detection probability is zero");
  const double rho_dd = p_down * std::norm(r.r_dd) * std::pow(std::sin(phi / 2.0), 2) / pm;
  const Complex rho_du = p_down / (2.0 * pm) * r.r_dd * std::conj(r.r_du) * std::sin(phi);
  return SpinState::from_elements(1.0 - rho_dd, rho_dd, rho_du);
}

SpinState evolve_spin(const SpinState& state, double tau, const SpinDynamicsParams& dyn) {
  if (!(tau >= 0.0)) throw std::invalid_argument("evolve_spin: tau must be >= 0");
  if (tau == 0.0) return state;
  dyn.validate();
  const double relax = std::exp(-tau / dyn.T1);
  const double uu = dyn.stationary.rho_uu() + (state.rho_uu() - dyn.stationary.rho_uu()) * relax;
  const double dd = dyn.stationary.rho_dd() + (state.rho_dd() - dyn.stationary.rho_dd()) * relax;
  const Complex du = state.rho_du() * envelope_value(dyn.envelope, tau, dyn.T2_star) *
                     std::exp(Complex(0.0, dyn.omega_L * tau));
  return SpinState::from_elements(uu, dd, du);
}

ConditionalProbabilities conditional_probabilities(const SpinState& state, const ReflectionSet& r) {
  ConditionalProbabilities p;
  p.P_H = std::norm(r.r_du) * state.rho_dd();
  p.P_V = std::norm(r.r_dd) * state.rho_dd() + std::norm(r.r_uu) * state.rho_uu();
  p.P_refl = p.P_H + p.P_V;
  return p;
}

StokesVector conditional_stokes(const SpinState& state, const ReflectionSet& r) {
  const double p_refl = conditional_probabilities(state, r).P_refl;
  if (!(p_refl > 0.0)) throw std::domain_error("conditional_stokes: conditional reflectivity is zero");
  const Complex c = r.r_uu * std::conj(r.r_du) * state.rho_ud();
  StokesVector s;
  s.s_HV = ((std::norm(r.r_du) - std::norm(r.r_dd)) * state.rho_dd() - std::norm(r.r_uu) * state.rho_uu()) / p_refl;
  s.s_DA = 2.0 * c.real() / p_refl;
  s.s_RL = 2.0 * c.imag() / p_refl;
  return s;
}

std::vector<CoherencePoint> coherence_sweep(std::span<const double> phi_grid, double p_up, double p_down,
                                            const ReflectionSet& r, double at_tau, const SpinDynamicsParams& dyn) {
  std::vector<CoherencePoint> out;
  out.reserve(phi_grid.size());
  for (double phi : phi_grid) {
    const SpinState s = evolve_spin(conditional_spin_state(phi, p_up, p_down, r), at_tau, dyn);
    const StokesVector st = conditional_stokes(s, r);
    out.push_back({phi, s.coherence(), std::hypot(st.s_DA, st.s_RL)});
  }
  return out;
}

StokesTrace stokes_trace(double phi, double p_up, double p_down, const ReflectionSet& r,
                         const SpinDynamicsParams& dyn, std::span<const double> tau_grid) {
  const SpinState s0 = conditional_spin_state(phi, p_up, p_down, r);
  StokesTrace t;
  for (double tau : tau_grid) t.push_back(tau, conditional_stokes(evolve_spin(s0, tau, dyn), r));
  t.validate();
  return t;
}

BlochTrace bloch_trace(double phi, double p_up, double p_down, const ReflectionSet& r,
                       const SpinDynamicsParams& dyn, std::span<const double> tau_grid) {
  const SpinState s0 = conditional_spin_state(phi, p_up, p_down, r);
  BlochTrace t;
  for (double tau : tau_grid) {
    const BlochVector b = evolve_spin(s0, tau, dyn).bloch();
    t.tau.push_back(tau);
    t.sx.push_back(b.x);
    t.sy.push_back(b.y);
    t.sz.push_back(b.z);
  }
  t.validate();
  return t;
}

}  // namespace spinphoton::backaction
