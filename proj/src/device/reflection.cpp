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

#include "spinphoton/device/reflection.hpp"

#include <cmath>
#include <stdexcept>

#include "spinphoton/device/levels.hpp"

namespace spinphoton::device {

using qcore::Complex;
using qcore::kI;

void ReflectionSet::validate() const {
  constexpr double tol = 1e-12;
  if (std::abs(r_uu) > 1.0 + tol || std::abs(r_dd) > 1.0 + tol || std::abs(r_du) > 1.0 + tol) {
    throw std::invalid_argument("ReflectionSet: amplitude modulus exceeds 1");
  }
  if (std::norm(r_dd) + std::norm(r_du) > 1.0 + tol) {
    throw std::invalid_argument("ReflectionSet: |r_dd|^2 + |r_du|^2 exceeds 1");
  }
}

ReflectionSet ReflectionSet::real_positive(double R_uu, double R_dd, double R_du) {
  if (R_uu < 0.0 || R_dd < 0.0 || R_du < 0.0) throw std::invalid_argument("ReflectionSet: negative reflectivity");
  ReflectionSet r{std::sqrt(R_uu), std::sqrt(R_dd), std::sqrt(R_du)};
  r.validate();
  return r;
}

double cavity_frequency(const DeviceParams& p, CavityMode mode) {
  return mode == CavityMode::H ? 0.5 * p.delta_c : -0.5 * p.delta_c;
}

Complex empty_cavity_reflection(const DeviceParams& p, CavityMode mode, double omega_laser) {
  const double kappa = mode == CavityMode::H ? p.kappa_H : p.kappa_V;
  const double eta = mode == CavityMode::H ? p.eta_top_H : p.eta_top_V;
  return 1.0 - eta * kappa / (kI * (cavity_frequency(p, mode) - omega_laser) + 0.5 * kappa);
}

Complex coupled_reflection_estimate(const DeviceParams& p, double omega_laser) {
  const LevelStructure s = level_structure(p);
  const double gamma_tot = p.gamma_sp + 2.0 * p.gamma_star;
  const Complex dipole = p.g * p.g / (kI * (s.omega_1() - omega_laser) + 0.5 * gamma_tot);
  return 1.0 - p.eta_top_V * p.kappa_V /
                   (kI * (cavity_frequency(p, CavityMode::V) - omega_laser) + 0.5 * p.kappa_V + dipole);
}

}  // namespace spinphoton::device
