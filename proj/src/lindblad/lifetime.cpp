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

#include <cmath>

#include "spinphoton/device/levels.hpp"
#include "spinphoton/device/reflection.hpp"
#include "spinphoton/errors.hpp"
#include "spinphoton/lindblad/simulation.hpp"
#include "spinphoton/qcore/propagation.hpp"

namespace spinphoton::lindblad {

using qcore::ComplexMatrix;

double radiative_lifetime(const SimulationConfig& cfg) {
  cfg.validate();
  const device::DeviceParams& p = cfg.device;
  const Index f = cfg.fock_cutoff + 1;
  // {↓, T1} ⊗ V mode, frame rotating at ω₁
  const ComplexMatrix a = qcore::kron(qcore::identity(2), qcore::annihilation(f));
  const ComplexMatrix lower = qcore::kron(qcore::ket_bra(2, 0, 1), qcore::identity(f));
  const ComplexMatrix excited = qcore::kron(qcore::ket_bra(2, 1, 1), qcore::identity(f));
  const double w1 = device::level_structure(p).omega_1();
  const ComplexMatrix H = (device::cavity_frequency(p, device::CavityMode::V) - w1) * a.adjoint() * a +
                          p.g * (a.adjoint() * lower + lower.adjoint() * a);
  const qcore::Liouvillian L =
      qcore::build_lindblad(H, {{a, p.kappa_V}, {lower, p.gamma_sp}, {excited, 2.0 * p.gamma_star}});

  qcore::ComplexVector psi = qcore::ComplexVector::Zero(2 * f);
  psi(f) = 1.0;  // |T1, 0⟩
  const qcore::DensityOperator rho0 = qcore::pure_state(psi);
  auto population = [&](const ComplexMatrix& rho) { return (excited * rho).trace().real(); };

  const double target = std::exp(-1.0);
  const double dt = 5e-12;
  ComplexMatrix rho = rho0.matrix();
  double t = 0.0;
  for (int step = 0; step < 20000; ++step) {
    const ComplexMatrix next = qcore::propagate_operator(L, rho, dt);
    if (population(next) <= target) {
      double lo = 0.0;
      double hi = dt;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (population(qcore::propagate_operator(L, rho, mid)) > target) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return t + 0.5 * (lo + hi);
    }
    rho = next;
    t += dt;
  }
  throw ConvergenceError("radiative_lifetime: trion population did not decay to 1/e within 100 ns");
}

}  // namespace spinphoton::lindblad
