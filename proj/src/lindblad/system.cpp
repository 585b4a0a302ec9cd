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

#include "spinphoton/lindblad/system.hpp"

#include <cmath>
#include <sstream>

#include "spinphoton/device/levels.hpp"
#include "spinphoton/device/output_field.hpp"
#include "spinphoton/device/reflection.hpp"
#include "spinphoton/errors.hpp"

namespace spinphoton::lindblad {

using qcore::Complex;
using qcore::kI;

QdCavitySpace::QdCavitySpace(int fock_cutoff) : fock_dim_(fock_cutoff + 1) {
  if (fock_cutoff < 1) throw std::invalid_argument("fock_cutoff must be >= 1");
  const ComplexMatrix id_dot = qcore::identity(4);
  const ComplexMatrix id_f = qcore::identity(fock_dim_);
  const ComplexMatrix a = qcore::annihilation(fock_dim_);
  a_H_ = qcore::kron({id_dot, a, id_f});
  a_V_ = qcore::kron({id_dot, id_f, a});
}

ComplexMatrix QdCavitySpace::dot(Index i, Index j) const {
  const ComplexMatrix id_f = qcore::identity(fock_dim_ * fock_dim_);
  return qcore::kron(qcore::ket_bra(4, i, j), id_f);
}

std::vector<qcore::SubsystemLabel> QdCavitySpace::labels() const {
  return {{"dot", 4}, {"mode_H", fock_dim_}, {"mode_V", fock_dim_}};
}

double QdCavitySpace::top_fock_population(const ComplexMatrix& rho) const {
  const Index f = fock_dim_;
  double top_H = 0.0;
  double top_V = 0.0;
  for (Index d = 0; d < 4; ++d) {
    for (Index h = 0; h < f; ++h) {
      for (Index v = 0; v < f; ++v) {
        const Index idx = d * f * f + h * f + v;
        const double p = rho(idx, idx).real();
        if (h == f - 1) top_H += p;
        if (v == f - 1) top_V += p;
      }
    }
  }
  return std::max(top_H, top_V);
}

Complex QdCavitySpace::dot_element(const ComplexMatrix& x, Index i, Index j) const {
  const Index m = fock_dim_ * fock_dim_;
  Complex s = 0.0;
  for (Index k = 0; k < m; ++k) s += x(i * m + k, j * m + k);
  return s;
}

SystemModel build_system_model(const SimulationConfig& cfg, double overhauser_offset, double omega_laser) {
  cfg.validate();
  const device::DeviceParams& p = cfg.device;
  SystemModel m{QdCavitySpace(cfg.fock_cutoff), {}, {}, omega_laser, std::sqrt(p.drive_photon_rate)};
  const QdCavitySpace& s = m.space;
  const device::LevelStructure lv = device::level_structure(p, overhauser_offset);
  const ComplexMatrix& aH = s.a_H();
  const ComplexMatrix& aV = s.a_V();

  const double wH = device::cavity_frequency(p, device::CavityMode::H) - omega_laser;
  const double wV = device::cavity_frequency(p, device::CavityMode::V) - omega_laser;
  ComplexMatrix H = wH * aH.adjoint() * aH + wV * aV.adjoint() * aV;
  H += lv.energy_up * s.dot(kUp, kUp) + lv.energy_down * s.dot(kDown, kDown);
  H += (lv.energy_trion_1 - omega_laser) * s.dot(kTrion1, kTrion1);
  H += (lv.energy_trion_2 - omega_laser) * s.dot(kTrion2, kTrion2);

  // selection rules: V couples ↓–T1 and ↑–T2, H couples ↑–T1 and ↓–T2
  const ComplexMatrix lower_V = s.dot(kDown, kTrion1) + s.dot(kUp, kTrion2);
  const ComplexMatrix lower_H = s.dot(kUp, kTrion1) + s.dot(kDown, kTrion2);
  const ComplexMatrix coupling = aV.adjoint() * lower_V + aH.adjoint() * lower_H;
  H += p.g * (coupling + coupling.adjoint());

  const double beta = m.input_amplitude;
  H += kI * std::sqrt(p.eta_top_V * p.kappa_V) * beta * (aV.adjoint() - aV);
  m.hamiltonian = 0.5 * (H + H.adjoint());

  const double sp = cfg.gamma_sp_per_transition ? p.gamma_sp : 0.5 * p.gamma_sp;
  m.jumps = {
      {aH, p.kappa_H},
      {aV, p.kappa_V},
      {s.dot(kDown, kTrion1), sp},
      {s.dot(kUp, kTrion1), sp},
      {s.dot(kDown, kTrion2), sp},
      {s.dot(kUp, kTrion2), sp},
      {s.dot(kTrion1, kTrion1), 2.0 * p.gamma_star},
      {s.dot(kTrion2, kTrion2), 2.0 * p.gamma_star},
      {s.dot(kUp, kDown), 0.5 / p.tau_esc},
      {s.dot(kDown, kUp), 0.5 / p.tau_esc},
  };
  return m;
}

qcore::Liouvillian build_system(const SimulationConfig& cfg, double overhauser_offset) {
  const SystemModel m = build_system_model(cfg, overhauser_offset, cfg.laser_frequency());
  return qcore::build_lindblad(m.hamiltonian, m.jumps);
}

NodeModel::NodeModel(const SimulationConfig& cfg, double overhauser_offset)
    : NodeModel(cfg, overhauser_offset, cfg.laser_frequency()) {}

NodeModel::NodeModel(const SimulationConfig& cfg, double overhauser_offset, double omega_laser)
    : model_(build_system_model(cfg, overhauser_offset, omega_laser)),
      offset_(overhauser_offset),
      params_(cfg.device),
      liouvillian_(qcore::build_lindblad(model_.hamiltonian, model_.jumps)),
      steady_(qcore::steady_state(liouvillian_, model_.space.labels())) {
  const double top = model_.space.top_fock_population(steady_.matrix());
  if (!(top < 1e-4)) {
    std::ostringstream os;
    os << "Fock cutoff " << cfg.fock_cutoff << " too small: highest level holds population " << top;
    throw CutoffError(os.str());
  }
}

ComplexMatrix NodeModel::output_operator(const device::PolarizationState& pol) const {
  return device::output_field_operator(params_, pol, model_.space.a_H(), model_.space.a_V(), model_.input_amplitude);
}

double NodeModel::intensity(const device::PolarizationState& pol) const {
  const ComplexMatrix b = output_operator(pol);
  return steady_.expectation(b.adjoint() * b).real();
}

GroundBlock ground_block(const QdCavitySpace& space, const ComplexMatrix& x) {
  GroundBlock g;
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 2; ++j) g.block(i, j) = space.dot_element(x, i, j);
  }
  g.trion_weight = (space.dot_element(x, kTrion1, kTrion1) + space.dot_element(x, kTrion2, kTrion2)).real();
  return g;
}

}  // namespace spinphoton::lindblad
