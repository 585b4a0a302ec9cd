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
#include <sstream>

#include "spinphoton/device/reflection.hpp"
#include "spinphoton/errors.hpp"
#include "spinphoton/lindblad/overhauser.hpp"
#include "spinphoton/lindblad/simulation.hpp"

namespace spinphoton::lindblad {

using qcore::Complex;

namespace {

const device::PolarizationState kH = device::basis_state(device::Basis::H);
const device::PolarizationState kV = device::basis_state(device::Basis::V);

}  // namespace

ReflectivityScan unconditional_reflectivities(const SimulationConfig& cfg, std::span<const double> detuning_grid) {
  cfg.validate();
  const double pc = cfg.device.P_charge;
  const double beta2 = cfg.device.drive_photon_rate;
  if (!(beta2 > 0.0)) throw std::invalid_argument("unconditional_reflectivities: drive must be nonzero");
  const std::vector<QuadratureNode> q = overhauser_quadrature(cfg.device.gamma_e, cfg.overhauser_nodes);
  ReflectivityScan out;
  for (double d : detuning_grid) {
    if (!std::isfinite(d)) throw std::invalid_argument("unconditional_reflectivities: non-finite detuning");
    const double wl = cfg.device.delta_QD + d;
    const double cav = std::norm(device::empty_cavity_reflection(cfg.device, device::CavityMode::V, wl));
    double vv = 0.0;
    double vh = 0.0;
    if (pc > 0.0) {
      for (const QuadratureNode& n : q) {
        const NodeModel m(cfg, n.offset, wl);
        vv += n.weight * m.intensity(kV) / beta2;
        vh += n.weight * m.intensity(kH) / beta2;
      }
    }
    out.detuning.push_back(d);
    out.P_VtoV.push_back(pc * vv + (1.0 - pc) * cav);
    out.P_VtoH.push_back(pc * vh);
    out.P_cav.push_back(cav);
  }
  return out;
}

ReflectionExtraction extract_reflection_data(const SimulationConfig& cfg) {
  cfg.validate();
  const double beta2 = cfg.device.drive_photon_rate;
  if (!(beta2 > 0.0)) throw std::invalid_argument("extract_reflection_set: drive must be nonzero");
  const double beta = std::sqrt(beta2);
  double vv = 0.0;
  double vh = 0.0;
  double up = 0.0;
  double down = 0.0;
  Complex field_down = 0.0;  // Σ Tr[Π↓ b_V ρ]
  Complex cross = 0.0;       // Σ ⟨↓|Tr_modes(b_V ρ b_H†)|↑⟩
  for (const QuadratureNode& n : overhauser_quadrature(cfg.device.gamma_e, cfg.overhauser_nodes)) {
    const NodeModel m(cfg, n.offset);
    const QdCavitySpace& s = m.space();
    const qcore::ComplexMatrix& rho = m.steady_state().matrix();
    const qcore::ComplexMatrix bV = m.output_operator(kV);
    const qcore::ComplexMatrix bH = m.output_operator(kH);
    vv += n.weight * m.intensity(kV) / beta2;
    vh += n.weight * m.intensity(kH) / beta2;
    const GroundBlock g = ground_block(s, rho);
    const double tr = (g.block(0, 0) + g.block(1, 1)).real();
    up += n.weight * g.block(0, 0).real() / tr;
    down += n.weight * g.block(1, 1).real() / tr;
    field_down += n.weight * s.dot_element(bV * rho, kDown, kDown);
    cross += n.weight * s.dot_element(bV * rho * bH.adjoint(), kDown, kUp);
  }
  ReflectionExtraction out;
  out.p_up = up / (up + down);
  out.p_down = down / (up + down);
  out.P_VtoV = vv;
  out.P_VtoH = vh;
  const Complex r_uu = device::empty_cavity_reflection(cfg.device, device::CavityMode::V, cfg.laser_frequency());
  const double R_du = vh / out.p_down;
  const double R_dd = (vv - out.p_up * std::norm(r_uu)) / out.p_down;
  if (R_dd < 0.0) {
    std::ostringstream os;
    os << "extract_reflection_set: inferred |r_dd|^2 = " << R_dd << " is negative (inconsistent parameters)";
    throw NumericalError(os.str());
  }
  const double arg_dd = std::abs(field_down) > 0.0 ? std::arg(field_down / beta) : 0.0;
  const Complex r_dd = std::polar(std::sqrt(R_dd), arg_dd);
  // arg(r_dd r_du*) from the spin-resolved V–H field cross-correlation
  const Complex r_du = std::abs(cross) > 0.0 ? std::polar(std::sqrt(R_du), arg_dd - std::arg(cross))
                                             : Complex(std::sqrt(R_du), 0.0);
  out.r = {r_uu, r_dd, r_du};
  out.r.validate();
  return out;
}

device::ReflectionSet extract_reflection_set(const SimulationConfig& cfg) { return extract_reflection_data(cfg).r; }

}  // namespace spinphoton::lindblad
