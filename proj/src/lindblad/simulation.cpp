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

#include "spinphoton/lindblad/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spinphoton/device/reflection.hpp"
#include "spinphoton/errors.hpp"
#include "spinphoton/lindblad/overhauser.hpp"
#include "spinphoton/qcore/spectral.hpp"

namespace spinphoton::lindblad {

using device::PolarizationState;
using qcore::Complex;
using qcore::ComplexVector;

struct Simulation::Node {
  double weight;
  NodeModel model;
  qcore::SpectralPropagator spectral;

  Node(const SimulationConfig& cfg, const QuadratureNode& q)
      : weight(q.weight), model(cfg, q.offset), spectral(model.liouvillian()) {}
};

namespace {

backaction::SpinState spin_from_block(const Eigen::Matrix2cd& block) {
  const double tr = (block(0, 0) + block(1, 1)).real();
  if (!(tr > 0.0)) throw NumericalError("conditioned state has no weight in the ground manifold");
  return backaction::SpinState::from_elements(block(0, 0).real() / tr, block(1, 1).real() / tr, block(1, 0) / tr);
}

std::vector<NodeModel> steady_nodes(const SimulationConfig& cfg, std::vector<double>& weights) {
  std::vector<NodeModel> out;
  weights.clear();
  for (const QuadratureNode& q : overhauser_quadrature(cfg.device.gamma_e, cfg.overhauser_nodes)) {
    out.emplace_back(cfg, q.offset);
    weights.push_back(q.weight);
  }
  return out;
}

ClickConditionedState condition_on_click(const std::vector<const NodeModel*>& nodes,
                                         const std::vector<double>& weights, double phi) {
  const PolarizationState m = device::measurement_polarization(phi);
  const QdCavitySpace& space = nodes.front()->space();
  ComplexMatrix joint = ComplexMatrix::Zero(space.dim(), space.dim());
  double beta2 = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const ComplexMatrix b = nodes[i]->output_operator(m);
    joint += weights[i] * (b * nodes[i]->steady_state().matrix() * b.adjoint());
    beta2 = std::pow(nodes[i]->input_amplitude(), 2);
  }
  const double tr = joint.trace().real();
  if (!(tr > 0.0) || !(beta2 > 0.0)) throw std::domain_error("click_condition: zero click probability");
  joint /= tr;
  joint = 0.5 * (joint + joint.adjoint());
  const GroundBlock g = ground_block(space, joint);
  ClickConditionedState out{qcore::DensityOperator(joint, space.labels()), spin_from_block(g.block), tr / beta2,
                            g.trion_weight};
  return out;
}

SteadySummary summarize(const std::vector<const NodeModel*>& nodes, const std::vector<double>& weights) {
  Eigen::Matrix2cd block = Eigen::Matrix2cd::Zero();
  double trion = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const GroundBlock g = ground_block(nodes[i]->space(), nodes[i]->steady_state().matrix());
    block += weights[i] * g.block;
    trion += weights[i] * g.trion_weight;
  }
  const double tr = (block(0, 0) + block(1, 1)).real();
  return {block(0, 0).real() / tr, block(1, 1).real() / tr, trion};
}

}  // namespace

Simulation::Simulation(SimulationConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  for (const QuadratureNode& q : overhauser_quadrature(cfg_.device.gamma_e, cfg_.overhauser_nodes)) {
    nodes_.push_back(std::make_unique<Node>(cfg_, q));
  }
}

Simulation::~Simulation() = default;
Simulation::Simulation(Simulation&&) noexcept = default;
Simulation& Simulation::operator=(Simulation&&) noexcept = default;

std::size_t Simulation::node_count() const { return nodes_.size(); }

SteadySummary Simulation::steady_summary() const {
  std::vector<const NodeModel*> models;
  std::vector<double> weights;
  for (const auto& n : nodes_) {
    models.push_back(&n->model);
    weights.push_back(n->weight);
  }
  return summarize(models, weights);
}

ClickConditionedState Simulation::click(double phi) const {
  std::vector<const NodeModel*> models;
  std::vector<double> weights;
  for (const auto& n : nodes_) {
    models.push_back(&n->model);
    weights.push_back(n->weight);
  }
  return condition_on_click(models, weights, phi);
}

qcore::DensityOperator Simulation::conditioned_state(double phi, double tau) const {
  if (!(tau >= 0.0)) throw std::invalid_argument("conditioned_state: tau must be >= 0");
  const PolarizationState m = device::measurement_polarization(phi);
  const QdCavitySpace& space = nodes_.front()->model.space();
  ComplexMatrix acc = ComplexMatrix::Zero(space.dim(), space.dim());
  for (const auto& n : nodes_) {
    const ComplexMatrix b = n->model.output_operator(m);
    const ComplexMatrix x = b * n->model.steady_state().matrix() * b.adjoint();
    acc += n->weight * n->spectral.evolve(n->spectral.modal_coefficients(x), tau);
  }
  const Complex tr = acc.trace();
  if (!(tr.real() > 0.0)) throw std::domain_error("conditioned_state: zero click probability");
  acc /= tr;
  return qcore::DensityOperator(acc, space.labels());
}

double Simulation::empty_intensity(const PolarizationState& pol) const {
  // an empty dot reflects the V drive with the bare cavity amplitude; the H mode stays empty
  const Complex r = device::empty_cavity_reflection(cfg_.device, device::CavityMode::V, cfg_.laser_frequency());
  return std::norm(std::conj(pol.c_V) * r) * cfg_.device.drive_photon_rate;
}

Simulation::PairCorrelation Simulation::correlation(const PolarizationState& first, const PolarizationState& second,
                                                    std::span<const double> tau_grid) const {
  std::vector<double> G(tau_grid.size(), 0.0);
  std::vector<double> G_imag(tau_grid.size(), 0.0);
  double I1 = 0.0;
  double I2 = 0.0;
  for (const auto& n : nodes_) {
    const ComplexMatrix b1 = n->model.output_operator(first);
    const ComplexMatrix b2 = n->model.output_operator(second);
    const ComplexMatrix& rho = n->model.steady_state().matrix();
    const ComplexVector c = n->spectral.modal_coefficients(b1 * rho * b1.adjoint());
    const ComplexVector w = n->spectral.observable_weights(b2.adjoint() * b2);
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
      const Complex v = n->spectral.expectation(w, c, tau_grid[i]);
      G[i] += n->weight * v.real();
      G_imag[i] += n->weight * v.imag();
    }
    I1 += n->weight * (b1.adjoint() * b1 * rho).trace().real();
    I2 += n->weight * (b2.adjoint() * b2 * rho).trace().real();
  }
  const double scale = std::max(I1 * I2, 1e-300);
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (std::abs(G_imag[i]) > 1e-8 * scale) throw NumericalError("two-photon correlation has an imaginary part");
    if (G[i] < -1e-9 * scale) throw NumericalError("two-photon correlation is negative");
  }
  if (cfg_.g2_normalization == G2Normalization::charged_only) return {std::move(G), I1, I2};

  const double pc = cfg_.device.P_charge;
  const double e1 = empty_intensity(first);
  const double e2 = empty_intensity(second);
  // charge occupation is drawn independently at each detection
  for (double& g : G) g = pc * (pc * g + (1.0 - pc) * I1 * e2) + (1.0 - pc) * e1 * (pc * I2 + (1.0 - pc) * e2);
  return {std::move(G), pc * I1 + (1.0 - pc) * e1, pc * I2 + (1.0 - pc) * e2};
}

qcore::CorrelationTrace Simulation::g2(const PolarizationState& first, const PolarizationState& second,
                                       std::span<const double> tau_grid) const {
  std::vector<double> tau(tau_grid.begin(), tau_grid.end());
  require_increasing_grid(tau, "g2");
  std::vector<double> pos;
  std::vector<double> neg;
  for (double t : tau) (t < 0.0 ? neg : pos).push_back(std::abs(t));
  std::vector<double> values;
  values.reserve(tau.size());
  if (!neg.empty()) {
    const PairCorrelation pc = correlation(second, first, neg);
    const double norm = pc.I_first * pc.I_second;
    if (!(norm > 0.0)) throw std::domain_error("g2: zero single-photon intensity");
    for (double g : pc.G) values.push_back(g / norm);
  }
  if (!pos.empty()) {
    const PairCorrelation pc = correlation(first, second, pos);
    const double norm = pc.I_first * pc.I_second;
    if (!(norm > 0.0)) throw std::domain_error("g2: zero single-photon intensity");
    for (double g : pc.G) values.push_back(g / norm);
  }
  for (double& v : values) v = std::max(v, 0.0);
  return qcore::CorrelationTrace(std::move(tau), std::move(values));
}

qcore::CorrelationTrace Simulation::g2(double phi_first, device::Basis second, std::span<const double> tau_grid) const {
  return g2(device::measurement_polarization(phi_first), device::basis_state(second), tau_grid);
}

StokesTrace Simulation::stokes(double phi, std::span<const double> tau_grid) const {
  const PolarizationState m = device::measurement_polarization(phi);
  std::vector<double> tau(tau_grid.begin(), tau_grid.end());
  require_increasing_grid(tau, "stokes");
  if (!tau.empty() && tau.front() < 0.0) throw std::invalid_argument("stokes: delays must be >= 0");
  auto component = [&](device::Basis t) {
    const PairCorrelation a = correlation(m, device::basis_state(t), tau);
    const PairCorrelation b = correlation(m, device::basis_state(device::partner(t)), tau);
    std::vector<double> s(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i) {
      const double sum = a.G[i] + b.G[i];
      if (!(sum > 0.0)) throw std::domain_error("stokes: zero conditional reflectivity");
      s[i] = (a.G[i] - b.G[i]) / sum;
    }
    return s;
  };
  StokesTrace out;
  out.tau = tau;
  out.s_HV = component(device::Basis::H);
  out.s_DA = component(device::Basis::D);
  out.s_RL = component(device::Basis::R);
  out.validate();
  return out;
}

BlochTrace Simulation::bloch(double phi, std::span<const double> tau_grid) const {
  const PolarizationState m = device::measurement_polarization(phi);
  std::vector<double> tau(tau_grid.begin(), tau_grid.end());
  require_increasing_grid(tau, "bloch");
  if (!tau.empty() && tau.front() < 0.0) throw std::invalid_argument("bloch: delays must be >= 0");
  std::vector<Eigen::Matrix2cd> blocks(tau.size(), Eigen::Matrix2cd::Zero());
  for (const auto& n : nodes_) {
    const QdCavitySpace& s = n->model.space();
    const ComplexMatrix b = n->model.output_operator(m);
    const ComplexVector c = n->spectral.modal_coefficients(b * n->model.steady_state().matrix() * b.adjoint());
    // Tr[|j⟩⟨i| X] = ⟨i|X|j⟩
    ComplexVector w[2][2];
    for (Index i = 0; i < 2; ++i) {
      for (Index j = 0; j < 2; ++j) w[i][j] = n->spectral.observable_weights(s.dot(j, i));
    }
    for (std::size_t k = 0; k < tau.size(); ++k) {
      for (Index i = 0; i < 2; ++i) {
        for (Index j = 0; j < 2; ++j) blocks[k](i, j) += n->weight * n->spectral.expectation(w[i][j], c, tau[k]);
      }
    }
  }
  BlochTrace out;
  for (std::size_t k = 0; k < tau.size(); ++k) {
    const Eigen::Matrix2cd h = 0.5 * (blocks[k] + blocks[k].adjoint());
    const backaction::BlochVector v = spin_from_block(h).bloch();
    out.tau.push_back(tau[k]);
    out.sx.push_back(v.x);
    out.sy.push_back(v.y);
    out.sz.push_back(v.z);
  }
  out.validate();
  return out;
}

double Simulation::slowest_timescale() const {
  double slowest = 0.0;
  for (const auto& n : nodes_) {
    const ComplexVector& ev = n->spectral.eigenvalues();
    const Index stat = n->spectral.stationary_mode();
    for (Index k = 0; k < ev.size(); ++k) {
      if (k == stat) continue;
      slowest = std::max(slowest, 1.0 / std::abs(ev(k).real()));
    }
  }
  return slowest;
}

double Simulation::max_top_fock_population() const {
  double top = 0.0;
  for (const auto& n : nodes_) {
    top = std::max(top, n->model.space().top_fock_population(n->model.steady_state().matrix()));
  }
  return top;
}

ClickConditionedState click_condition(const SimulationConfig& cfg, double phi) {
  cfg.validate();
  std::vector<double> weights;
  const std::vector<NodeModel> nodes = steady_nodes(cfg, weights);
  std::vector<const NodeModel*> ptrs;
  for (const auto& n : nodes) ptrs.push_back(&n);
  return condition_on_click(ptrs, weights, phi);
}

SteadySummary steady_summary(const SimulationConfig& cfg) {
  cfg.validate();
  std::vector<double> weights;
  const std::vector<NodeModel> nodes = steady_nodes(cfg, weights);
  std::vector<const NodeModel*> ptrs;
  for (const auto& n : nodes) ptrs.push_back(&n);
  return summarize(ptrs, weights);
}

qcore::CorrelationTrace g2_correlation(const SimulationConfig& cfg, double phi_first, device::Basis second,
                                       std::span<const double> tau_grid) {
  return Simulation(cfg).g2(phi_first, second, tau_grid);
}

StokesTrace conditional_stokes_sim(const SimulationConfig& cfg, double phi, std::span<const double> tau_grid) {
  return Simulation(cfg).stokes(phi, tau_grid);
}

BlochTrace bloch_trace_sim(const SimulationConfig& cfg, double phi, std::span<const double> tau_grid) {
  return Simulation(cfg).bloch(phi, tau_grid);
}

}  // namespace spinphoton::lindblad
