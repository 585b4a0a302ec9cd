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
#include <numbers>
#include <random>

#include "spinphoton/backaction/backaction.hpp"
#include "spinphoton/tomography/fit.hpp"
#include "spinphoton/tomography/levenberg_marquardt.hpp"
#include "spinphoton/tomography/models.hpp"

using namespace spinphoton;
using namespace spinphoton::tomography;

namespace {

constexpr double kPi = std::numbers::pi;
const double kOmega = 2.0 * kPi / 745e-12;

std::vector<double> grid(double start, double stop, int n) {
  std::vector<double> t;
  for (int i = 0; i < n; ++i) t.push_back(start + (stop - start) * i / (n - 1));
  return t;
}

std::vector<double> oscillation(const OscillationParams& p, Envelope e, const std::vector<double>& t,
                                const OscillationModifiers& m = {}) {
  std::vector<double> y;
  for (double x : t) y.push_back(oscillation_value(p, e, m, x));
  return y;
}

std::vector<double> noisy(std::vector<double> y, double sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, sigma);
  for (double& v : y) v += n(rng);
  return y;
}

double rel(double a, double b) { return std::abs(a / b - 1.0); }

}  // namespace

TEST_CASE("analytic gradients match finite differences") {
  const OscillationModifiers mods[] = {{}, {4.1e-9, 0.3, false}, {4.1e-9, -0.2, true}};
  for (Envelope e : {Envelope::gaussian, Envelope::exponential}) {
    for (const auto& m : mods) {
      const OscillationParams p{0.3, kOmega, 1.9e-9, 0.4, 0.01};
      for (double t : {0.3e-9, 1.7e-9, 3.1e-9}) {
        const OscillationGradient g = oscillation_gradient(p, e, m, t);
        auto fd = [&](auto member, double h) {
          OscillationParams a = p;
          OscillationParams b = p;
          a.*member += h;
          b.*member -= h;
          return (oscillation_value(a, e, m, t) - oscillation_value(b, e, m, t)) / (2.0 * h);
        };
        auto close = [](double an, double num, double scale) { return std::abs(an - num) <= 1e-6 * scale; };
        CHECK(close(g.amplitude, fd(&OscillationParams::amplitude, 1e-6), 1.0));
        CHECK(close(g.omega * kOmega, fd(&OscillationParams::omega, kOmega * 1e-7) * kOmega, 0.3 * kOmega * t + 1.0));
        CHECK(close(g.decay_time * 1.9e-9, fd(&OscillationParams::decay_time, 1.9e-9 * 1e-6) * 1.9e-9, 1.0));
        CHECK(close(g.phase, fd(&OscillationParams::phase, 1e-6), 1.0));
        CHECK(g.offset == 1.0);
      }
    }
  }
  const RelaxationParams r{-0.89, -0.1, 4.1e-9, 0.25};
  for (double t : {0.5e-9, 2e-9, 9e-9}) {
    const RelaxationGradient g = relaxation_gradient(r, t);
    auto fd = [&](auto member, double h) {
      RelaxationParams a = r;
      RelaxationParams b = r;
      a.*member += h;
      b.*member -= h;
      return (relaxation_value(a, t) - relaxation_value(b, t)) / (2.0 * h);
    };
    CHECK(std::abs(g.offset - fd(&RelaxationParams::offset, 1e-6)) < 1e-6);
    CHECK(std::abs(g.amplitude - fd(&RelaxationParams::amplitude, 1e-6)) < 1e-6);
    CHECK(std::abs(g.T1 * 4.1e-9 - fd(&RelaxationParams::T1, 4.1e-15) * 4.1e-9) < 1e-6);
    CHECK(std::abs(g.norm_gamma - fd(&RelaxationParams::norm_gamma, 1e-6)) < 1e-6);
  }
}

TEST_CASE("Levenberg-Marquardt solves a linear least-squares problem exactly") {
  const Eigen::Vector3d truth(1.5, -0.3, 2.0);
  Eigen::MatrixXd a(6, 3);
  a << 1, 0, 2, 0, 1, 1, 3, 1, 0, 1, 1, 1, 2, -1, 0, 0, 0, 1;
  const Eigen::VectorXd b = a * truth;
  auto f = [&](const Eigen::VectorXd& p, Eigen::VectorXd& r, Eigen::MatrixXd& J) {
    r = a * p - b;
    J = a;
  };
  const LmResult res = levenberg_marquardt(f, Eigen::VectorXd::Zero(3));
  CHECK((res.params - truth).norm() < 1e-10);
  CHECK(res.residual_norm < 1e-10);
}

TEST_CASE("noiseless oscillation round trip") {
  const std::vector<double> t = grid(0.0, 20e-9, 401);
  for (Envelope e : {Envelope::gaussian, Envelope::exponential}) {
    const OscillationParams p{0.3, kOmega, 1.9e-9, -2.1, 0.015};
    const OscillationFit f = fit_damped_oscillation(t, oscillation(p, e, t), e);
    CHECK(rel(f.params.omega, p.omega) < 1e-6);
    CHECK(rel(f.params.decay_time, p.decay_time) < 1e-6);
    CHECK(rel(f.params.amplitude, p.amplitude) < 1e-6);
    CHECK(std::abs(f.params.phase - p.phase) < 1e-6);
    CHECK(std::abs(f.params.offset - p.offset) < 1e-6);
  }
}

TEST_CASE("noiseless relaxation round trip") {
  const std::vector<double> t = grid(0.0, 20e-9, 401);
  const RelaxationParams p{-0.89, -0.12, 4.1e-9, 0.0};
  std::vector<double> y;
  for (double x : t) y.push_back(relaxation_value(p, x));
  const RelaxationFit f = fit_relaxation(t, y);
  CHECK(rel(f.params.T1, p.T1) < 1e-6);
  CHECK(rel(f.params.amplitude, p.amplitude) < 1e-6);
  const RelaxationParams q{-0.7, -0.2, 4.1e-9, 0.3};
  y.clear();
  for (double x : t) y.push_back(relaxation_value(q, x));
  const RelaxationFit g = fit_relaxation(t, y, 1e-9, true);
  CHECK(rel(g.params.T1, q.T1) < 1e-6);
  CHECK(rel(g.params.norm_gamma, q.norm_gamma) < 1e-6);
}

TEST_CASE("Monte-Carlo round trip with noise") {
  // synthetic traces have no transient, so the whole grid is fitted
  const std::vector<double> t = grid(0.0, 20e-9, 401);
  const OscillationParams p{0.3, kOmega, 1.9e-9, 0.8, 0.0};
  const std::vector<double> clean = oscillation(p, Envelope::gaussian, t);
  FitOptions o;
  o.exclude_before = 0.0;
  double ss_omega = 0.0;
  double ss_decay = 0.0;
  const int runs = 100;
  for (int seed = 1; seed <= runs; ++seed) {
    const OscillationFit f = fit_damped_oscillation(t, noisy(clean, 0.02, seed), Envelope::gaussian, {}, o);
    ss_omega += std::pow(rel(f.params.omega, p.omega), 2);
    ss_decay += std::pow(rel(f.params.decay_time, p.decay_time), 2);
  }
  CHECK(std::sqrt(ss_omega / runs) < 0.01);
  CHECK(std::sqrt(ss_decay / runs) < 0.10);
}

TEST_CASE("standard errors shrink as 1/sqrt(N)") {
  const OscillationParams p{0.3, kOmega, 1.9e-9, 0.8, 0.0};
  FitOptions o;
  o.exclude_before = 0.0;
  double se_n = 0.0;
  double se_4n = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::vector<double> a = grid(0.0, 20e-9, 400);
    const std::vector<double> b = grid(0.0, 20e-9, 1600);
    se_n += fit_damped_oscillation(a, noisy(oscillation(p, Envelope::gaussian, a), 0.02, seed), Envelope::gaussian, {}, o)
                .std_errors.omega;
    se_4n += fit_damped_oscillation(b, noisy(oscillation(p, Envelope::gaussian, b), 0.02, seed + 1000),
                                    Envelope::gaussian, {}, o)
                 .std_errors.omega;
  }
  CHECK(se_n / se_4n == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("exponential-envelope fits are invariant under a time shift") {
  const double shift = 1.5e-9;
  const std::vector<double> t = grid(shift, shift + 20e-9, 401);
  std::vector<double> t0;
  for (double x : t) t0.push_back(x - shift);
  const OscillationParams p{0.3, kOmega, 1.9e-9, 0.8, 0.01};
  const std::vector<double> y = noisy(oscillation(p, Envelope::exponential, t), 0.02, 7);
  FitOptions o;
  o.exclude_before = shift;
  const OscillationFit a = fit_damped_oscillation(t, y, Envelope::exponential, {}, o);
  o.exclude_before = 0.0;
  const OscillationFit b = fit_damped_oscillation(t0, y, Envelope::exponential, {}, o);
  CHECK(rel(a.params.omega, b.params.omega) < 1e-8);
  CHECK(rel(a.params.decay_time, b.params.decay_time) < 1e-8);

  std::vector<double> h;
  for (double x : t) h.push_back(relaxation_value({-0.2, -0.7, 4.1e-9, 0.3}, x));
  h = noisy(h, 0.005, 9);
  LmOptions tight;  // compare converged optima, not stopping points
  tight.step_tol = 1e-14;
  tight.cost_tol = 1e-16;
  tight.max_iterations = 2000;
  const RelaxationFit c = fit_relaxation(t, h, shift, true, tight);
  const RelaxationFit d = fit_relaxation(t0, h, 0.0, true, tight);
  CHECK(rel(c.params.T1, d.params.T1) < 1e-8);
}

TEST_CASE("degenerate traces") {
  const std::vector<double> t = grid(0.0, 20e-9, 401);
  const std::vector<double> flat(t.size(), 0.02);
  CHECK_THROWS_AS(fit_damped_oscillation(t, flat, Envelope::gaussian), NoOscillationDetected);
  const std::vector<double> y(t.size(), -0.5);
  CHECK_THROWS_AS(fit_relaxation(t, y, 25e-9), FitError);
  CHECK_THROWS_AS(fit_damped_oscillation(t, std::vector<double>(3, 0.0), Envelope::gaussian), std::invalid_argument);
}

namespace {

StokesTrace analytical(double phi, backaction::SpinDynamicsParams& dyn, const device::ReflectionSet& r) {
  dyn = backaction::SpinDynamicsParams::from_device(device::DeviceParams{}, 0.51, 0.49);
  return backaction::stokes_trace(phi, 0.51, 0.49, r, dyn, grid(0.0, 20e-9, 401));
}

const device::ReflectionSet kR{std::polar(0.83, 0.0), std::polar(0.64, 0.26), std::polar(0.26, -1.84)};

FitOptions closed_form() {
  FitOptions o;
  o.t1_limited_coherence = false;  // the analytical engine dephases without a T1 factor
  return o;
}

}  // namespace

TEST_CASE("analytical traces are recovered exactly") {
  backaction::SpinDynamicsParams dyn;
  const StokesTrace s = analytical(kPi / 6.0, dyn, kR);
  const FitResult f = extract_all(s, closed_form());
  REQUIRE(f.has_oscillation());
  CHECK(rel(f.omega_L, dyn.omega_L) < 1e-6);
  CHECK(rel(f.T2_star, dyn.T2_star) < 1e-6);
  CHECK(rel(f.T1, dyn.T1) < 1e-6);
  CHECK(f.quadrature_error < 1e-6);
  for (double at : {0.0, 1e-9}) {
    const std::vector<double> phi{kPi / 6.0};
    const double ref = backaction::coherence_sweep(phi, 0.51, 0.49, kR, at, dyn)[0].C_S;
    CHECK(std::abs(measure_stokes_coherence(s, at, closed_form()) - ref) < 1e-6);
  }
}

TEST_CASE("H-conditioned trace has no oscillation but still yields T1") {
  backaction::SpinDynamicsParams dyn;
  const StokesTrace s = analytical(0.0, dyn, kR);
  const FitResult f = extract_all(s, closed_form());
  CHECK_FALSE(f.has_oscillation());
  CHECK(f.oscillation_status.find("no oscillation detected") != std::string::npos);
  CHECK(rel(f.T1, dyn.T1) < 1e-6);
  CHECK(measure_stokes_coherence(s, 0.0, closed_form()) == 0.0);
}

TEST_CASE("oscillation window restricts the fit") {
  const std::vector<double> t = grid(0.0, 20e-9, 401);
  const OscillationParams p{0.3, kOmega, 1.9e-9, 0.3, 0.0};
  std::vector<double> y = oscillation(p, Envelope::gaussian, t);
  // a spurious late revival outside the window must not matter
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] > 6e-9) y[i] += 0.2 * std::cos(kOmega * t[i]) * std::exp(-std::pow((t[i] - 8e-9) / 1.5e-9, 2));
  }
  FitOptions o;
  o.oscillation_window_end = 5e-9;
  const OscillationFit f = fit_damped_oscillation(t, y, Envelope::gaussian, {}, o);
  CHECK(rel(f.params.decay_time, p.decay_time) < 1e-6);
}
