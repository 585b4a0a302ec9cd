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

#include "spinphoton/tomography/fit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <limits>
#include <sstream>
#include <vector>

namespace spinphoton::tomography {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
constexpr double kPi = std::numbers::pi;
constexpr double kNs = 1e9;  // fits run in nanoseconds to keep parameters O(1)

double wrap_phase(double th) {
  th = std::remainder(th, 2.0 * kPi);
  if (th <= -kPi) th += 2.0 * kPi;
  return th;
}

struct Window {
  std::vector<double> t;  // ns
  std::vector<double> y;
};

Window select(std::span<const double> tau, std::span<const double> y, double exclude_before, std::size_t min_points,
              const char* what, double window_end = 0.0) {
  if (tau.size() != y.size()) throw std::invalid_argument(std::string(what) + ": tau and values differ in length");
  Window w;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (!std::isfinite(tau[i]) || !std::isfinite(y[i])) {
      throw std::invalid_argument(std::string(what) + ": non-finite sample");
    }
    if (i > 0 && !(tau[i] > tau[i - 1])) throw std::invalid_argument(std::string(what) + ": grid not increasing");
    if (tau[i] > exclude_before && (window_end <= 0.0 || tau[i] <= window_end)) {
      w.t.push_back(tau[i] * kNs);
      w.y.push_back(y[i]);
    }
  }
  if (w.t.size() < min_points) {
    std::ostringstream os;
    os << what << ": only " << w.t.size() << " samples after the exclusion window (need " << min_points << ")";
    throw FitError(os.str());
  }
  return w;
}

double tail_mean(const std::vector<double>& y) {
  const std::size_t n0 = y.size() - std::max<std::size_t>(1, y.size() / 5);
  double s = 0.0;
  for (std::size_t i = n0; i < y.size(); ++i) s += y[i];
  return s / static_cast<double>(y.size() - n0);
}

// ---- envelope and its derivative with respect to the decay time (ns) ----
double env(Envelope e, double t, double T) { return backaction::envelope_value(e, t, T); }

OscillationModifiers to_ns(OscillationModifiers m) {
  m.T1 *= kNs;
  return m;
}

// ---- relaxation ----
RelaxationParams relaxation_from(const VectorXd& p, bool rational) {
  return {p(0), p(1), p(2), rational ? p(3) : 0.0};
}

void relaxation_residuals(const Window& w, bool rational, const VectorXd& p, VectorXd& r, MatrixXd& J) {
  const auto n = static_cast<Eigen::Index>(w.t.size());
  r.resize(n);
  J.resize(n, p.size());
  const RelaxationParams q = relaxation_from(p, rational);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = w.t[static_cast<std::size_t>(i)];
    r(i) = relaxation_value(q, t) - w.y[static_cast<std::size_t>(i)];
    const RelaxationGradient g = relaxation_gradient(q, t);
    J(i, 0) = g.offset;
    J(i, 1) = g.amplitude;
    J(i, 2) = g.T1;
    if (rational) J(i, 3) = g.norm_gamma;
  }
}

// log-linear estimate of an exponential decay towards c0
double guess_decay(const Window& w, double c0) {
  double amax = 0.0;
  for (double v : w.y) amax = std::max(amax, std::abs(v - c0));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < w.t.size(); ++i) {
    const double a = std::abs(w.y[i] - c0);
    if (a < 0.1 * amax || a == 0.0) continue;
    const double ly = std::log(a);
    sx += w.t[i];
    sy += ly;
    sxx += w.t[i] * w.t[i];
    sxy += w.t[i] * ly;
    ++m;
  }
  const double span = w.t.back() - w.t.front();
  if (m < 2) return span / 3.0;
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  if (!(slope < 0.0) || !std::isfinite(slope)) return span / 3.0;
  return std::clamp(-1.0 / slope, span / 50.0, 5.0 * span);
}

// ---- oscillation ----
struct OscModel {
  const Window* w;
  Envelope envelope;
  OscillationModifiers mod;  // ns
  std::vector<double> m;     // multiplier per sample

  OscModel(const Window& win, Envelope e, const OscillationModifiers& mod_ns) : w(&win), envelope(e), mod(mod_ns) {
    for (double t : win.t) m.push_back(mod.multiplier(t));
  }

  // parameters of one component: A, θ, c; shared ω, T passed separately
  void fill(double omega, double T, double A, double th, double c, Eigen::Ref<VectorXd> r, Eigen::Ref<MatrixXd> J,
            Eigen::Index col_omega, Eigen::Index col_T, Eigen::Index col_A) const {
    const OscillationParams p{A, omega, T, th, c};
    for (std::size_t i = 0; i < w->t.size(); ++i) {
      const auto k = static_cast<Eigen::Index>(i);
      const double t = w->t[i];
      r(k) = oscillation_value(p, envelope, mod, t) - w->y[i];
      const OscillationGradient g = oscillation_gradient(p, envelope, mod, t);
      J(k, col_omega) = g.omega;
      J(k, col_T) = g.decay_time;
      J(k, col_A) = g.amplitude;
      J(k, col_A + 1) = g.phase;
      J(k, col_A + 2) = g.offset;
    }
  }
};

OscillationParams normalize(OscillationParams p) {
  if (p.omega < 0.0) {
    p.omega = -p.omega;
    p.phase = -p.phase;
  }
  if (p.amplitude < 0.0) {
    p.amplitude = -p.amplitude;
    p.phase += kPi;
  }
  p.phase = wrap_phase(p.phase);
  return p;
}

// initial guess in ns units
OscillationParams guess_oscillation(const OscModel& model, Envelope envelope, double floor) {
  const Window& w = *model.w;
  const std::size_t n = w.t.size();
  const double c0 = tail_mean(w.y);
  double dev = 0.0;
  for (double v : w.y) dev = std::max(dev, std::abs(v - c0));
  if (dev < floor) throw NoOscillationDetected("no oscillation detected (trace flat within the amplitude floor)");
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = (w.y[i] - c0) / model.m[i];

  const double span = w.t.back() - w.t.front();
  std::vector<double> dts;
  for (std::size_t i = 1; i < n; ++i) dts.push_back(w.t[i] - w.t[i - 1]);
  std::nth_element(dts.begin(), dts.begin() + static_cast<long>(dts.size() / 2), dts.end());
  const double dt = dts[dts.size() / 2];
  auto spectrum = [&](double om) {
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += u[i] * std::exp(std::complex<double>(0.0, -om * w.t[i]));
    return s;
  };
  const double d_om = 2.0 * kPi / (8.0 * span);
  const double om_min = 2.0 * kPi / span;
  const double om_max = kPi / dt;
  double best = om_min;
  double best_mag = -1.0;
  for (double om = om_min; om <= om_max; om += d_om) {
    const double mag = std::abs(spectrum(om));
    if (mag > best_mag) {
      best_mag = mag;
      best = om;
    }
  }
  // golden-section refinement of the peak
  double a = std::max(best - d_om, 1e-12);
  double b = best + d_om;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 60; ++it) {
    const double x1 = b - gr * (b - a);
    const double x2 = a + gr * (b - a);
    if (std::abs(spectrum(x1)) > std::abs(spectrum(x2))) {
      b = x2;
    } else {
      a = x1;
    }
  }
  const double omega0 = 0.5 * (a + b);

  // Variable projection on an (ω, T) grid: amplitude, phase and offset enter
  // linearly, so each node is a 3x3 least-squares solve. Noise-only tails make
  // peak-based envelope estimates unreliable; the residual is not.
  double best_cost = std::numeric_limits<double>::infinity();
  OscillationParams out{dev, omega0, span / 2.0, 0.0, c0};
  const int n_omega = 41;
  const int n_T = 48;
  const double T_lo = 2.0 * dt;
  const double T_hi = 4.0 * (w.t.back());
  for (int i = 0; i < n_omega; ++i) {
    const double om = omega0 * (0.85 + 0.3 * i / (n_omega - 1));
    for (int j = 0; j < n_T; ++j) {
      const double T = T_lo * std::pow(T_hi / T_lo, j / static_cast<double>(n_T - 1));
      Eigen::Matrix3d ata = Eigen::Matrix3d::Zero();
      Eigen::Vector3d aty = Eigen::Vector3d::Zero();
      double yy = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double e = env(envelope, w.t[k], T) * model.m[k];
        const Eigen::Vector3d row(e * std::cos(om * w.t[k]), -e * std::sin(om * w.t[k]), 1.0);
        ata += row * row.transpose();
        aty += row * w.y[k];
        yy += w.y[k] * w.y[k];
      }
      const Eigen::Vector3d x = ata.ldlt().solve(aty);
      const double cost = yy - x.dot(aty);
      if (x.allFinite() && cost < best_cost) {
        best_cost = cost;
        out = {std::hypot(x(0), x(1)), om, T, std::atan2(x(1), x(0)), x(2)};
      }
    }
  }
  return out;
}

OscillationParams scaled_to_si(const OscillationParams& p) {
  return {p.amplitude, p.omega * kNs, p.decay_time / kNs, p.phase, p.offset};
}

double max_envelope(const OscModel& model, Envelope envelope, double T) {
  double m = 0.0;
  for (std::size_t i = 0; i < model.w->t.size(); ++i) m = std::max(m, env(envelope, model.w->t[i], T) * model.m[i]);
  return m;
}

void check_significance(double A, double A_err, double env_max, double floor) {
  if (std::abs(A) * env_max < floor || !(std::abs(A) > 3.0 * A_err)) {
    throw NoOscillationDetected("no oscillation detected (fitted amplitude not significant)");
  }
}

}  // namespace

double OscillationFit::value(double tau) const { return oscillation_value(params, envelope, modifiers, tau); }

double RelaxationFit::value(double tau) const { return relaxation_value(params, tau); }

OscillationFit fit_damped_oscillation(std::span<const double> tau, std::span<const double> y, Envelope envelope,
                                      const OscillationModifiers& modifiers, const FitOptions& options) {
  const Window w = select(tau, y, options.exclude_before, 6, "oscillation fit", options.oscillation_window_end);
  const OscModel model(w, envelope, to_ns(modifiers));
  const OscillationParams g = guess_oscillation(model, envelope, options.amplitude_floor);
  // parameter order: ω, T, A, θ, c
  VectorXd p0(5);
  p0 << g.omega, g.decay_time, g.amplitude, g.phase, g.offset;
  auto f = [&](const VectorXd& p, VectorXd& r, MatrixXd& J) {
    r.resize(static_cast<Eigen::Index>(w.t.size()));
    J.resize(r.size(), 5);
    model.fill(p(0), std::abs(p(1)), p(2), p(3), p(4), r, J, 0, 1, 2);
  };
  LmResult res;
  try {
    res = levenberg_marquardt(f, p0, options.lm);
  } catch (const ConvergenceError& e) {
    throw FitError(std::string("oscillation fit: ") + e.what());
  }
  const VectorXd se = standard_errors(res);
  OscillationFit out;
  out.envelope = envelope;
  out.modifiers = modifiers;
  const OscillationParams ns = normalize({res.params(2), res.params(0), std::abs(res.params(1)), res.params(3),
                                          res.params(4)});
  check_significance(ns.amplitude, se(2), max_envelope(model, envelope, ns.decay_time), options.amplitude_floor);
  out.params = scaled_to_si(ns);
  out.std_errors = {se(2), se(0) * kNs, se(1) / kNs, se(3), se(4)};
  out.residual_norm = res.residual_norm;
  out.iterations = res.iterations;
  return out;
}

RelaxationFit fit_relaxation(std::span<const double> tau, std::span<const double> y, double exclude_before,
                             bool rational, const LmOptions& lm) {
  const Window w = select(tau, y, exclude_before, rational ? 6 : 5, "relaxation fit");
  const double c0 = tail_mean(w.y);
  const double T0 = guess_decay(w, c0);
  const double B0 = (w.y.front() - c0) * std::exp(w.t.front() / T0);
  VectorXd p0(3);
  p0 << c0, B0, T0;
  auto f3 = [&](const VectorXd& p, VectorXd& r, MatrixXd& J) { relaxation_residuals(w, false, p, r, J); };
  LmResult res;
  try {
    res = levenberg_marquardt(f3, p0, lm);
    if (rational) {
      VectorXd p1(4);
      p1 << res.params(0), res.params(1), res.params(2), 0.0;
      auto f4 = [&](const VectorXd& p, VectorXd& r, MatrixXd& J) { relaxation_residuals(w, true, p, r, J); };
      res = levenberg_marquardt(f4, p1, lm);
    }
  } catch (const ConvergenceError& e) {
    throw FitError(std::string("relaxation fit: ") + e.what());
  }
  if (!(res.params(2) > 0.0)) throw FitError("relaxation fit: non-positive T1");
  const VectorXd se = standard_errors(res);
  RelaxationFit out;
  const RelaxationParams p = relaxation_from(res.params, rational);
  out.params = {p.offset, p.amplitude, p.T1 / kNs, p.norm_gamma};
  out.std_errors = {se(0), se(1), se(2) / kNs, rational ? se(3) : 0.0};
  out.residual_norm = res.residual_norm;
  out.iterations = res.iterations;
  return out;
}

FitResult extract_all(const StokesTrace& stokes, const FitOptions& options) {
  stokes.validate();
  FitResult out;
  try {
    out.hv = fit_relaxation(stokes.tau, stokes.s_HV, options.exclude_before, options.rational_relaxation, options.lm);
  } catch (const FitError& e) {
    throw FitError(std::string("s_HV: ") + e.what());
  }
  out.T1 = out.hv.params.T1;
  out.T1_error = out.hv.std_errors.T1;
  out.residual_norm = out.hv.residual_norm;

  OscillationModifiers mod;
  mod.T1 = out.T1;
  mod.norm_gamma = out.hv.params.norm_gamma;
  mod.t1_coherence_decay = options.t1_limited_coherence;

  OscillationFit da;
  OscillationFit rl;
  const char* component = "s_DA";
  try {
    da = fit_damped_oscillation(stokes.tau, stokes.s_DA, options.envelope, mod, options);
    component = "s_RL";
    rl = fit_damped_oscillation(stokes.tau, stokes.s_RL, options.envelope, mod, options);
  } catch (const NoOscillationDetected& e) {
    out.oscillation_status = std::string("no oscillation detected in ") + component;
    return out;
  } catch (const FitError& e) {
    throw FitError(std::string(component) + ": " + e.what());
  }

  // joint fit: ω, T shared; A, θ, c per component
  const Window wd = select(stokes.tau, stokes.s_DA, options.exclude_before, 6, "s_DA", options.oscillation_window_end);
  const Window wr = select(stokes.tau, stokes.s_RL, options.exclude_before, 6, "s_RL", options.oscillation_window_end);
  const OscillationModifiers mod_ns = to_ns(mod);
  const OscModel md(wd, options.envelope, mod_ns);
  const OscModel mr(wr, options.envelope, mod_ns);
  const auto nd = static_cast<Eigen::Index>(wd.t.size());
  const auto nr = static_cast<Eigen::Index>(wr.t.size());
  VectorXd p0(8);
  p0 << 0.5 * (da.params.omega + rl.params.omega) / kNs, 0.5 * (da.params.decay_time + rl.params.decay_time) * kNs,
      da.params.amplitude, da.params.phase, da.params.offset, rl.params.amplitude, rl.params.phase, rl.params.offset;
  auto f = [&](const VectorXd& p, VectorXd& r, MatrixXd& J) {
    r.resize(nd + nr);
    J = MatrixXd::Zero(nd + nr, 8);
    const double T = std::abs(p(1));
    MatrixXd Jd(nd, 5);
    MatrixXd Jr(nr, 5);
    VectorXd rd(nd);
    VectorXd rr(nr);
    md.fill(p(0), T, p(2), p(3), p(4), rd, Jd, 0, 1, 2);
    mr.fill(p(0), T, p(5), p(6), p(7), rr, Jr, 0, 1, 2);
    r << rd, rr;
    J.block(0, 0, nd, 2) = Jd.leftCols(2);
    J.block(0, 2, nd, 3) = Jd.rightCols(3);
    J.block(nd, 0, nr, 2) = Jr.leftCols(2);
    J.block(nd, 5, nr, 3) = Jr.rightCols(3);
  };
  LmResult res;
  try {
    res = levenberg_marquardt(f, p0, options.lm);
  } catch (const ConvergenceError& e) {
    throw FitError(std::string("joint s_DA/s_RL fit: ") + e.what());
  }
  const VectorXd se = standard_errors(res);
  const double T = std::abs(res.params(1));
  const OscillationParams pd = normalize({res.params(2), res.params(0), T, res.params(3), res.params(4)});
  const OscillationParams pr = normalize({res.params(5), res.params(0), T, res.params(6), res.params(7)});
  da.params = scaled_to_si(pd);
  rl.params = scaled_to_si(pr);
  da.std_errors = {se(2), se(0) * kNs, se(1) / kNs, se(3), se(4)};
  rl.std_errors = {se(5), se(0) * kNs, se(1) / kNs, se(6), se(7)};
  da.residual_norm = res.residuals.head(nd).norm();
  rl.residual_norm = res.residuals.tail(nr).norm();
  da.iterations = rl.iterations = res.iterations;

  out.omega_L = pd.omega * kNs;
  out.T2_star = T / kNs;
  out.omega_L_error = se(0) * kNs;
  out.T2_star_error = se(1) / kNs;
  const double dphi = wrap_phase(pd.phase - pr.phase);
  out.quadrature_error = std::min(std::abs(dphi - kPi / 2.0), std::abs(dphi + kPi / 2.0)) / (2.0 * kPi);
  out.residual_norm = std::sqrt(out.hv.residual_norm * out.hv.residual_norm + res.residual_norm * res.residual_norm);
  out.da = da;
  out.rl = rl;
  return out;
}

double stokes_coherence(const FitResult& fit, double at_tau) {
  if (!fit.has_oscillation()) return 0.0;
  const OscillationFit& d = *fit.da;
  const OscillationFit& r = *fit.rl;
  const double e = backaction::envelope_value(d.envelope, at_tau, d.params.decay_time) * d.modifiers.multiplier(at_tau);
  return e * std::sqrt(0.5 * (d.params.amplitude * d.params.amplitude + r.params.amplitude * r.params.amplitude));
}

double measure_stokes_coherence(const StokesTrace& stokes, double at_tau, const FitOptions& options) {
  return stokes_coherence(extract_all(stokes, options), at_tau);
}

}  // namespace spinphoton::tomography
