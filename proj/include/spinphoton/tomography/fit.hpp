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

#pragma once

#include <optional>
#include <span>
#include <string>

#include "spinphoton/errors.hpp"
#include "spinphoton/tomography/levenberg_marquardt.hpp"
#include "spinphoton/tomography/models.hpp"
#include "spinphoton/traces.hpp"

namespace spinphoton::tomography {

/// A fit could not be performed (too few points, non-convergence).
class FitError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The trace is flat within the amplitude floor.
class NoOscillationDetected : public FitError {
 public:
  using FitError::FitError;
};

struct FitOptions {
  Envelope envelope = Envelope::gaussian;
  double exclude_before = 1e-9;  ///< s; samples with τ ≤ exclude_before are ignored
  /// Multiply the coherence envelope by e^{−τ/(2T1)} (spin-flip contribution to dephasing).
  bool t1_limited_coherence = true;
  /// Fit s_HV with the conditional-reflectivity normalization (c + Bx)/(1 + γx).
  bool rational_relaxation = true;
  double amplitude_floor = 1e-4;
  /// s; oscillation fits use τ ≤ this bound (0 = whole trace). Overhauser
  /// averaging on a finite rule is only valid up to its quadrature horizon.
  double oscillation_window_end = 0.0;
  LmOptions lm;
};

struct OscillationFit {
  OscillationParams params;
  OscillationParams std_errors;
  Envelope envelope = Envelope::gaussian;
  OscillationModifiers modifiers;
  double residual_norm = 0.0;
  int iterations = 0;

  [[nodiscard]] double value(double tau) const;
};

struct RelaxationFit {
  RelaxationParams params;
  RelaxationParams std_errors;
  double residual_norm = 0.0;
  int iterations = 0;

  [[nodiscard]] double value(double tau) const;
};

/// Joint result of the three Stokes components.
struct FitResult {
  double omega_L = 0.0;  ///< rad/s
  double T1 = 0.0;       ///< s
  double T2_star = 0.0;  ///< s
  double omega_L_error = 0.0;
  double T1_error = 0.0;
  double T2_star_error = 0.0;
  RelaxationFit hv;
  std::optional<OscillationFit> da;  ///< empty when no oscillation was detected
  std::optional<OscillationFit> rl;
  /// |Δθ ∓ π/2| of the DA/RL phases, as a fraction of a period.
  double quadrature_error = 0.0;
  double residual_norm = 0.0;
  std::string oscillation_status = "ok";

  [[nodiscard]] bool has_oscillation() const { return da.has_value(); }
};

/// A·env·m·cos(ωτ + θ) + c on τ > options.exclude_before.
///
/// Initial ω from the largest discrete-spectrum peak of the detrended trace,
/// decay from a linear fit of the log half-period maxima, offset from the tail
/// mean. Throws NoOscillationDetected for a flat trace and FitError otherwise.
OscillationFit fit_damped_oscillation(std::span<const double> tau, std::span<const double> y, Envelope envelope,
                                      const OscillationModifiers& modifiers = {}, const FitOptions& options = {});

/// Relaxation fit on τ > exclude_before. With `rational` the normalization γ is
/// free, otherwise the model is c + B e^{−τ/T1}.
RelaxationFit fit_relaxation(std::span<const double> tau, std::span<const double> y, double exclude_before = 1e-9,
                             bool rational = false, const LmOptions& lm = {});

/// s_HV relaxation, then a joint DA/RL fit with shared ω_L and T2* and free phases.
/// Component failures are rethrown as FitError naming the component.
FitResult extract_all(const StokesTrace& stokes, const FitOptions& options = {});

/// C_S at `at_tau` from the fitted DA/RL amplitudes extrapolated with the
/// fitted envelope; 0 when no oscillation is detected.
double measure_stokes_coherence(const StokesTrace& stokes, double at_tau = 0.0, const FitOptions& options = {});

/// Same, from an existing result.
double stokes_coherence(const FitResult& fit, double at_tau);

}  // namespace spinphoton::tomography
