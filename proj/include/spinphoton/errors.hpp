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

#include <stdexcept>
#include <string>

namespace spinphoton {

/// Base class for failures of a numerical procedure (as opposed to bad input).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A density operator or Liouvillian violated one of its invariants.
class InvariantError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// An iterative procedure (integrator, optimizer) did not converge.
class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Steady-state photon population at the Fock cutoff is too large.
class CutoffError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace spinphoton
