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

#include "spinphoton/backaction/spin_state.hpp"

#include <cmath>
#include <sstream>

#include "spinphoton/errors.hpp"

namespace spinphoton::backaction {

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

SpinState::SpinState(const Matrix2c& matrix) : matrix_(matrix) {
  const qcore::DensityCheck c = qcore::check_density(matrix_);
  if (!c.ok()) throw InvariantError("spin state invariant violated: " + c.describe());
  if (bloch().norm() > 1.0 + 1e-9) {
    std::ostringstream os;
    os << "spin state Bloch vector norm " << bloch().norm() << " exceeds 1";
    throw InvariantError(os.str());
  }
}

SpinState SpinState::from_elements(double rho_uu, double rho_dd, Complex rho_du) {
  Matrix2c m;
  m << rho_uu, std::conj(rho_du), rho_du, rho_dd;
  return SpinState(m);
}

BlochVector SpinState::bloch() const {
  const Complex du = rho_du();
  return {rho_uu() - rho_dd(), 2.0 * du.real(), 2.0 * du.imag()};
}

double SpinState::coherence() const { return 2.0 * std::abs(rho_du()); }

qcore::DensityOperator SpinState::as_density() const {
  return qcore::DensityOperator(qcore::ComplexMatrix(matrix_), {{"spin", 2}});
}

}  // namespace spinphoton::backaction
