// Copyright 2026 The cgplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cgplab/coherence.hpp"

#include <string>

#include "cgplab/channel.hpp"
#include "cgplab/errors.hpp"

namespace cgplab {

namespace {

void require_state(const ComplexMatrix& rho, const Mori& b, const Tolerance& tol,
                   const char* what) {
  require_square(rho, what);
  if (static_cast<std::size_t>(rho.rows()) != b.dim()) {
    throw ShapeError(std::string(what) + ": state and Mori dimensions differ");
  }
  if (!validate_density(rho, tol)) {
    throw NotDensityError(std::string(what) + ": input is not a density matrix");
  }
}

}  // namespace

double coherence_raw(const ComplexMatrix& x, const Mori& b) {
  return q_project(b, x).squaredNorm();
}

double coherence(const ComplexMatrix& rho, const Mori& b, const Tolerance& tol) {
  require_state(rho, b, tol, "coherence");
  return coherence_raw(rho, b);
}

double coherence_commutator(const ComplexMatrix& rho, const Mori& b,
                            const Tolerance& tol) {
  require_state(rho, b, tol, "coherence_commutator");
  double sum = 0.0;
  for (std::size_t j = 0; j < b.dim(); ++j) {
    sum += commutator(b.projector(j), rho).squaredNorm();
  }
  return 0.5 * sum;
}

}  // namespace cgplab
