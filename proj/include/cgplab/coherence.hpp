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

#ifndef CGPLAB_COHERENCE_HPP_
#define CGPLAB_COHERENCE_HPP_

#include "cgplab/linalg.hpp"
#include "cgplab/mori.hpp"

namespace cgplab {

/// B-coherence ||Q_B(rho)||_2^2: squared Hilbert-Schmidt distance from rho
/// to the nearest operator diagonal in B. Lies in [0, 1 - 1/d] for states.
/// Throws NotDensityError for invalid states.
double coherence(const ComplexMatrix& rho, const Mori& b, const Tolerance& tol = {});

/// (1/2) sum_j ||[P_j, rho]||_2^2. Same value as coherence(), computed from
/// commutators instead of the projection.
double coherence_commutator(const ComplexMatrix& rho, const Mori& b,
                            const Tolerance& tol = {});

/// ||Q_B(X)||_2^2 for an arbitrary operator, without the state check.
double coherence_raw(const ComplexMatrix& x, const Mori& b);

}  // namespace cgplab

#endif  // CGPLAB_COHERENCE_HPP_
