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

// CP maps in Kraus form, the dephasing projection onto a MASA and its
// complement, and superoperator matrices.
//
// Superoperator matrices act on column-major vectorizations:
// vec(A X B) = (B^T (x) A) vec(X), so X -> K X K^dagger is conj(K) (x) K.

#ifndef CGPLAB_CHANNEL_HPP_
#define CGPLAB_CHANNEL_HPP_

#include <cstddef>
#include <vector>

#include "cgplab/linalg.hpp"
#include "cgplab/mori.hpp"

namespace cgplab {

class KrausChannel {
 public:
  /// Throws ShapeError if the list is empty or the operators are not all
  /// d x d with finite entries.
  explicit KrausChannel(std::vector<ComplexMatrix> kraus);

  /// Single-Kraus channel X -> U X U^dagger (U is not checked here).
  static KrausChannel unitary(const ComplexMatrix& u);
  static KrausChannel identity(std::size_t dim);
  /// Kraus operators are the projectors of `b`.
  static KrausChannel dephasing(const Mori& b);

  std::size_t dim() const { return dim_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  /// ||sum K K^dagger - I|| <= tol.structural.
  bool is_unital(const Tolerance& tol = {}) const;
  /// ||sum K^dagger K - I|| <= tol.structural.
  bool is_trace_preserving(const Tolerance& tol = {}) const;

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> kraus_;
};

struct Superoperator {
  std::size_t dim;
  /// d^2 x d^2, column-major vectorization.
  ComplexMatrix matrix;
};

inline constexpr std::size_t kDefaultSuperopCap = 8;

/// sum_a K_a X K_a^dagger.
ComplexMatrix apply_channel(const KrausChannel& t, const ComplexMatrix& x);

/// sum_j P_j X P_j.
ComplexMatrix dephase(const Mori& b, const ComplexMatrix& x);

/// X - dephase(b, X).
ComplexMatrix q_project(const Mori& b, const ComplexMatrix& x);

/// Column-major vectorization.
ComplexVector vec(const ComplexMatrix& x);
ComplexMatrix unvec(const ComplexVector& v, std::size_t dim);

/// Throws CapacityError when dim > cap.
Superoperator superop_matrix(const KrausChannel& t,
                             std::size_t cap = kDefaultSuperopCap);
Superoperator superop_matrix(const Mori& b, std::size_t cap = kDefaultSuperopCap);

/// [T, D_B] = 0 within tol.structural (Frobenius norm of the commutator of
/// the two superoperator matrices).
bool is_incoherent(const KrausChannel& t, const Mori& b, const Tolerance& tol = {},
                   std::size_t cap = kDefaultSuperopCap);

/// Weaker variant D_B T D_B = T D_B: T maps the MASA into itself. Agrees
/// with is_incoherent for normal maps.
bool maps_masa_into_itself(const KrausChannel& t, const Mori& b,
                           const Tolerance& tol = {},
                           std::size_t cap = kDefaultSuperopCap);

}  // namespace cgplab

#endif  // CGPLAB_CHANNEL_HPP_
