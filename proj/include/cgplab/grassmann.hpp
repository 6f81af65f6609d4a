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

// Metric geometry on the set of maximally abelian subalgebras.
//
// The MASA distance D(A_B, A_B~) = ||D_B - D_B~||_HS is available three ways
// (overlap matrix, superoperators, commutators). The overlap matrix
// O_ij = |<i|j~>|^2 is doubly stochastic; |det O| is the modulus of the
// inner product of the Pluecker images of the two MASAs, and arccos of it
// gives the Fubini-Study distance D_FS.

#ifndef CGPLAB_GRASSMANN_HPP_
#define CGPLAB_GRASSMANN_HPP_

#include <cstddef>

#include "cgplab/channel.hpp"
#include "cgplab/linalg.hpp"
#include "cgplab/mori.hpp"

namespace cgplab {

/// Non-negative d x d matrix of squared frame overlaps.
class OverlapMatrix {
 public:
  /// Throws InputError unless entries lie in [0, 1] and every row and column
  /// sums to 1, within tol.structural.
  explicit OverlapMatrix(RealMatrix entries, const Tolerance& tol = {});

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const RealMatrix& entries() const { return entries_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  /// ||O||_2^2, in [1, d].
  double squared_norm() const { return entries_.squaredNorm(); }

 private:
  RealMatrix entries_;
};

/// O_ij = |<i|j~>|^2.
OverlapMatrix overlap_matrix(const Mori& b, const Mori& b_tilde);

/// X_ij = |<i|U|j>|^2, i.e. overlap_matrix(b, rotate_mori(u, b)).
OverlapMatrix x_matrix(const ComplexMatrix& u, const Mori& b, const Tolerance& tol = {});

/// sqrt(2 (d - ||O||_2^2)).
double masa_distance(const Mori& b, const Mori& b_tilde);

/// Frobenius norm of the difference of the two dephasing superoperators.
/// Throws CapacityError above `cap`.
double masa_distance_superop(const Mori& b, const Mori& b_tilde,
                             std::size_t cap = kDefaultSuperopCap);

/// sqrt(sum_ij ||[P_i, P~_j]||_2^2).
double masa_distance_commutator(const Mori& b, const Mori& b_tilde);

/// Product of the singular values of O, accumulated in log space. Singular
/// values at or below the numerical-rank threshold d * eps * s_max count as
/// exact zeros.
double abs_det_overlap(const OverlapMatrix& o);

/// sum_i ln s_i over the singular values of O; -infinity when O is
/// numerically singular.
double log_abs_det_overlap(const OverlapMatrix& o);

/// arccos(|det O|), in [0, pi/2]. Throws NumericalError if |det O| exceeds 1
/// by more than 1e-8.
double dfs_distance(const Mori& b, const Mori& b_tilde);

/// dfs_distance(b, U b).
double cgp_tilde(const ComplexMatrix& u, const Mori& b, const Tolerance& tol = {});

/// -(1/d) ln |det X_B(U)|; +infinity when X_B(U) is singular.
double phi_measure(const ComplexMatrix& u, const Mori& b, const Tolerance& tol = {});

}  // namespace cgplab

#endif  // CGPLAB_GRASSMANN_HPP_
