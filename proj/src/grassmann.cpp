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

#include "cgplab/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

#include "cgplab/errors.hpp"

namespace cgplab {

OverlapMatrix::OverlapMatrix(RealMatrix entries, const Tolerance& tol)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw ShapeError("OverlapMatrix: expected a non-empty square matrix");
  }
  if (!entries_.allFinite()) {
    throw ShapeError("OverlapMatrix: non-finite entries");
  }
  const double lo = entries_.minCoeff();
  const double hi = entries_.maxCoeff();
  if (lo < -tol.structural || hi > 1.0 + tol.structural) {
    throw InputError("not_stochastic", "OverlapMatrix: entries outside [0, 1]");
  }
  const double row_dev = (entries_.rowwise().sum().array() - 1.0).abs().maxCoeff();
  const double col_dev = (entries_.colwise().sum().array() - 1.0).abs().maxCoeff();
  if (row_dev > tol.structural || col_dev > tol.structural) {
    throw InputError("not_stochastic", "OverlapMatrix: not doubly stochastic");
  }
}

namespace {

void require_same_dim(const Mori& a, const Mori& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw ShapeError(std::string(what) + ": Mori dimensions differ");
  }
}

}  // namespace

OverlapMatrix overlap_matrix(const Mori& b, const Mori& b_tilde) {
  require_same_dim(b, b_tilde, "overlap_matrix");
  return OverlapMatrix((b.frame().adjoint() * b_tilde.frame()).cwiseAbs2());
}

OverlapMatrix x_matrix(const ComplexMatrix& u, const Mori& b, const Tolerance& tol) {
  return overlap_matrix(b, rotate_mori(u, b, tol));
}

double masa_distance(const Mori& b, const Mori& b_tilde) {
  const RealMatrix o = overlap_matrix(b, b_tilde).entries();
  // d - ||O||^2 = sum_i (1 - sum_j O_ij^2) and, because each row is a
  // probability vector, 1 - sum_j p_j^2 = sum_j p_j sum_{k != j} p_k. The
  // right-hand side has no cancellation when the MASAs nearly coincide.
  double sum = 0.0;
  for (Eigen::Index i = 0; i < o.rows(); ++i) {
    for (Eigen::Index j = 0; j < o.cols(); ++j) {
      double others = 0.0;
      for (Eigen::Index k = 0; k < o.cols(); ++k) {
        if (k != j) others += o(i, k);
      }
      sum += o(i, j) * others;
    }
  }
  return std::sqrt(2.0 * std::max(0.0, sum));
}

double masa_distance_superop(const Mori& b, const Mori& b_tilde, std::size_t cap) {
  require_same_dim(b, b_tilde, "masa_distance_superop");
  return (superop_matrix(b, cap).matrix - superop_matrix(b_tilde, cap).matrix).norm();
}

double masa_distance_commutator(const Mori& b, const Mori& b_tilde) {
  require_same_dim(b, b_tilde, "masa_distance_commutator");
  const auto p = b.projectors();
  const auto q = b_tilde.projectors();
  double sum = 0.0;
  for (const auto& pi : p) {
    for (const auto& qj : q) sum += commutator(pi, qj).squaredNorm();
  }
  return std::sqrt(sum);
}

double log_abs_det_overlap(const OverlapMatrix& o) {
  const std::vector<double> s = singular_values(o.entries());
  const double threshold = static_cast<double>(s.size()) *
                           std::numeric_limits<double>::epsilon() * s.front();
  double log_sum = 0.0;
  for (double v : s) {
    if (v <= threshold) return -std::numeric_limits<double>::infinity();
    log_sum += std::log(v);
  }
  return log_sum;
}

double abs_det_overlap(const OverlapMatrix& o) {
  return std::exp(log_abs_det_overlap(o));
}

double dfs_distance(const Mori& b, const Mori& b_tilde) {
  const double det = abs_det_overlap(overlap_matrix(b, b_tilde));
  if (det > 1.0 + 1e-8) {
    std::ostringstream msg;
    msg << "dfs_distance: |det O| = " << det << " exceeds 1 beyond round-off";
    throw NumericalError(msg.str());
  }
  return std::acos(std::clamp(det, 0.0, 1.0));
}

double cgp_tilde(const ComplexMatrix& u, const Mori& b, const Tolerance& tol) {
  return dfs_distance(b, rotate_mori(u, b, tol));
}

double phi_measure(const ComplexMatrix& u, const Mori& b, const Tolerance& tol) {
  const OverlapMatrix x = x_matrix(u, b, tol);
  const double log_det = log_abs_det_overlap(x);
  if (std::isinf(log_det)) return std::numeric_limits<double>::infinity();
  // |det| <= 1 exactly; a slightly positive log is round-off.
  return std::max(0.0, -log_det / static_cast<double>(x.dim()));
}

}  // namespace cgplab
