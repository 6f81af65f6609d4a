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

// Random inputs and brute-force oracles for tests. Nothing here calls into
// the library routine it is used to check.

#ifndef CGPLAB_TESTS_TEST_UTIL_HPP_
#define CGPLAB_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "cgplab/linalg.hpp"
#include "cgplab/mori.hpp"
#include "cgplab/random.hpp"

namespace cgplab::testing {

inline ComplexMatrix random_matrix(std::size_t d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
  const ComplexMatrix a = random_matrix(d, rng);
  return 0.5 * (a + a.adjoint());
}

/// Full-rank mixed state G G^dagger / tr(G G^dagger).
inline ComplexMatrix random_density(std::size_t d, Rng& rng) {
  const ComplexMatrix g = random_matrix(d, rng);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

inline ComplexMatrix random_pure_state(std::size_t d, Rng& rng) {
  const ComplexMatrix g = random_matrix(d, rng);
  ComplexVector v = g.col(0);
  v.normalize();
  return v * v.adjoint();
}

inline Mori random_mori(std::size_t d, Rng& rng) {
  return Mori(haar_unitary(d, rng));
}

inline ComplexMatrix permutation_matrix(const std::vector<int>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) p(perm[static_cast<std::size_t>(j)], j) = 1.0;
  return p;
}

inline std::vector<int> random_permutation(std::size_t d, Rng& rng) {
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline ComplexMatrix random_diagonal_phases(std::size_t d, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = std::polar(1.0, angle(rng));
  return m;
}

/// Diagonal phases times a permutation: an incoherent unitary for the
/// computational basis.
inline ComplexMatrix random_incoherent_unitary(std::size_t d, Rng& rng) {
  return random_diagonal_phases(d, rng) * permutation_matrix(random_permutation(d, rng));
}

/// Frame of `b` with columns permuted and multiplied by random phases.
inline Mori shuffle_frame(const Mori& b, Rng& rng) {
  return Mori::from_trusted_frame(b.frame() * random_incoherent_unitary(b.dim(), rng));
}

inline ComplexMatrix hadamard() {
  ComplexMatrix h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

// ---- oracles ---------------------------------------------------------------

/// sum_ij conj(a_ij) b_ij, by explicit loops.
inline Complex oracle_hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) sum += std::conj(a(i, j)) * b(i, j);
  }
  return sum;
}

/// sum_j P_j X P_j with explicit projector products.
inline ComplexMatrix oracle_dephase(const Mori& b, const ComplexMatrix& x) {
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
  for (std::size_t j = 0; j < b.dim(); ++j) {
    const ComplexVector v = b.vector(j);
    const ComplexMatrix p = v * v.adjoint();
    out += p * x * p;
  }
  return out;
}

/// Superoperator of `map`, one column per matrix unit E_lm in column-major
/// order.
template <typename Map>
ComplexMatrix oracle_superop(std::size_t d, Map&& map) {
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix m(n * n, n * n);
  for (Eigen::Index col = 0; col < n; ++col) {
    for (Eigen::Index row = 0; row < n; ++row) {
      ComplexMatrix e = ComplexMatrix::Zero(n, n);
      e(row, col) = 1.0;
      const ComplexMatrix image = map(e);
      m.col(col * n + row) = Eigen::Map<const ComplexVector>(image.data(), n * n);
    }
  }
  return m;
}

/// sum_ij |<i|U|j>|^4 by explicit inner products.
inline double oracle_fourth_power_sum(const ComplexMatrix& u, const Mori& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const Complex amp = b.vector(i).dot(u * b.vector(j));
      sum += std::pow(std::norm(amp), 2);
    }
  }
  return sum;
}

/// Naive sqrt(2 (d - ||O||^2)).
inline double oracle_naive_distance(const Mori& a, const Mori& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      sum += std::pow(std::norm(a.vector(i).dot(b.vector(j))), 2);
    }
  }
  return std::sqrt(std::max(0.0, 2.0 * (static_cast<double>(a.dim()) - sum)));
}

/// Leibniz-formula determinant, for small real matrices.
inline double oracle_det(const RealMatrix& m) {
  const auto n = static_cast<int>(m.rows());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  double det = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    double term = inversions % 2 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) term *= m(i, perm[static_cast<std::size_t>(i)]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace cgplab::testing

#endif  // CGPLAB_TESTS_TEST_UTIL_HPP_
