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

#include "cgplab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "cgplab/errors.hpp"

namespace cgplab {

void Tolerance::validate() const {
  if (!(equality > 0.0) || !(structural > 0.0)) {
    throw InputError("tolerance", "tolerances must be strictly positive");
  }
  if (structural < equality) {
    throw InputError("tolerance",
                     "structural tolerance must not be below equality tolerance");
  }
}

void require_finite(const ComplexMatrix& a, const char* what) {
  if (!a.allFinite()) {
    throw ShapeError(std::string(what) + ": matrix has non-finite entries");
  }
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw ShapeError(std::string(what) + ": expected a non-empty square matrix, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shape mismatch " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "hs_inner");
  return a.conjugate().cwiseProduct(b).sum();
}

double hs_norm(const ComplexMatrix& a) { return a.norm(); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "commutator");
  require_same_shape(a, b, "commutator");
  return a * b - b * a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

bool validate_unitary(const ComplexMatrix& u, const Tolerance& tol) {
  if (u.rows() != u.cols() || u.rows() == 0 || !u.allFinite()) return false;
  const ComplexMatrix gram = u.adjoint() * u;
  const ComplexMatrix eye = ComplexMatrix::Identity(u.rows(), u.cols());
  return max_abs_diff(gram, eye) <= tol.structural;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs_diff(a, a.adjoint()) <= tol;
}

bool validate_density(const ComplexMatrix& rho, const Tolerance& tol) {
  if (rho.rows() != rho.cols() || rho.rows() == 0 || !rho.allFinite()) {
    return false;
  }
  if (!is_hermitian(rho, tol.structural)) return false;
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > tol.structural) return false;
  const ComplexMatrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(herm, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) return false;
  return eig.eigenvalues().minCoeff() >= -tol.structural;
}

namespace {

template <typename Matrix>
std::vector<double> descending_singular_values(const Matrix& a) {
  if (!a.allFinite()) {
    throw ShapeError("singular_values: matrix has non-finite entries");
  }
  Eigen::JacobiSVD<Matrix> svd(a);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("singular_values: decomposition did not converge");
  }
  const auto& s = svd.singularValues();
  std::vector<double> out(s.data(), s.data() + s.size());
  // JacobiSVD already sorts, but the contract is ours to keep.
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

std::vector<double> singular_values(const ComplexMatrix& a) {
  return descending_singular_values(a);
}

std::vector<double> singular_values(const RealMatrix& a) {
  return descending_singular_values(a);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

namespace pauli {

ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << Complex(0.0, 0.0), Complex(0.0, -1.0), Complex(0.0, 1.0), Complex(0.0, 0.0);
  return m;
}

ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace pauli

}  // namespace cgplab
