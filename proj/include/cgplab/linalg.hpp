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

// Dense complex linear algebra shared by every other module.

#ifndef CGPLAB_LINALG_HPP_
#define CGPLAB_LINALG_HPP_

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace cgplab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Numerical thresholds. `structural` is used for unitarity/hermiticity
/// checks, `equality` for comparing computed values.
struct Tolerance {
  double structural = 1e-10;
  double equality = 1e-12;

  /// Throws InputError unless 0 < equality <= structural.
  void validate() const;
};

/// Throws ShapeError if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& a, const char* what);
void require_square(const ComplexMatrix& a, const char* what);
void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* what);

/// Hilbert-Schmidt inner product tr(A^dagger B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// sqrt(tr(A^dagger A)).
double hs_norm(const ComplexMatrix& a);

/// AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |(U^dagger U - I)_ij| <= tol.structural. Non-square input is not
/// unitary.
bool validate_unitary(const ComplexMatrix& u, const Tolerance& tol = {});

/// Hermitian, positive semidefinite and unit trace, each within
/// tol.structural.
bool validate_density(const ComplexMatrix& rho, const Tolerance& tol = {});

/// max_ij |A_ij - conj(A_ji)| <= tol.
bool is_hermitian(const ComplexMatrix& a, double tol);

/// Singular values in descending order, length min(rows, cols).
std::vector<double> singular_values(const ComplexMatrix& a);
std::vector<double> singular_values(const RealMatrix& a);

/// Largest absolute entry of A - B.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace cgplab

#endif  // CGPLAB_LINALG_HPP_
