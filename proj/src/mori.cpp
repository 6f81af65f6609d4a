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

#include "cgplab/mori.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "cgplab/errors.hpp"

namespace cgplab {

Mori::Mori(ComplexMatrix frame, const Tolerance& tol) : frame_(std::move(frame)) {
  require_square(frame_, "Mori");
  require_finite(frame_, "Mori");
  if (!validate_unitary(frame_, tol)) {
    throw NotUnitaryError("Mori: frame is not unitary within tolerance");
  }
}

Mori Mori::from_trusted_frame(ComplexMatrix frame) {
  Mori m;
  m.frame_ = std::move(frame);
  return m;
}

ComplexVector Mori::vector(std::size_t i) const {
  return frame_.col(static_cast<Eigen::Index>(i));
}

ComplexMatrix Mori::projector(std::size_t i) const {
  const auto v = frame_.col(static_cast<Eigen::Index>(i));
  return v * v.adjoint();
}

std::vector<ComplexMatrix> Mori::projectors() const {
  std::vector<ComplexMatrix> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(projector(i));
  return out;
}

Mori mori_from_frame(const ComplexMatrix& u, const Tolerance& tol) {
  return Mori(u, tol);
}

Mori computational_mori(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return Mori::from_trusted_frame(ComplexMatrix::Identity(n, n));
}

Mori mori_from_hermitian(const ComplexMatrix& h, double gap_tol,
                         const Tolerance& tol) {
  require_square(h, "mori_from_hermitian");
  require_finite(h, "mori_from_hermitian");
  if (!is_hermitian(h, tol.structural)) {
    throw NotHermitianError("mori_from_hermitian: matrix is not Hermitian");
  }
  const ComplexMatrix herm = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(herm);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("mori_from_hermitian: eigensolver did not converge");
  }
  const RealVector& evals = eig.eigenvalues();
  for (Eigen::Index i = 1; i < evals.size(); ++i) {
    const double gap = evals(i) - evals(i - 1);
    if (gap <= gap_tol) {
      std::ostringstream msg;
      msg << "mori_from_hermitian: eigenvalue gap " << gap << " between levels "
          << i - 1 << " and " << i << " is not above " << gap_tol;
      throw DegeneracyError(msg.str());
    }
  }
  return Mori::from_trusted_frame(eig.eigenvectors());
}

namespace {

// Descending lexicographic order on (re, im) sequences, so the computational
// basis maps to the identity. Entries closer than `eps` compare equal.
bool column_before(const ComplexMatrix& f, Eigen::Index a, Eigen::Index b,
                 double eps) {
  for (Eigen::Index r = 0; r < f.rows(); ++r) {
    const Complex x = f(r, a);
    const Complex y = f(r, b);
    if (std::abs(x.real() - y.real()) > eps) return x.real() > y.real();
    if (std::abs(x.imag() - y.imag()) > eps) return x.imag() > y.imag();
  }
  return false;
}

}  // namespace

Mori canonical_form(const Mori& b, const Tolerance& tol) {
  ComplexMatrix f = b.frame();
  for (Eigen::Index c = 0; c < f.cols(); ++c) {
    for (Eigen::Index r = 0; r < f.rows(); ++r) {
      const Complex z = f(r, c);
      const double mag = std::abs(z);
      if (mag > tol.structural) {
        if (!(z.imag() == 0.0 && z.real() > 0.0)) {
          f.col(c) *= std::conj(z) / mag;
          f(r, c) = Complex(mag, 0.0);
        }
        break;
      }
    }
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(f.cols()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index c) {
    return column_before(f, a, c, tol.structural);
  });
  ComplexMatrix sorted(f.rows(), f.cols());
  for (std::size_t k = 0; k < order.size(); ++k) {
    sorted.col(static_cast<Eigen::Index>(k)) = f.col(order[k]);
  }
  return Mori::from_trusted_frame(std::move(sorted));
}

bool equal_as_masa(const Mori& b, const Mori& b_tilde, double tol) {
  if (b.dim() != b_tilde.dim()) {
    throw ShapeError("equal_as_masa: dimension mismatch");
  }
  const RealMatrix overlap =
      (b.frame().adjoint() * b_tilde.frame()).cwiseAbs2();
  std::vector<bool> used(b.dim(), false);
  for (Eigen::Index i = 0; i < overlap.rows(); ++i) {
    Eigen::Index best = -1;
    double best_value = -1.0;
    for (Eigen::Index j = 0; j < overlap.cols(); ++j) {
      if (!used[static_cast<std::size_t>(j)] && overlap(i, j) > best_value) {
        best_value = overlap(i, j);
        best = j;
      }
    }
    if (best < 0 || best_value < 1.0 - tol) return false;
    used[static_cast<std::size_t>(best)] = true;
  }
  return true;
}

Mori product_mori(const Mori& b1, const Mori& b2) {
  return Mori::from_trusted_frame(kron(b1.frame(), b2.frame()));
}

Mori rotate_mori(const ComplexMatrix& u, const Mori& b, const Tolerance& tol) {
  require_square(u, "rotate_mori");
  if (static_cast<std::size_t>(u.rows()) != b.dim()) {
    throw ShapeError("rotate_mori: unitary and Mori dimensions differ");
  }
  if (!validate_unitary(u, tol)) {
    throw NotUnitaryError("rotate_mori: matrix is not unitary within tolerance");
  }
  return Mori::from_trusted_frame(u * b.frame());
}

}  // namespace cgplab
