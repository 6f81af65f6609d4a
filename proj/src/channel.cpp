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

#include "cgplab/channel.hpp"

#include <string>
#include <utility>

#include "cgplab/errors.hpp"

namespace cgplab {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus)
    : dim_(0), kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw ShapeError("KrausChannel: empty Kraus list");
  require_square(kraus_.front(), "KrausChannel");
  dim_ = static_cast<std::size_t>(kraus_.front().rows());
  for (const auto& k : kraus_) {
    require_same_shape(kraus_.front(), k, "KrausChannel");
    require_finite(k, "KrausChannel");
  }
}

KrausChannel KrausChannel::unitary(const ComplexMatrix& u) {
  return KrausChannel({u});
}

KrausChannel KrausChannel::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return KrausChannel({ComplexMatrix::Identity(n, n)});
}

KrausChannel KrausChannel::dephasing(const Mori& b) {
  return KrausChannel(b.projectors());
}

bool KrausChannel::is_unital(const Tolerance& tol) const {
  const auto n = static_cast<Eigen::Index>(dim_);
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& k : kraus_) sum += k * k.adjoint();
  return max_abs_diff(sum, ComplexMatrix::Identity(n, n)) <= tol.structural;
}

bool KrausChannel::is_trace_preserving(const Tolerance& tol) const {
  const auto n = static_cast<Eigen::Index>(dim_);
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  return max_abs_diff(sum, ComplexMatrix::Identity(n, n)) <= tol.structural;
}

namespace {

void require_dim(const ComplexMatrix& x, std::size_t dim, const char* what) {
  const auto n = static_cast<Eigen::Index>(dim);
  if (x.rows() != n || x.cols() != n) {
    throw ShapeError(std::string(what) + ": expected " + std::to_string(dim) + "x" +
                     std::to_string(dim) + " operand, got " +
                     std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
}

void require_cap(std::size_t dim, std::size_t cap) {
  if (dim > cap) {
    throw CapacityError("superoperator: dimension " + std::to_string(dim) +
                        " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

ComplexMatrix apply_channel(const KrausChannel& t, const ComplexMatrix& x) {
  require_dim(x, t.dim(), "apply_channel");
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
  for (const auto& k : t.kraus()) out.noalias() += k * x * k.adjoint();
  return out;
}

ComplexMatrix dephase(const Mori& b, const ComplexMatrix& x) {
  require_dim(x, b.dim(), "dephase");
  // sum_j |j><j|X|j><j| = F diag(<j|X|j>) F^dagger.
  const ComplexMatrix& f = b.frame();
  const ComplexVector diag = (f.adjoint() * x * f).diagonal();
  return f * diag.asDiagonal() * f.adjoint();
}

ComplexMatrix q_project(const Mori& b, const ComplexMatrix& x) {
  return x - dephase(b, x);
}

ComplexVector vec(const ComplexMatrix& x) {
  return Eigen::Map<const ComplexVector>(x.data(), x.size());
}

ComplexMatrix unvec(const ComplexVector& v, std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  if (v.size() != n * n) throw ShapeError("unvec: length is not dim^2");
  return Eigen::Map<const ComplexMatrix>(v.data(), n, n);
}

Superoperator superop_matrix(const KrausChannel& t, std::size_t cap) {
  require_cap(t.dim(), cap);
  const auto n2 = static_cast<Eigen::Index>(t.dim() * t.dim());
  ComplexMatrix m = ComplexMatrix::Zero(n2, n2);
  for (const auto& k : t.kraus()) m += kron(k.conjugate(), k);
  return {t.dim(), std::move(m)};
}

Superoperator superop_matrix(const Mori& b, std::size_t cap) {
  return superop_matrix(KrausChannel::dephasing(b), cap);
}

bool is_incoherent(const KrausChannel& t, const Mori& b, const Tolerance& tol,
                   std::size_t cap) {
  if (t.dim() != b.dim()) throw ShapeError("is_incoherent: dimension mismatch");
  const ComplexMatrix mt = superop_matrix(t, cap).matrix;
  const ComplexMatrix md = superop_matrix(b, cap).matrix;
  return (mt * md - md * mt).norm() <= tol.structural;
}

bool maps_masa_into_itself(const KrausChannel& t, const Mori& b,
                           const Tolerance& tol, std::size_t cap) {
  if (t.dim() != b.dim()) {
    throw ShapeError("maps_masa_into_itself: dimension mismatch");
  }
  const ComplexMatrix mt = superop_matrix(t, cap).matrix;
  const ComplexMatrix md = superop_matrix(b, cap).matrix;
  return (md * mt * md - mt * md).norm() <= tol.structural;
}

}  // namespace cgplab
