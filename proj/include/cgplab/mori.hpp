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

// Maximal orthogonal resolutions of the identity.
//
// A Mori is a set of d rank-one orthogonal projectors summing to the identity.
// It is stored as an orthonormal frame whose column i is the vector |i>; the
// frame is only defined up to a permutation of its columns and a phase per
// column, and every quantity computed from a Mori in this library is
// invariant under that freedom. Each Mori labels exactly one maximally
// abelian subalgebra (the operators diagonal in the frame).

#ifndef CGPLAB_MORI_HPP_
#define CGPLAB_MORI_HPP_

#include <cstddef>
#include <vector>

#include "cgplab/linalg.hpp"

namespace cgplab {

class Mori {
 public:
  /// Throws NotUnitaryError unless `frame` is unitary within tol.structural.
  explicit Mori(ComplexMatrix frame, const Tolerance& tol = {});

  std::size_t dim() const { return static_cast<std::size_t>(frame_.cols()); }
  const ComplexMatrix& frame() const { return frame_; }
  ComplexVector vector(std::size_t i) const;
  /// |i><i|.
  ComplexMatrix projector(std::size_t i) const;
  std::vector<ComplexMatrix> projectors() const;

  /// Frame built without the unitarity check. For internal callers that
  /// produce unitary frames by construction.
  static Mori from_trusted_frame(ComplexMatrix frame);

 private:
  Mori() = default;
  ComplexMatrix frame_;
};

/// Columns of U become the frame vectors.
Mori mori_from_frame(const ComplexMatrix& u, const Tolerance& tol = {});

/// d x d computational basis.
Mori computational_mori(std::size_t dim);

/// Eigenbasis of a Hermitian H, ordered by ascending eigenvalue. Throws
/// NotHermitianError, or DegeneracyError when any adjacent eigenvalue gap is
/// <= gap_tol.
Mori mori_from_hermitian(const ComplexMatrix& h, double gap_tol,
                         const Tolerance& tol = {});

/// Deterministic representative of the permutation/phase class: each
/// column is rotated so that its first entry with modulus > tol.structural
/// is real positive, then columns are sorted in descending lexicographic order
/// of their (re, im) sequences. Idempotent; the computational basis maps to
/// the identity.
Mori canonical_form(const Mori& b, const Tolerance& tol = {});

/// True iff some permutation s has |<i|s(i)~>|^2 >= 1 - tol for all i, i.e.
/// ||P_i - P~_s(i)||_2^2 <= 2 tol.
bool equal_as_masa(const Mori& b, const Mori& b_tilde, double tol = 1e-8);

/// Projectors P1_i (x) P2_j, flattened row-major in (i, j).
Mori product_mori(const Mori& b1, const Mori& b2);

/// Frame U * F(b). Throws NotUnitaryError or ShapeError.
Mori rotate_mori(const ComplexMatrix& u, const Mori& b, const Tolerance& tol = {});

}  // namespace cgplab

#endif  // CGPLAB_MORI_HPP_
