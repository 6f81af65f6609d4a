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

// Closed forms for d = 2, where a MASA is a Bloch axis n ~ -n with
// projectors (I +- n.sigma) / 2. Used as analytic references for the
// general-dimension code.

#ifndef CGPLAB_QUBIT_HPP_
#define CGPLAB_QUBIT_HPP_

#include <array>

#include "cgplab/linalg.hpp"
#include "cgplab/mori.hpp"

namespace cgplab {

class BlochVector {
 public:
  /// Throws InputError unless |n| = 1 within tol.structural.
  BlochVector(double x, double y, double z, const Tolerance& tol = {});

  double x() const { return n_[0]; }
  double y() const { return n_[1]; }
  double z() const { return n_[2]; }
  double dot(const BlochVector& o) const;
  std::array<double, 3> cross(const BlochVector& o) const;
  /// n . sigma.
  ComplexMatrix dot_sigma() const;

 private:
  std::array<double, 3> n_;
};

/// Eigenframe of n.sigma, +1 eigenvector first; in each column the entry of
/// largest modulus is real positive.
Mori mori_from_bloch(const BlochVector& n);

/// Angle psi = arccos(n . m) in [0, pi].
double bloch_angle(const BlochVector& n, const BlochVector& m);

/// sqrt(2) |sin psi|.
double qubit_distance(const BlochVector& n, const BlochVector& m);

/// sin^2(theta) / 6.
double qubit_cgp(double theta);

/// min(psi, pi - psi). Throws InputError outside [0, pi].
double qubit_dfs(double psi);

/// a|0><0| + a*|1><1| - b*|0><1| + b|1><0| with a = cos(theta/2),
/// b = e^{i phi} sin(theta/2). Maps the z axis to
/// (sin theta cos phi, sin theta sin phi, cos theta).
ComplexMatrix qubit_unitary(double theta, double phi);

}  // namespace cgplab

#endif  // CGPLAB_QUBIT_HPP_
