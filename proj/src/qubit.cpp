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

#include "cgplab/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cgplab/errors.hpp"

namespace cgplab {

BlochVector::BlochVector(double x, double y, double z, const Tolerance& tol)
    : n_{x, y, z} {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
    throw InputError("not_unit", "BlochVector: non-finite component");
  }
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (std::abs(norm - 1.0) > tol.structural) {
    throw InputError("not_unit", "BlochVector: vector is not of unit length");
  }
}

double BlochVector::dot(const BlochVector& o) const {
  return n_[0] * o.n_[0] + n_[1] * o.n_[1] + n_[2] * o.n_[2];
}

std::array<double, 3> BlochVector::cross(const BlochVector& o) const {
  return {n_[1] * o.n_[2] - n_[2] * o.n_[1], n_[2] * o.n_[0] - n_[0] * o.n_[2],
          n_[0] * o.n_[1] - n_[1] * o.n_[0]};
}

ComplexMatrix BlochVector::dot_sigma() const {
  return n_[0] * pauli::x() + n_[1] * pauli::y() + n_[2] * pauli::z();
}

namespace {

void fix_phase(Eigen::Ref<ComplexVector> v) {
  Eigen::Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  const Complex z = v(k);
  v *= std::conj(z) / std::abs(z);
  v(k) = Complex(std::abs(z), 0.0);
}

}  // namespace

Mori mori_from_bloch(const BlochVector& n) {
  // +1 eigenvector of n.sigma: (1 + n_z, n_x + i n_y) or, away from the
  // south pole, the equivalent (n_x - i n_y, 1 - n_z).
  ComplexVector plus(2);
  if (n.z() >= 0.0) {
    plus << Complex(1.0 + n.z(), 0.0), Complex(n.x(), n.y());
  } else {
    plus << Complex(n.x(), -n.y()), Complex(1.0 - n.z(), 0.0);
  }
  plus.normalize();
  ComplexVector minus(2);
  minus << -std::conj(plus(1)), std::conj(plus(0));
  fix_phase(plus);
  fix_phase(minus);
  ComplexMatrix frame(2, 2);
  frame.col(0) = plus;
  frame.col(1) = minus;
  return Mori::from_trusted_frame(std::move(frame));
}

double bloch_angle(const BlochVector& n, const BlochVector& m) {
  return std::acos(std::clamp(n.dot(m), -1.0, 1.0));
}

double qubit_distance(const BlochVector& n, const BlochVector& m) {
  return std::sqrt(2.0) * std::abs(std::sin(bloch_angle(n, m)));
}

double qubit_cgp(double theta) {
  const double s = std::sin(theta);
  return s * s / 6.0;
}

double qubit_dfs(double psi) {
  if (!(psi >= 0.0 && psi <= std::numbers::pi)) {
    throw InputError("range", "qubit_dfs: psi must lie in [0, pi]");
  }
  return std::min(psi, std::numbers::pi - psi);
}

ComplexMatrix qubit_unitary(double theta, double phi) {
  const Complex a(std::cos(theta / 2.0), 0.0);
  const Complex b = std::polar(std::sin(theta / 2.0), phi);
  ComplexMatrix u(2, 2);
  u << a, -std::conj(b), b, std::conj(a);
  return u;
}

}  // namespace cgplab
