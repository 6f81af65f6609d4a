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

#include "cgplab/random.hpp"

#include <cmath>
#include <numbers>

#include "cgplab/errors.hpp"

namespace cgplab {

Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream & 0xffffffffu),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

ComplexMatrix haar_unitary(std::size_t d, Rng& rng) {
  if (d == 0) throw ShapeError("haar_unitary: dimension must be positive");
  const auto n = static_cast<Eigen::Index>(d);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix z(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

ComplexMatrix haar_unitary(std::size_t d, std::uint64_t seed) {
  Rng rng = make_stream(seed, 0);
  return haar_unitary(d, rng);
}

ComplexMatrix fourier_unitary(std::size_t d) {
  if (d == 0) throw ShapeError("fourier_unitary: dimension must be positive");
  const auto n = static_cast<Eigen::Index>(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix f(n, n);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      // Reduce jk mod d first so the angle stays in [0, 2 pi).
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>((j * k) % d) /
          static_cast<double>(d);
      f(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          scale * Complex(std::cos(angle), std::sin(angle));
    }
  }
  return f;
}

std::vector<double> sample_simplex(std::size_t d, Rng& rng) {
  if (d == 0) throw ShapeError("sample_simplex: dimension must be positive");
  std::exponential_distribution<double> exponential(1.0);
  std::vector<double> p(d);
  double total = 0.0;
  while (!(total > 0.0)) {
    total = 0.0;
    for (auto& x : p) {
      x = exponential(rng);
      total += x;
    }
  }
  for (auto& x : p) x /= total;
  return p;
}

ComplexMatrix sample_incoherent_state(const Mori& b, Rng& rng) {
  const std::vector<double> p = sample_simplex(b.dim(), rng);
  const RealVector weights = Eigen::Map<const RealVector>(p.data(), p.size());
  const ComplexMatrix& f = b.frame();
  return f * weights.cast<Complex>().asDiagonal() * f.adjoint();
}

}  // namespace cgplab
