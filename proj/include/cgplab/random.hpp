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

// Random and structured test objects: seeded RNG streams, Haar unitaries,
// Fourier unitaries and uniform samples from the incoherent simplex.

#ifndef CGPLAB_RANDOM_HPP_
#define CGPLAB_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "cgplab/linalg.hpp"
#include "cgplab/mori.hpp"

namespace cgplab {

using Rng = std::mt19937_64;

/// Independent stream `stream` of `seed`. The engine is seeded with
/// std::seed_seq{seed_lo, seed_hi, stream_lo, stream_hi} (32-bit halves),
/// so stream_i = f(seed, i) is fixed by the standard.
Rng make_stream(std::uint64_t seed, std::uint64_t stream);

/// Haar-distributed U(d): QR of a standard complex Gaussian matrix with the
/// phases of diag(R) moved into Q.
ComplexMatrix haar_unitary(std::size_t d, Rng& rng);
ComplexMatrix haar_unitary(std::size_t d, std::uint64_t seed);

/// F_jk = exp(2 pi i jk / d) / sqrt(d).
ComplexMatrix fourier_unitary(std::size_t d);

/// Uniform (flat Dirichlet) point of the (d-1)-simplex, built from
/// normalized unit-rate exponential draws.
std::vector<double> sample_simplex(std::size_t d, Rng& rng);

/// sum_j p_j P_j with p uniform on the simplex.
ComplexMatrix sample_incoherent_state(const Mori& b, Rng& rng);

}  // namespace cgplab

#endif  // CGPLAB_RANDOM_HPP_
