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

// Coherence generating power (CGP): the mean B-coherence a map produces
// from uniformly random B-incoherent states.
//
// Three routes are provided and kept independent of each other:
//   * cgp_unital / cgp_unitary: closed forms,
//       C_B(T) = N_d sum_j ||Q_B T(P_j)||^2,
//       C_B(U) = N_d (d - sum_ij |<i|U|j>|^4),   N_d = 1 / (d (d + 1));
//   * cgp_from_distance: (N_d / 2) D^2(A_B, U(A_B)) with D the MASA distance;
//   * estimate_cgp: Monte Carlo over the incoherent simplex.

#ifndef CGPLAB_CGP_HPP_
#define CGPLAB_CGP_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cgplab/channel.hpp"
#include "cgplab/linalg.hpp"
#include "cgplab/mori.hpp"
#include "cgplab/random.hpp"

namespace cgplab {

/// Non-fatal findings (e.g. a non-unital channel) collected during a call.
struct Diagnostics {
  std::vector<std::string> warnings;
};

struct CgpEstimate {
  double mean = 0.0;
  /// Standard error of the mean.
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
};

/// 1 / (d (d + 1)).
double cgp_normalization(std::size_t d);

/// Closed form for a unital Kraus channel. A non-unital channel still gets a
/// value; a warning is appended to `diag` if given.
double cgp_unital(const KrausChannel& t, const Mori& b, const Tolerance& tol = {},
                  Diagnostics* diag = nullptr);

/// N_d (d - sum_ij |<i|U|j>|^4) in the frame of b. Throws NotUnitaryError.
double cgp_unitary(const ComplexMatrix& u, const Mori& b, const Tolerance& tol = {});

/// (N_d / 2) masa_distance(b, U b)^2.
double cgp_from_distance(const ComplexMatrix& u, const Mori& b,
                         const Tolerance& tol = {});

/// Sample mean and standard error of c_B(T(rho)) over n uniform incoherent
/// states. Samples are split into `workers` contiguous blocks; block w draws
/// from make_stream(seed, w) and blocks are merged in order, so the result
/// is a pure function of (channel, b, n, seed, workers). Requires n >= 2.
CgpEstimate estimate_cgp(const KrausChannel& t, const Mori& b, std::size_t n,
                         std::uint64_t seed, std::size_t workers = 1);
CgpEstimate estimate_cgp(const ComplexMatrix& u, const Mori& b, std::size_t n,
                         std::uint64_t seed, std::size_t workers = 1,
                         const Tolerance& tol = {});

}  // namespace cgplab

#endif  // CGPLAB_CGP_HPP_
