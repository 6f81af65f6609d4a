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

#include "cgplab/cgp.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "cgplab/coherence.hpp"
#include "cgplab/errors.hpp"
#include "cgplab/grassmann.hpp"

namespace cgplab {

namespace {

void require_unitary_on(const ComplexMatrix& u, const Mori& b, const Tolerance& tol,
                        const char* what) {
  require_square(u, what);
  if (static_cast<std::size_t>(u.rows()) != b.dim()) {
    throw ShapeError(std::string(what) + ": unitary and Mori dimensions differ");
  }
  if (!validate_unitary(u, tol)) {
    throw NotUnitaryError(std::string(what) + ": matrix is not unitary within tolerance");
  }
}

// Running mean / sum of squared deviations (Welford), mergeable in a fixed
// order.
struct Moments {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    count += 1.0;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0.0) return;
    if (count == 0.0) {
      *this = o;
      return;
    }
    const double total = count + o.count;
    const double delta = o.mean - mean;
    mean += delta * o.count / total;
    m2 += o.m2 + delta * delta * count * o.count / total;
    count = total;
  }
};

// Off-diagonal weight of sum_a K_a diag(p) K_a^dagger, with the K_a already
// expressed in the frame of B. This is ||Q_B(T(rho))||^2 for
// rho = sum_j p_j P_j: Q_B keeps exactly the off-diagonal part in B's frame
// and the Hilbert-Schmidt norm is basis independent.
double coherence_in_frame(const std::vector<ComplexMatrix>& kraus_in_frame,
                          const RealVector& p, ComplexMatrix& scratch) {
  scratch.setZero();
  for (const auto& k : kraus_in_frame) {
    scratch.noalias() += k * p.cast<Complex>().asDiagonal() * k.adjoint();
  }
  double sum = 0.0;
  for (Eigen::Index j = 0; j < scratch.cols(); ++j) {
    for (Eigen::Index i = 0; i < scratch.rows(); ++i) {
      if (i != j) sum += std::norm(scratch(i, j));
    }
  }
  return sum;
}

}  // namespace

double cgp_normalization(std::size_t d) {
  const auto dd = static_cast<double>(d);
  return 1.0 / (dd * (dd + 1.0));
}

double cgp_unital(const KrausChannel& t, const Mori& b, const Tolerance& tol,
                  Diagnostics* diag) {
  if (t.dim() != b.dim()) throw ShapeError("cgp_unital: dimension mismatch");
  if (diag != nullptr && !t.is_unital(tol)) {
    diag->warnings.emplace_back(
        "channel is not unital; the closed form assumes unitality");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < b.dim(); ++j) {
    sum += coherence_raw(apply_channel(t, b.projector(j)), b);
  }
  return cgp_normalization(b.dim()) * sum;
}

double cgp_unitary(const ComplexMatrix& u, const Mori& b, const Tolerance& tol) {
  require_unitary_on(u, b, tol, "cgp_unitary");
  const ComplexMatrix& f = b.frame();
  const RealMatrix x = (f.adjoint() * u * f).cwiseAbs2();
  const double d = static_cast<double>(b.dim());
  return cgp_normalization(b.dim()) * (d - x.cwiseAbs2().sum());
}

double cgp_from_distance(const ComplexMatrix& u, const Mori& b, const Tolerance& tol) {
  require_unitary_on(u, b, tol, "cgp_from_distance");
  const double dist = masa_distance(b, rotate_mori(u, b, tol));
  return 0.5 * cgp_normalization(b.dim()) * dist * dist;
}

CgpEstimate estimate_cgp(const KrausChannel& t, const Mori& b, std::size_t n,
                         std::uint64_t seed, std::size_t workers) {
  if (t.dim() != b.dim()) throw ShapeError("estimate_cgp: dimension mismatch");
  if (n < 2) throw InputError("samples", "estimate_cgp: need at least 2 samples");
  workers = std::clamp<std::size_t>(workers, 1, n);

  const ComplexMatrix& f = b.frame();
  std::vector<ComplexMatrix> kraus_in_frame;
  kraus_in_frame.reserve(t.kraus().size());
  for (const auto& k : t.kraus()) kraus_in_frame.push_back(f.adjoint() * k * f);

  const std::size_t d = b.dim();
  std::vector<Moments> lanes(workers);
  auto run_lane = [&](std::size_t w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    Rng rng = make_stream(seed, w);
    const auto di = static_cast<Eigen::Index>(d);
    ComplexMatrix scratch(di, di);
    RealVector p(di);
    Moments acc;
    for (std::size_t s = begin; s < end; ++s) {
      const std::vector<double> draw = sample_simplex(d, rng);
      for (std::size_t i = 0; i < d; ++i) p(static_cast<Eigen::Index>(i)) = draw[i];
      acc.push(coherence_in_frame(kraus_in_frame, p, scratch));
    }
    lanes[w] = acc;
  };

  if (workers == 1) {
    run_lane(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run_lane, w);
  }

  Moments total;
  for (const auto& lane : lanes) total.merge(lane);

  CgpEstimate out;
  out.mean = total.mean;
  out.samples = n;
  out.seed = seed;
  out.workers = workers;
  const double variance = std::max(0.0, total.m2 / (total.count - 1.0));
  out.std_error = std::sqrt(variance / total.count);
  return out;
}

CgpEstimate estimate_cgp(const ComplexMatrix& u, const Mori& b, std::size_t n,
                         std::uint64_t seed, std::size_t workers,
                         const Tolerance& tol) {
  require_unitary_on(u, b, tol, "estimate_cgp");
  return estimate_cgp(KrausChannel::unitary(u), b, n, seed, workers);
}

}  // namespace cgplab
