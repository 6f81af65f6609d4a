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

// Differential metric on MASAs along a Hamiltonian path t -> H(t).
//
// With |i(t)> the eigenvectors of H(t), the squared metric speed is
//   (ds/dt)^2 = 4 sum_i chi_i,   chi_i = <di|di> - |<i|di>|^2,
// where chi_i are the fidelity susceptibilities of each level. The pulled
// back Fubini-Study metric runs at exactly half that speed. Derivatives are
// central differences over eigenframes whose phases are aligned to the
// frame at t.

#ifndef CGPLAB_DIFFGEO_HPP_
#define CGPLAB_DIFFGEO_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cgplab/linalg.hpp"
#include "cgplab/mori.hpp"

namespace cgplab {

class HamiltonianPath {
 public:
  struct Node {
    double t;
    ComplexMatrix h;
  };
  using Generator = std::function<ComplexMatrix(double)>;

  /// Piecewise-linear interpolation between nodes. Throws InputError unless
  /// there are >= 2 nodes with strictly increasing t, all the same dimension
  /// and Hermitian within tol.structural.
  HamiltonianPath(std::vector<Node> nodes, double gap_tol = 1e-8,
                  const Tolerance& tol = {});

  /// H(t) from a closed form on [t_min, t_max].
  HamiltonianPath(std::size_t dim, Generator generator, double t_min, double t_max,
                  double gap_tol = 1e-8, const Tolerance& tol = {});

  std::size_t dim() const { return dim_; }
  double t_min() const { return t_min_; }
  double t_max() const { return t_max_; }
  double gap_tol() const { return gap_tol_; }
  const Tolerance& tolerance() const { return tol_; }

  /// Throws InputError when t is outside [t_min, t_max].
  ComplexMatrix operator()(double t) const;

  /// Eigenframe at t, ascending eigenvalues. Throws DegeneracyError.
  Mori mori_at(double t) const;

 private:
  std::size_t dim_;
  std::vector<Node> nodes_;
  Generator generator_;
  double t_min_;
  double t_max_;
  double gap_tol_;
  Tolerance tol_;
};

struct AlignedFrames {
  Mori before;
  Mori center;
  Mori after;
};

/// Reorders the columns of `before` and `after` to follow the levels of
/// `center` (maximal overlap), then fixes their phases so that
/// <i(t)|i(t +- h)> is real and positive. Throws TrackingError if a level's
/// best overlap is below 0.5.
AlignedFrames align_frames(const Mori& before, const Mori& center, const Mori& after);

/// Eigenframes at t - h, t, t + h, aligned. Throws DegeneracyError,
/// TrackingError, or InputError when t +- h leaves the path domain.
AlignedFrames aligned_frames(const HamiltonianPath& path, double t, double h);

/// chi_i from already aligned frames spaced h apart.
std::vector<double> susceptibilities(const AlignedFrames& frames, double h);

std::vector<double> susceptibilities(const HamiltonianPath& path, double t, double h);

struct MetricSample {
  double t = 0.0;
  std::vector<double> chi;
  /// 4 sum_i chi_i.
  double speed = 0.0;
  /// (D_FS(B(t - h), B(t + h)) / 2h)^2.
  double fs_speed = 0.0;
};

MetricSample metric_speed(const HamiltonianPath& path, double t, double h);

/// (D(B(t - h), B(t + h)) / 2h)^2 with D the Hilbert-Schmidt MASA distance.
/// Converges to metric_speed().speed as h -> 0.
double distance_speed(const HamiltonianPath& path, double t, double h);

struct SweepGap {
  double t;
  std::string reason;
};

struct SweepResult {
  std::vector<MetricSample> samples;
  /// Grid points skipped because of degeneracy or ambiguous level tracking.
  std::vector<SweepGap> gaps;
};

/// Samples on t = t_min + h, t_min + h + step, ... while t + h <= t_max.
/// Points are independent and split over `workers` threads; a sequential
/// pass then checks level continuity between consecutive samples.
SweepResult sweep(const HamiltonianPath& path, double h, double step,
                  std::size_t workers = 1);

/// CSV with columns t, chi_0..chi_{d-1}, speed, fs_speed.
std::string sweep_to_csv(const SweepResult& result, std::size_t dim);

}  // namespace cgplab

#endif  // CGPLAB_DIFFGEO_HPP_
