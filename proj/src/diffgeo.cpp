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

#include "cgplab/diffgeo.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>
#include <utility>

#include "cgplab/errors.hpp"
#include "cgplab/grassmann.hpp"

namespace cgplab {

namespace {

constexpr double kMinTrackingOverlap = 0.5;

double domain_slack(double t_min, double t_max) {
  return 1e-12 * std::max({1.0, std::abs(t_min), std::abs(t_max)});
}

}  // namespace

HamiltonianPath::HamiltonianPath(std::vector<Node> nodes, double gap_tol,
                                 const Tolerance& tol)
    : dim_(0), nodes_(std::move(nodes)), gap_tol_(gap_tol), tol_(tol) {
  if (nodes_.size() < 2) {
    throw InputError("path", "HamiltonianPath: need at least two nodes");
  }
  require_square(nodes_.front().h, "HamiltonianPath");
  dim_ = static_cast<std::size_t>(nodes_.front().h.rows());
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const auto& node = nodes_[k];
    require_same_shape(nodes_.front().h, node.h, "HamiltonianPath");
    require_finite(node.h, "HamiltonianPath");
    if (!std::isfinite(node.t)) {
      throw InputError("path", "HamiltonianPath: non-finite node time");
    }
    if (k > 0 && !(node.t > nodes_[k - 1].t)) {
      throw InputError("path", "HamiltonianPath: node times must strictly increase");
    }
    if (!is_hermitian(node.h, tol.structural)) {
      throw NotHermitianError("HamiltonianPath: node " + std::to_string(k) +
                              " is not Hermitian");
    }
  }
  t_min_ = nodes_.front().t;
  t_max_ = nodes_.back().t;
}

HamiltonianPath::HamiltonianPath(std::size_t dim, Generator generator, double t_min,
                                 double t_max, double gap_tol, const Tolerance& tol)
    : dim_(dim),
      generator_(std::move(generator)),
      t_min_(t_min),
      t_max_(t_max),
      gap_tol_(gap_tol),
      tol_(tol) {
  if (dim == 0) throw ShapeError("HamiltonianPath: dimension must be positive");
  if (!generator_) throw InputError("path", "HamiltonianPath: empty generator");
  if (!(t_max > t_min)) {
    throw InputError("path", "HamiltonianPath: empty parameter interval");
  }
}

ComplexMatrix HamiltonianPath::operator()(double t) const {
  const double slack = domain_slack(t_min_, t_max_);
  if (!(t >= t_min_ - slack && t <= t_max_ + slack)) {
    std::ostringstream msg;
    msg << "HamiltonianPath: t = " << t << " outside [" << t_min_ << ", " << t_max_
        << "]";
    throw InputError("path", msg.str());
  }
  t = std::clamp(t, t_min_, t_max_);
  if (generator_) return generator_(t);
  auto upper = std::upper_bound(nodes_.begin(), nodes_.end(), t,
                                [](double v, const Node& n) { return v < n.t; });
  if (upper == nodes_.end()) return nodes_.back().h;
  const Node& hi = *upper;
  const Node& lo = *(upper - 1);
  const double w = (t - lo.t) / (hi.t - lo.t);
  return (1.0 - w) * lo.h + w * hi.h;
}

Mori HamiltonianPath::mori_at(double t) const {
  return mori_from_hermitian((*this)(t), gap_tol_, tol_);
}

namespace {

Mori track_to(const Mori& reference, const Mori& other) {
  const ComplexMatrix inner = reference.frame().adjoint() * other.frame();
  const RealMatrix overlap = inner.cwiseAbs2();
  const auto d = overlap.rows();
  ComplexMatrix out(d, d);
  std::vector<bool> used(static_cast<std::size_t>(d), false);
  for (Eigen::Index i = 0; i < d; ++i) {
    Eigen::Index best = 0;
    const double best_value = overlap.row(i).maxCoeff(&best);
    if (best_value < kMinTrackingOverlap || used[static_cast<std::size_t>(best)]) {
      std::ostringstream msg;
      msg << "level " << i << " cannot be tracked (best overlap " << best_value
          << ")";
      throw TrackingError(msg.str());
    }
    used[static_cast<std::size_t>(best)] = true;
    const Complex z = inner(i, best);
    out.col(i) = other.frame().col(best) * (std::conj(z) / std::abs(z));
  }
  return Mori::from_trusted_frame(std::move(out));
}

}  // namespace

AlignedFrames align_frames(const Mori& before, const Mori& center, const Mori& after) {
  if (before.dim() != center.dim() || after.dim() != center.dim()) {
    throw ShapeError("align_frames: Mori dimensions differ");
  }
  return {track_to(center, before), center, track_to(center, after)};
}

AlignedFrames aligned_frames(const HamiltonianPath& path, double t, double h) {
  if (!(h > 0.0)) throw InputError("step", "aligned_frames: h must be positive");
  return align_frames(path.mori_at(t - h), path.mori_at(t), path.mori_at(t + h));
}

std::vector<double> susceptibilities(const AlignedFrames& frames, double h) {
  const ComplexMatrix delta = (frames.after.frame() - frames.before.frame()) / (2.0 * h);
  const ComplexMatrix& center = frames.center.frame();
  std::vector<double> chi(frames.center.dim());
  for (Eigen::Index i = 0; i < delta.cols(); ++i) {
    const double norm2 = delta.col(i).squaredNorm();
    const double along = std::norm(center.col(i).dot(delta.col(i)));
    chi[static_cast<std::size_t>(i)] = norm2 - along;
  }
  return chi;
}

std::vector<double> susceptibilities(const HamiltonianPath& path, double t, double h) {
  return susceptibilities(aligned_frames(path, t, h), h);
}

namespace {

MetricSample sample_from_frames(const AlignedFrames& frames, double t, double h) {
  MetricSample s;
  s.t = t;
  s.chi = susceptibilities(frames, h);
  double total = 0.0;
  for (double c : s.chi) total += c;
  s.speed = 4.0 * total;
  const double dfs = dfs_distance(frames.before, frames.after) / (2.0 * h);
  s.fs_speed = dfs * dfs;
  return s;
}

}  // namespace

MetricSample metric_speed(const HamiltonianPath& path, double t, double h) {
  return sample_from_frames(aligned_frames(path, t, h), t, h);
}

double distance_speed(const HamiltonianPath& path, double t, double h) {
  if (!(h > 0.0)) throw InputError("step", "distance_speed: h must be positive");
  const double d = masa_distance(path.mori_at(t - h), path.mori_at(t + h)) / (2.0 * h);
  return d * d;
}

SweepResult sweep(const HamiltonianPath& path, double h, double step,
                  std::size_t workers) {
  if (!(h > 0.0) || !(step > 0.0)) {
    throw InputError("step", "sweep: h and step must be positive");
  }
  const double span = path.t_max() - path.t_min() - 2.0 * h;
  if (span < 0.0) throw InputError("step", "sweep: path shorter than 2h");
  const auto count = static_cast<std::size_t>(std::floor(span / step + 1e-9)) + 1;
  workers = std::clamp<std::size_t>(workers, 1, count);

  struct Point {
    std::optional<MetricSample> sample;
    std::optional<Mori> center;
    std::string failure;
  };
  std::vector<Point> points(count);
  auto run_block = [&](std::size_t w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    for (std::size_t k = begin; k < end; ++k) {
      const double t = path.t_min() + h + static_cast<double>(k) * step;
      try {
        const AlignedFrames frames = aligned_frames(path, t, h);
        points[k].sample = sample_from_frames(frames, t, h);
        points[k].center = frames.center;
      } catch (const DegeneracyError& e) {
        points[k].failure = std::string("degenerate: ") + e.what();
      } catch (const TrackingError& e) {
        points[k].failure = std::string("tracking: ") + e.what();
      }
    }
  };
  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run_block, w);
  }

  // Level continuity between consecutive kept points.
  SweepResult result;
  std::optional<Mori> previous;
  for (std::size_t k = 0; k < count; ++k) {
    const double t = path.t_min() + h + static_cast<double>(k) * step;
    Point& p = points[k];
    if (!p.sample) {
      // Levels may cross inside the gap; the next kept point opens a segment.
      result.gaps.push_back({t, p.failure});
      previous.reset();
      continue;
    }
    if (previous) {
      const RealMatrix overlap =
          (previous->frame().adjoint() * p.center->frame()).cwiseAbs2();
      bool continuous = true;
      for (Eigen::Index i = 0; i < overlap.rows() && continuous; ++i) {
        Eigen::Index best = 0;
        const double best_value = overlap.row(i).maxCoeff(&best);
        continuous = best == i && best_value >= kMinTrackingOverlap;
      }
      if (!continuous) {
        // Level labels change meaning here; start a new segment after it.
        result.gaps.push_back(
            {t, "tracking: levels reorder relative to the previous grid point"});
        previous = p.center;
        continue;
      }
    }
    previous = p.center;
    result.samples.push_back(std::move(*p.sample));
  }
  return result;
}

std::string sweep_to_csv(const SweepResult& result, std::size_t dim) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "t";
  for (std::size_t i = 0; i < dim; ++i) out << ",chi_" << i;
  out << ",speed,fs_speed\n";
  // Samples and gaps are each sorted by t; merge them so gaps show up as
  // rows with empty fields.
  std::size_t si = 0;
  std::size_t gi = 0;
  while (si < result.samples.size() || gi < result.gaps.size()) {
    const bool take_gap =
        si == result.samples.size() ||
        (gi < result.gaps.size() && result.gaps[gi].t < result.samples[si].t);
    if (take_gap) {
      out << result.gaps[gi].t;
      for (std::size_t i = 0; i < dim + 2; ++i) out << ',';
      out << '\n';
      ++gi;
    } else {
      const MetricSample& s = result.samples[si];
      out << s.t;
      for (double c : s.chi) out << ',' << c;
      out << ',' << s.speed << ',' << s.fs_speed << '\n';
      ++si;
    }
  }
  return out.str();
}

}  // namespace cgplab
