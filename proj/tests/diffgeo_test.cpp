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

#include <cmath>

#include "gtest/gtest.h"

#include "cgplab/cgp.hpp"
#include "cgplab/errors.hpp"
#include "cgplab/grassmann.hpp"
#include "test_util.hpp"

using namespace cgplab;
using namespace cgplab::testing;

namespace {

HamiltonianPath qubit_rotation_path() {
  return HamiltonianPath(
      2, [](double t) { return ComplexMatrix(std::cos(t) * pauli::z() + std::sin(t) * pauli::x()); },
      -4.0, 4.0);
}

HamiltonianPath transverse_ising_path() {
  const ComplexMatrix eye = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix zz = kron(pauli::z(), pauli::z());
  const ComplexMatrix field = kron(pauli::x(), eye) + kron(eye, pauli::x());
  return HamiltonianPath(
      4, [zz, field](double lambda) { return ComplexMatrix(-zz - lambda * field); }, 0.05, 3.0);
}

// Exact speed of the path above: two levels rotate at angle atan(2 lambda)/2.
double transverse_ising_speed(double lambda) {
  const double r = 1.0 + 4.0 * lambda * lambda;
  return 8.0 / (r * r);
}

ComplexMatrix rotate_hermitian(const ComplexMatrix& u, const ComplexMatrix& h) {
  return u * h * u.adjoint();
}

}  // namespace

TEST(HamiltonianPath, NodeValidation) {
  using Node = HamiltonianPath::Node;
  EXPECT_THROW(HamiltonianPath({Node{0.0, pauli::z()}}), InputError);
  EXPECT_THROW(HamiltonianPath({Node{0.0, pauli::z()}, Node{0.0, pauli::x()}}), InputError);
  EXPECT_THROW(HamiltonianPath({Node{0.0, pauli::z()}, Node{1.0, ComplexMatrix::Identity(3, 3)}}),
               ShapeError);
  const ComplexMatrix not_hermitian = pauli::x() + Complex(0.0, 1.0) * pauli::z();
  EXPECT_THROW(HamiltonianPath({Node{0.0, pauli::z()}, Node{1.0, not_hermitian}}),
               NotHermitianError);
}

TEST(HamiltonianPath, LinearInterpolationAndDomain) {
  using Node = HamiltonianPath::Node;
  const HamiltonianPath path({Node{0.0, pauli::z()}, Node{1.0, pauli::x()}, Node{3.0, -pauli::z()}});
  EXPECT_LE(max_abs_diff(path(0.5), 0.5 * (pauli::z() + pauli::x())), 1e-15);
  EXPECT_LE(max_abs_diff(path(2.0), 0.5 * (pauli::x() - pauli::z())), 1e-15);
  EXPECT_LE(max_abs_diff(path(3.0), -pauli::z()), 0.0);
  EXPECT_THROW(path(3.5), InputError);
  EXPECT_THROW(path(-0.1), InputError);
}

TEST(AlignedFrames, ConstantPath) {
  using Node = HamiltonianPath::Node;
  Rng rng = make_stream(90, 0);
  const ComplexMatrix h = random_hermitian(3, rng);
  const HamiltonianPath path({Node{0.0, h}, Node{1.0, h}});
  const AlignedFrames f = aligned_frames(path, 0.5, 1e-3);
  EXPECT_LE(max_abs_diff(f.before.frame(), f.center.frame()), 1e-14);
  EXPECT_LE(max_abs_diff(f.after.frame(), f.center.frame()), 1e-14);
  for (double chi : susceptibilities(path, 0.5, 1e-3)) EXPECT_NEAR(chi, 0.0, 1e-12);
  const MetricSample s = metric_speed(path, 0.5, 1e-3);
  EXPECT_NEAR(s.speed, 0.0, 1e-12);
}

TEST(AlignedFrames, QubitRotationFrames) {
  const HamiltonianPath path = qubit_rotation_path();
  const double t = 0.7;
  const double h = 1e-3;
  const AlignedFrames f = aligned_frames(path, t, h);
  // The +1 eigenvector of cos(s) Z + sin(s) X is (cos s/2, sin s/2); it is
  // the second column in ascending order.
  for (const auto& [frame, s] : {std::pair{&f.before, t - h}, std::pair{&f.center, t},
                                  std::pair{&f.after, t + h}}) {
    const ComplexVector v = frame->vector(1);
    EXPECT_NEAR(std::abs(v(0)), std::abs(std::cos(s / 2.0)), 1e-12);
    EXPECT_NEAR(std::abs(v(1)), std::abs(std::sin(s / 2.0)), 1e-12);
  }
  for (std::size_t i = 0; i < 2; ++i) {
    const Complex before = f.center.vector(i).dot(f.before.vector(i));
    const Complex after = f.center.vector(i).dot(f.after.vector(i));
    EXPECT_NEAR(before.imag(), 0.0, 1e-14);
    EXPECT_GT(before.real(), 0.0);
    EXPECT_NEAR(after.imag(), 0.0, 1e-14);
    EXPECT_GT(after.real(), 0.0);
  }
}

TEST(AlignedFrames, CrossingIsDegenerate) {
  const HamiltonianPath crossing(
      2, [](double t) { return ComplexMatrix(t * pauli::z()); }, -1.0, 1.0);
  EXPECT_THROW(aligned_frames(crossing, 0.0, 1e-3), DegeneracyError);
  EXPECT_THROW(aligned_frames(crossing, 1e-3, 1e-3), DegeneracyError);
  EXPECT_NO_THROW(aligned_frames(crossing, 0.5, 1e-3));
}

TEST(Susceptibilities, QubitRotation) {
  const HamiltonianPath path = qubit_rotation_path();
  for (double t : {-2.0, 0.0, 0.4, 1.3, 3.0}) {
    const auto chi = susceptibilities(path, t, 1e-4);
    ASSERT_EQ(chi.size(), 2u);
    EXPECT_NEAR(chi[0], 0.25, 1e-8);
    EXPECT_NEAR(chi[1], 0.25, 1e-8);
    const MetricSample s = metric_speed(path, t, 1e-4);
    EXPECT_NEAR(s.speed, 2.0, 1e-6);
    EXPECT_NEAR(s.fs_speed, 1.0, 1e-6);
  }
}

TEST(Susceptibilities, SecondOrderConvergence) {
  // Smooth d = 3 path H(t) = A + t B + t^2 C; the Richardson ratio of the
  // error sequence must approach 4.
  Rng rng = make_stream(91, 0);
  const ComplexMatrix a = random_hermitian(3, rng);
  const ComplexMatrix b = random_hermitian(3, rng);
  const ComplexMatrix c = random_hermitian(3, rng);
  const HamiltonianPath path(
      3, [=](double t) { return ComplexMatrix(a + t * b + t * t * c); }, -1.0, 1.0);
  const double t = 0.1;
  const double h = 0.02;
  const auto c1 = susceptibilities(path, t, h);
  const auto c2 = susceptibilities(path, t, h / 2);
  const auto c3 = susceptibilities(path, t, h / 4);
  for (std::size_t i = 0; i < 3; ++i) {
    const double ratio = (c1[i] - c2[i]) / (c2[i] - c3[i]);
    EXPECT_NEAR(ratio, 4.0, 0.1) << "level " << i;
    EXPECT_GE(c3[i], -1e-10);
  }
}

TEST(Susceptibilities, GaugeInvariance) {
  Rng rng = make_stream(92, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 4);
    const ComplexMatrix a = random_hermitian(d, rng);
    const ComplexMatrix b = random_hermitian(d, rng);
    const HamiltonianPath path(
        d, [=](double t) { return ComplexMatrix(a + t * b); }, -1.0, 1.0);
    const double t = 0.2;
    const double h = 1e-4;
    const Mori before = path.mori_at(t - h);
    const Mori center = path.mori_at(t);
    const Mori after = path.mori_at(t + h);
    const auto reference = susceptibilities(align_frames(before, center, after), h);

    // Phases everywhere, plus reordering of the outer frames.
    const Mori center_phased =
        Mori::from_trusted_frame(center.frame() * random_diagonal_phases(d, rng));
    const auto gauged = susceptibilities(
        align_frames(shuffle_frame(before, rng), center_phased, shuffle_frame(after, rng)), h);
    for (std::size_t i = 0; i < d; ++i) EXPECT_NEAR(gauged[i], reference[i], 1e-10);
  }
}

TEST(MetricSpeed, HalfRelationConvergesQuadratically) {
  Rng rng = make_stream(93, 0);
  const ComplexMatrix a = random_hermitian(3, rng);
  const ComplexMatrix b = random_hermitian(3, rng);
  const HamiltonianPath path(
      3, [=](double t) { return ComplexMatrix(a + std::sin(t) * b); }, -1.0, 1.0);
  double previous = 0.0;
  for (double h : {0.02, 0.01, 0.005}) {
    const MetricSample s = metric_speed(path, 0.3, h);
    const double deviation = std::abs(s.fs_speed - 0.5 * s.speed);
    if (previous > 0.0) EXPECT_NEAR(previous / deviation, 4.0, 0.2) << "h=" << h;
    previous = deviation;
  }
}

TEST(MetricSpeed, DistanceSpeedConverges) {
  Rng rng = make_stream(94, 0);
  const ComplexMatrix a = random_hermitian(4, rng);
  const ComplexMatrix b = random_hermitian(4, rng);
  const HamiltonianPath path(
      4, [=](double t) { return ComplexMatrix(a + t * b); }, -1.0, 1.0);
  const double speed = metric_speed(path, 0.0, 1e-4).speed;
  double previous = 0.0;
  for (double h : {0.02, 0.01, 0.005}) {
    const double deviation = std::abs(distance_speed(path, 0.0, h) - speed);
    if (previous > 0.0) EXPECT_NEAR(previous / deviation, 4.0, 0.3) << "h=" << h;
    previous = deviation;
  }
  EXPECT_NEAR(distance_speed(path, 0.0, 1e-3), speed, 1e-4 * speed);
}

TEST(MetricSpeed, CgpOfEndpointFrames) {
  // (N_d / 2) (2h)^2 speed tracks the CGP of the unitary taking B(t - h) to
  // B(t + h), to fourth order in h.
  Rng rng = make_stream(95, 0);
  const ComplexMatrix a = random_hermitian(3, rng);
  const ComplexMatrix b = random_hermitian(3, rng);
  const HamiltonianPath path(
      3, [=](double t) { return ComplexMatrix(a + t * b); }, -1.0, 1.0);
  for (double h : {1e-2, 5e-3}) {
    const AlignedFrames f = aligned_frames(path, 0.0, h);
    const ComplexMatrix w = f.after.frame() * f.before.frame().adjoint();
    const double cgp = cgp_from_distance(w, f.before);
    const double speed = metric_speed(path, 0.0, h).speed;
    const double predicted = 0.5 * cgp_normalization(3) * 4.0 * h * h * speed;
    EXPECT_LE(std::abs(cgp - predicted), 50.0 * std::pow(h, 4)) << "h=" << h;
  }
}

TEST(MetricSpeed, TransverseIsingAnalytic) {
  const HamiltonianPath path = transverse_ising_path();
  for (double lambda : {0.2, 0.5, 1.0, 2.0}) {
    const MetricSample s = metric_speed(path, lambda, 1e-4);
    EXPECT_NEAR(s.speed, transverse_ising_speed(lambda), 1e-6) << lambda;
    EXPECT_NEAR(s.fs_speed, 0.5 * s.speed, 1e-5) << lambda;
  }
}

TEST(MetricSpeed, UnitaryConjugationLeavesSpeedUnchanged) {
  Rng rng = make_stream(96, 0);
  const ComplexMatrix u = haar_unitary(2, rng);
  const HamiltonianPath rotated(
      2,
      [u](double t) {
        return rotate_hermitian(u, std::cos(t) * pauli::z() + std::sin(t) * pauli::x());
      },
      -1.0, 1.0);
  EXPECT_NEAR(metric_speed(rotated, 0.3, 1e-4).speed, 2.0, 1e-6);
}

TEST(Sweep, ConstantAndRotationPaths) {
  using Node = HamiltonianPath::Node;
  const HamiltonianPath constant({Node{0.0, pauli::z()}, Node{1.0, pauli::z()}});
  const SweepResult flat = sweep(constant, 1e-3, 0.1);
  EXPECT_TRUE(flat.gaps.empty());
  ASSERT_FALSE(flat.samples.empty());
  for (const auto& s : flat.samples) EXPECT_NEAR(s.speed, 0.0, 1e-12);

  const SweepResult rot = sweep(qubit_rotation_path(), 1e-4, 0.5);
  EXPECT_TRUE(rot.gaps.empty());
  EXPECT_EQ(rot.samples.size(), 16u);
  for (const auto& s : rot.samples) EXPECT_NEAR(s.speed, 2.0, 1e-6);
}

TEST(Sweep, WorkersGiveIdenticalResults) {
  const SweepResult one = sweep(transverse_ising_path(), 1e-4, 0.05, 1);
  const SweepResult three = sweep(transverse_ising_path(), 1e-4, 0.05, 3);
  ASSERT_EQ(one.samples.size(), three.samples.size());
  for (std::size_t k = 0; k < one.samples.size(); ++k) {
    EXPECT_EQ(one.samples[k].t, three.samples[k].t);
    EXPECT_EQ(one.samples[k].speed, three.samples[k].speed);
    EXPECT_EQ(one.samples[k].chi, three.samples[k].chi);
  }
  EXPECT_EQ(sweep_to_csv(one, 4), sweep_to_csv(three, 4));
}

TEST(Sweep, TransverseIsingCurve) {
  // Positive and decreasing away from the degenerate point; the curve
  // self-converges under h refinement.
  const SweepResult coarse = sweep(transverse_ising_path(), 1e-3, 0.1);
  const SweepResult fine = sweep(transverse_ising_path(), 5e-4, 0.1);
  ASSERT_EQ(coarse.samples.size(), fine.samples.size());
  EXPECT_TRUE(coarse.gaps.empty());
  for (std::size_t k = 0; k < coarse.samples.size(); ++k) {
    const double coarse_error =
        std::abs(coarse.samples[k].speed - transverse_ising_speed(coarse.samples[k].t));
    const double fine_error =
        std::abs(fine.samples[k].speed - transverse_ising_speed(fine.samples[k].t));
    EXPECT_GT(coarse.samples[k].speed, 0.0);
    EXPECT_LT(fine_error, coarse_error + 1e-12);
    if (k > 0) EXPECT_LT(coarse.samples[k].speed, coarse.samples[k - 1].speed);
  }
}

TEST(Sweep, CrossingBecomesGap) {
  using Node = HamiltonianPath::Node;
  const HamiltonianPath crossing({Node{-1.0, pauli::z()}, Node{1.0, -pauli::z()}});
  const SweepResult r = sweep(crossing, 0.01, 0.1);
  EXPECT_FALSE(r.gaps.empty());
  EXPECT_FALSE(r.samples.empty());
  // Points on both sides of the crossing survive.
  EXPECT_LT(r.samples.front().t, 0.0);
  EXPECT_GT(r.samples.back().t, 0.0);
  for (const auto& s : r.samples) EXPECT_NEAR(s.speed, 0.0, 1e-12);

  const std::string csv = sweep_to_csv(r, 2);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,chi_0,chi_1,speed,fs_speed");
  EXPECT_NE(csv.find(",,,,\n"), std::string::npos);
}

TEST(Sweep, Errors) {
  EXPECT_THROW(sweep(qubit_rotation_path(), 0.0, 0.1), InputError);
  EXPECT_THROW(sweep(qubit_rotation_path(), 1e-3, -1.0), InputError);
  EXPECT_THROW(sweep(qubit_rotation_path(), 5.0, 0.1), InputError);
}
