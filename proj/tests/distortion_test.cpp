// Copyright 2026 The sdlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "sdlab/distortion.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sdlab/error.hpp"
#include "test_support.hpp"

namespace sdlab {
namespace {

constexpr double kPi = std::numbers::pi;

// Straight double loop with arccos geodesics, away from the clamping edge.
double naive_distortion(const Relation& rel) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < rel.size(); ++i)
    for (Eigen::Index j = i + 1; j < rel.size(); ++j) {
      const double c = rel.domain.col(i).dot(rel.domain.col(j)) / (rel.radius * rel.radius);
      const double geo = rel.radius * std::acos(std::clamp(c, -1.0, 1.0));
      best = std::max(best, std::abs((rel.image.col(i) - rel.image.col(j)).norm() - geo));
    }
  return best;
}

// Every sample at the same domain point and the same image point.
Relation coincident_samples(int count) {
  PointMatrixd d(2, count);
  for (int i = 0; i < count; ++i) d.col(i) << 1.0, 0.0;
  return Relation(d, 1.0, PointMatrixd::Zero(1, count));
}

TEST(Relation, Validation) {
  PointMatrixd d(2, 2);
  d << 1, 0, 0, 1;
  EXPECT_NO_THROW(Relation(d, 1.0, PointMatrixd::Zero(1, 2)));
  EXPECT_THROW(Relation(d, 2.0, PointMatrixd::Zero(1, 2)), InputError);
  EXPECT_THROW(Relation(d, 1.0, PointMatrixd::Zero(1, 3)), InputError);
  EXPECT_THROW(Relation(PointMatrixd(2, 0), 1.0, PointMatrixd(1, 0)), InputError);
  std::vector<SpherePointd> xs{SpherePointd(d.col(0), 1.0)};
  std::vector<Pointd> ys{};
  EXPECT_THROW(Relation(xs, ys), InputError);
}

TEST(Distortion, CoincidentSamplesAreZero) {
  EXPECT_EQ(distortion(coincident_samples(4)), 0.0);
}

TEST(Distortion, IdentityOfFiniteMetricIsZero) {
  // Antipodal pair mapped to points at distance pi r.
  PointMatrixd d(2, 2);
  d << 2, -2, 0, 0;
  PointMatrixd y(1, 2);
  y << 0, 2 * kPi;
  EXPECT_NEAR(distortion(Relation(d, 2.0, y)), 0.0, 1e-14);
}

TEST(Distortion, AntipodesToSamePoint) {
  for (double r : {0.5, 1.0, 3.0}) {
    PointMatrixd d(3, 2);
    d << 0, 0, 0, 0, r, -r;
    const auto w = distortion_witness(Relation(d, r, PointMatrixd::Zero(2, 2)));
    EXPECT_NEAR(w.value, kPi * r, 1e-14);
    EXPECT_EQ(w.i, 0);
    EXPECT_EQ(w.j, 1);
  }
}

TEST(Distortion, MatchesNaiveScan) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const auto pts = sample_sphere<double>(n, 1.3, 60, rng());
    std::vector<Pointd> ys;
    for (int i = 0; i < 60; ++i) ys.push_back(testing::gaussian_points(n, 1, rng).col(0));
    const Relation rel(pts, ys);
    EXPECT_NEAR(distortion(rel), naive_distortion(rel), 1e-7);
  }
}

TEST(Distortion, ParallelScanMatchesSequential) {
  // Above the threading threshold.
  const Relation rel = projection_map_sample(2, 1.0, 3000, 0);
  const auto w = distortion_witness(rel);
  const auto seq = distortion_with(
      rel.size(),
      [&](Eigen::Index i, Eigen::Index j) {
        const Pointd u = rel.domain.col(i).normalized(), v = rel.domain.col(j).normalized();
        return 2.0 * std::atan2((u - v).norm(), (u + v).norm());
      },
      [&](Eigen::Index i, Eigen::Index j) { return (rel.image.col(i) - rel.image.col(j)).norm(); });
  EXPECT_EQ(w.value, seq.value);
  EXPECT_EQ(w.i, seq.i);
  EXPECT_EQ(w.j, seq.j);
  EXPECT_EQ(distortion_witness(rel).value, w.value);
}

TEST(Distortion, LinearCircleMapOnFineGrid) {
  const auto values = linear_circle_values(10000, 1.0);
  const double d = circle_grid_distortion(values, 1.0);
  EXPECT_GT(d, 2 * kPi / 3 - 1e-3);
  EXPECT_LE(d, 2 * kPi / 3 + 1e-12);
}

TEST(Distortion, GridClosedFormMatchesGeneralScan) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int m : {3, 5, 11, 101}) {
    std::vector<double> values(static_cast<std::size_t>(m));
    for (auto& v : values) v = u(rng);
    EXPECT_NEAR(circle_grid_distortion(values, 1.7), distortion(circle_grid_relation(values, 1.7)), 1e-12);
  }
}

TEST(ProjectionMap, AntipodesAlongDroppedAxis) {
  PointMatrixd d(2, 2);
  d << 0, 0, 1, -1;
  const Relation rel(d, 1.0, d.topRows(1));
  EXPECT_NEAR(distortion(rel), kPi, 1e-15);
}

TEST(ProjectionMap, DenseCircleNearPi) {
  const double d = distortion(projection_map_sample(1, 1.0, 1001, 0));
  EXPECT_GE(d, kPi - 1e-2);
  EXPECT_LE(d, kPi + 1e-12);
}

TEST(ProjectionMap, NeverAbovePi) {
  for (int n = 1; n <= 4; ++n)
    for (int count : {2, 7, 100}) {
      const double r = 0.5 + n;
      EXPECT_LE(distortion(projection_map_sample(n, r, count, 3)), kPi * r + 1e-12);
    }
  EXPECT_THROW(projection_map_sample(1, 1.0, 1, 0), InputError);
}

TEST(LinearCircleMap, Values) {
  EXPECT_EQ(linear_circle_map(0.0, 1.0), 0.0);
  EXPECT_NEAR(linear_circle_map(kPi, 3.0), kPi, 1e-15);
  EXPECT_THROW(linear_circle_map(2 * kPi, 1.0), InputError);
  EXPECT_THROW(linear_circle_map(-0.1, 1.0), InputError);
}

TEST(LinearCircleMap, GridDistortionApproachesFromBelow) {
  double previous = 0.0;
  for (int m : {11, 101, 1001, 10001}) {
    const double d = circle_grid_distortion(linear_circle_values(m, 1.0), 1.0);
    EXPECT_LE(d, 2 * kPi / 3 + 1e-12);
    EXPECT_GE(d, previous - 1e-12);
    previous = d;
  }
  EXPECT_GT(previous, 2 * kPi / 3 - 1e-3);
}

TEST(CertifyCircleBound, ConstantValuesTie) {
  const std::vector<double> values{1, 1, 1};
  const auto cert = certify_circle_bound(values, 1.0);
  ASSERT_TRUE(std::holds_alternative<TieCase>(cert.certificate));
  EXPECT_NEAR(cert.value, 2 * kPi / 3, 1e-15);
  EXPECT_TRUE(certificate_holds(cert, values));
}

TEST(CertifyCircleBound, IncreasingValuesPath) {
  const std::vector<double> values{0, 1, 2};
  const auto cert = certify_circle_bound(values, 1.0);
  ASSERT_TRUE(std::holds_alternative<PathCase>(cert.certificate));
  EXPECT_NEAR(cert.value, 2 * kPi / 9, 1e-10);
  EXPECT_NEAR(cert.value, 0.6981317008, 1e-10);
  EXPECT_TRUE(certificate_holds(cert, values));
}

TEST(CertifyCircleBound, Errors) {
  const std::vector<double> even{0, 1, 2, 3};
  const std::vector<double> tiny{0};
  EXPECT_THROW(certify_circle_bound(even, 1.0), InputError);
  EXPECT_THROW(certify_circle_bound(tiny, 1.0), InputError);
  const std::vector<double> ok{0, 1, 2};
  EXPECT_THROW(certify_circle_bound(ok, 0.0), InputError);
}

TEST(CertifyCircleBound, LinearMapFineGrid) {
  const int m = 10001;
  const auto values = linear_circle_values(m, 1.0);
  const auto cert = certify_circle_bound(values, 1.0);
  EXPECT_GE(cert.value, 2 * kPi * 9999 / 30003 - 1e-12);
  EXPECT_LE(cert.value, circle_grid_distortion(values, 1.0) + 1e-12);
  EXPECT_TRUE(certificate_holds(cert, values));
}

// Oracle for the certificate: scan the almost-antipodal cycle directly.
bool has_tie(const std::vector<double>& v) {
  const int m = static_cast<int>(v.size());
  const int s = (m + 1) / 2;
  for (int k = 0; k < m; ++k)
    if (v[static_cast<std::size_t>(k)] == v[static_cast<std::size_t>((k + s) % m)]) return true;
  return false;
}

TEST(CertifyCircleBound, SoundOnRandomValues) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int m = 2 * std::uniform_int_distribution<int>(1, 60)(rng) + 1;
    const double r = std::uniform_real_distribution<double>(0.2, 3.0)(rng);
    std::vector<double> v(static_cast<std::size_t>(m));
    const bool coarse = trial % 3 == 0;
    for (auto& x : v) x = coarse ? std::round(u(rng)) : u(rng);
    const auto cert = certify_circle_bound(v, r);
    EXPECT_TRUE(certificate_holds(cert, v));
    EXPECT_EQ(std::holds_alternative<TieCase>(cert.certificate), has_tie(v));
    EXPECT_EQ(replay_bound(cert), cert.value);
    EXPECT_LE(cert.value, circle_grid_distortion(v, r) + 1e-12) << "trial " << trial;
  }
}

TEST(CertifyCircleBound, TamperedCertificateRejected) {
  const std::vector<double> values{0, 1, 2};
  auto cert = certify_circle_bound(values, 1.0);
  auto& path = std::get<PathCase>(cert.certificate);
  path.configuration = path.configuration == 1 ? 2 : 1;
  EXPECT_FALSE(certificate_holds(cert, values));
  cert.certificate = TieCase{0, 2};
  EXPECT_FALSE(certificate_holds(cert, values));
}

}  // namespace
}  // namespace sdlab
