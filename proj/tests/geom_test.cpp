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


#include "sdlab/geom.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sdlab/error.hpp"
#include "test_support.hpp"

namespace sdlab {
namespace {

constexpr double kPi = std::numbers::pi;

PointMatrixd cols(std::initializer_list<std::initializer_list<double>> pts) {
  const auto n = static_cast<Eigen::Index>(pts.begin()->size());
  PointMatrixd out(n, static_cast<Eigen::Index>(pts.size()));
  Eigen::Index j = 0;
  for (const auto& p : pts) {
    Eigen::Index i = 0;
    for (double v : p) out(i++, j) = v;
    ++j;
  }
  return out;
}

TEST(AffinelyIndependent, StandardTriangle) {
  EXPECT_TRUE(affinely_independent(cols({{0, 0}, {1, 0}, {0, 1}})));
}

TEST(AffinelyIndependent, CollinearPoints) {
  EXPECT_FALSE(affinely_independent(cols({{0, 0}, {1, 0}, {2, 0}})));
}

TEST(AffinelyIndependent, FlatTriangleMatchesEliminationRank) {
  const PointMatrixd flat = cols({{0, 0}, {1, 0}, {0.5, 1e-12}});
  EXPECT_FALSE(affinely_independent(flat, 1e-9));
  // The oracle sees rank 1 at the same relative threshold (in length units).
  EXPECT_EQ(testing::affine_rank(flat, std::sqrt(1e-9)), 1);
}

TEST(AffinelyIndependent, TooManyPointsAndCoincident) {
  EXPECT_FALSE(affinely_independent(cols({{0}, {1}, {2}})));
  EXPECT_FALSE(affinely_independent(cols({{1, 1}, {1, 1}})));
  EXPECT_TRUE(affinely_independent(cols({{3, 4}})));
}

TEST(AffinelyIndependent, Errors) {
  EXPECT_THROW(affinely_independent(PointMatrixd(2, 0)), InputError);
  std::vector<Pointd> mixed{Pointd::Zero(2), Pointd::Zero(3)};
  EXPECT_THROW(affinely_independent(mixed), InputError);
}

TEST(AffinelyIndependent, ScaleInvariant) {
  const PointMatrixd tri = cols({{0, 0}, {1, 0}, {0.3, 0.8}});
  for (double s : {1e-6, 1.0, 1e6}) EXPECT_TRUE(affinely_independent(PointMatrixd(tri * s)));
}

TEST(AffinelyIndependent, AgreesWithEliminationOracleOnRandomClouds) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 5);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = dim(rng);
    const int count = std::uniform_int_distribution<int>(1, n + 2)(rng);
    // Random affine rank: points in a random subspace of dimension d.
    const int d = std::uniform_int_distribution<int>(0, n)(rng);
    const PointMatrixd basis = testing::gaussian_points(n, d, rng);
    const PointMatrixd coeff = testing::gaussian_points(d, count, rng);
    const PointMatrixd pts = d == 0 ? PointMatrixd(PointMatrixd::Zero(n, count)) : PointMatrixd(basis * coeff);
    // Skip nearly ill-conditioned draws where the two thresholds could differ.
    const int loose = testing::affine_rank(pts, 1e-3);
    const int tight = testing::affine_rank(pts, 1e-8);
    if (loose != tight) continue;
    ++checked;
    EXPECT_EQ(affinely_independent(pts), tight == count - 1) << "trial " << trial;
    EXPECT_EQ(affine_dimension(pts), tight) << "trial " << trial;
  }
  EXPECT_GT(checked, 1500);
}

TEST(Barycenter, Examples) {
  EXPECT_NEAR(barycenter(Simplexd(cols({{0}, {1}})))(0), 0.5, 1e-15);
  const Pointd c = barycenter(Simplexd(PointMatrixd(PointMatrixd::Identity(3, 3))));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(c(i), 1.0 / 3.0, 1e-15);
}

TEST(Faces, Counts) {
  const Simplexd tri(cols({{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(faces(tri, 1).size(), 3u);
  EXPECT_EQ(faces(tri, 0).size(), 3u);
  const Simplexd tet(cols({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  const auto tris = faces(tet, 2);
  EXPECT_EQ(tris.size(), 4u);
  for (const auto& f : tris) {
    EXPECT_EQ(f.dim(), 2);
    EXPECT_TRUE(f.independent());
  }
  EXPECT_THROW(faces(tri, 3), InputError);
  EXPECT_THROW(faces(tri, -1), InputError);
}

TEST(Faces, LexicographicOrder) {
  const Simplexd tri(cols({{0, 0}, {1, 0}, {0, 1}}));
  const auto edges = faces(tri, 1);
  // {0,1}, {0,2}, {1,2}
  EXPECT_EQ(edges[0].vertex(1), tri.vertex(1));
  EXPECT_EQ(edges[1].vertex(1), tri.vertex(2));
  EXPECT_EQ(edges[2].vertex(0), tri.vertex(1));
}

TEST(Faces, EveryFaceOfRandomSimplexIsIndependent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    const Simplexd s(testing::gaussian_points(n, n + 1, rng));
    if (!s.independent()) continue;
    for (int k = 0; k <= n; ++k)
      for (const auto& f : faces(s, k)) EXPECT_TRUE(f.independent());
  }
}

TEST(RegularSimplex, Segment) {
  const Simplexd s = regular_simplex(1, 1.0, 1);
  EXPECT_NEAR(std::abs(s.vertex(0)(0)), 0.5, 1e-15);
  EXPECT_NEAR(s.vertex(0)(0), -s.vertex(1)(0), 1e-15);
}

TEST(RegularSimplex, TriangleEdges) {
  const Simplexd s = regular_simplex(2, 1.0, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) EXPECT_NEAR((s.vertex(i) - s.vertex(j)).norm(), 1.0, 1e-14);
}

TEST(RegularSimplex, CircumradiusAndCentering) {
  for (int m = 1; m <= 10; ++m) {
    const double edge = 2.0;
    const Simplexd s = regular_simplex(m, edge, m + 2);
    EXPECT_NEAR(barycenter(s).norm(), 0.0, 1e-13);
    const double expected = edge * std::sqrt(m / (2.0 * (m + 1)));
    for (int i = 0; i <= m; ++i) EXPECT_NEAR(s.vertex(i).norm(), expected, 1e-13);
    for (int i = 0; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) EXPECT_NEAR((s.vertex(i) - s.vertex(j)).norm(), edge, 1e-13);
  }
  EXPECT_NEAR(regular_simplex(5, 2.0, 5).vertex(0).norm(), 2.0 * std::sqrt(5.0 / 12.0), 1e-13);
}

TEST(RegularSimplex, CustomBasisAndErrors) {
  PointMatrixd basis = PointMatrixd::Zero(3, 1);
  basis(2, 0) = 1.0;
  const Simplexd s = regular_simplex(1, 1.0, 3, std::optional<PointMatrixd>(basis));
  EXPECT_NEAR(s.vertex(0).head(2).norm(), 0.0, 1e-15);
  EXPECT_THROW(regular_simplex(3, 1.0, 2), InputError);
  EXPECT_THROW(regular_simplex(1, 0.0, 2), InputError);
  EXPECT_THROW(regular_simplex(1, 1.0, 3, std::optional<PointMatrixd>(PointMatrixd(2.0 * basis))), InputError);
  EXPECT_EQ(regular_simplex(0, 1.0, 3).size(), 1);
}

TEST(SphereDistance, Examples) {
  Pointd x(3);
  x << 0, 0, 2;
  const SpherePointd p(x, 2.0);
  EXPECT_NEAR(sphere_distance(p, p.antipode()), 2.0 * kPi, 1e-15);
  EXPECT_EQ(sphere_distance(p, p), 0.0);
  Pointd y(3);
  y << 2, 0, 0;
  EXPECT_NEAR(sphere_distance(p, SpherePointd(y, 2.0)), kPi, 1e-15);
}

TEST(SphereDistance, Errors) {
  Pointd x(2);
  x << 1, 0;
  Pointd y(3);
  y << 1, 0, 0;
  EXPECT_THROW(sphere_distance(SpherePointd(x, 1.0), SpherePointd(y, 1.0)), InputError);
  EXPECT_THROW(sphere_distance(SpherePointd(x, 1.0), SpherePointd(Pointd(2.0 * x), 2.0)), InputError);
  EXPECT_THROW(SpherePointd(x, 2.0), InputError);
  EXPECT_THROW(SpherePointd(x, -1.0), InputError);
}

TEST(SphereDistance, NearAntipodalAccuracy) {
  // arccos loses about half the digits next to pi; the chord form does not.
  Pointd x(2), y(2);
  const double delta = 1e-9;
  x << 1, 0;
  y << -std::cos(delta), std::sin(delta);
  EXPECT_NEAR(sphere_distance(SpherePointd(x, 1.0), SpherePointd(y, 1.0)), kPi - delta, 1e-15);
}

TEST(SphereDistance, MetricAxiomsOnSamples) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 4; ++n) {
    const auto pts = sample_sphere<double>(n, 1.5, 30, rng());
    for (const auto& a : pts)
      for (const auto& b : pts) {
        const double ab = sphere_distance(a, b);
        EXPECT_NEAR(ab, sphere_distance(b, a), 1e-15);
        EXPECT_LE(ab, kPi * 1.5 + 1e-12);
        for (int c = 0; c < 30; c += 7) {
          EXPECT_LE(ab, sphere_distance(a, pts[static_cast<std::size_t>(c)]) +
                            sphere_distance(pts[static_cast<std::size_t>(c)], b) + 1e-12);
        }
      }
  }
}

TEST(SampleSphere, CircleAngles) {
  const auto pts = sample_sphere<double>(1, 1.0, 4, 0);
  ASSERT_EQ(pts.size(), 4u);
  for (int k = 0; k < 4; ++k) {
    const double theta = std::atan2(pts[static_cast<std::size_t>(k)].coords()(1), pts[static_cast<std::size_t>(k)].coords()(0));
    EXPECT_NEAR(std::remainder(theta - k * kPi / 2, 2 * kPi), 0.0, 1e-15);
  }
  const auto tri = sample_sphere<double>(1, 1.0, 3, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      EXPECT_NEAR(sphere_distance(tri[static_cast<std::size_t>(i)], tri[static_cast<std::size_t>(j)]), 2 * kPi / 3, 1e-14);
}

TEST(SampleSphere, NormsAndDeterminism) {
  for (int n : {2, 3, 5}) {
    const auto pts = sample_sphere<double>(n, 2.5, 500, 9);
    const auto again = sample_sphere<double>(n, 2.5, 500, 9);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      EXPECT_NEAR(pts[i].coords().norm(), 2.5, 1e-12);
      EXPECT_EQ(pts[i].coords(), again[i].coords());
    }
  }
  EXPECT_THROW(sample_sphere<double>(0, 1.0, 3, 0), InputError);
  EXPECT_THROW(sample_sphere<double>(1, 1.0, 0, 0), InputError);
  EXPECT_THROW(sample_sphere<double>(1, 0.0, 3, 0), InputError);
}

TEST(BarycentricCoords, Validation) {
  Pointd w(3);
  w << 0.2, 0.3, 0.5;
  const BarycentricCoordsd b(w);
  EXPECT_EQ(b.support(), (std::vector<int>{0, 1, 2}));
  w << 0.0, 0.5, 0.5;
  EXPECT_EQ(BarycentricCoordsd(w).support(), (std::vector<int>{1, 2}));
  w << -0.1, 0.6, 0.5;
  EXPECT_THROW(BarycentricCoordsd{w}, InputError);
  w << 0.2, 0.2, 0.2;
  EXPECT_THROW(BarycentricCoordsd{w}, InputError);
}

TEST(Scalar, LongDoubleInstantiation) {
  using P = PointMatrix<long double>;
  P tri(2, 3);
  tri << 0, 1, 0, 0, 0, 1;
  EXPECT_TRUE(affinely_independent(tri));
  const Simplex<long double> s = regular_simplex<long double>(3, 1.0L, 3);
  EXPECT_NEAR(static_cast<double>((s.vertex(0) - s.vertex(1)).norm()), 1.0, 1e-15);
}

}  // namespace
}  // namespace sdlab
