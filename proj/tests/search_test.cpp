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


#include "sdlab/search.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sdlab/bounds.hpp"
#include "sdlab/error.hpp"
#include "sdlab/intersect.hpp"

namespace sdlab {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(RandomIntersectingPair, Properties) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 6;
    const int k = std::uniform_int_distribution<int>(0, n)(rng);
    const int m = std::uniform_int_distribution<int>(0, n - k)(rng);
    const double edge = 2.5;
    const auto [a, b] = random_intersecting_pair(n, edge, k, m, rng);
    EXPECT_EQ(a.dim(), k);
    EXPECT_EQ(b.dim(), m);
    EXPECT_TRUE(a.independent());
    EXPECT_TRUE(b.independent());
    EXPECT_TRUE(simplex_intersection(a, b));
    EXPECT_LE(std::max(a.max_edge(), b.max_edge()), edge + 1e-12);
  }
}

TEST(RandomIntersectingPair, PlanarSegmentsRespectBound) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto [a, b] = random_intersecting_pair(2, 1.0, 1, 1, seed);
    EXPECT_LE(min_vertex_distance(a, b).distance, vertex_gap_bound(2, 1.0).value + 1e-9);
  }
}

TEST(RandomIntersectingPair, SeedReproducible) {
  const auto p = random_intersecting_pair(4, 1.0, 2, 2, std::uint64_t{77});
  const auto q = random_intersecting_pair(4, 1.0, 2, 2, std::uint64_t{77});
  EXPECT_EQ(p.first.vertices(), q.first.vertices());
  EXPECT_EQ(p.second.vertices(), q.second.vertices());
}

TEST(RandomIntersectingPair, Errors) {
  std::mt19937_64 rng(0);
  EXPECT_THROW(random_intersecting_pair(0, 1.0, 0, 0, rng), InputError);
  EXPECT_THROW(random_intersecting_pair(2, 1.0, 3, 0, rng), InputError);
  EXPECT_THROW(random_intersecting_pair(2, 0.0, 1, 1, rng), InputError);
}

TEST(AdversarialSearch, OneDimensionStaysBelowHalf) {
  VertexGapOptions opt;
  opt.n = 1;
  opt.edge = 2.0;
  opt.trials = 10;
  opt.climb_steps = 500;
  const auto rep = adversarial_vertex_gap_search(opt);
  EXPECT_LE(rep.best_value, 0.5 * 2.0 + 1e-7);
  EXPECT_TRUE(rep.bound_respected);
}

TEST(AdversarialSearch, SharpInitIsLocallyOptimal) {
  VertexGapOptions opt;
  opt.n = 2;
  opt.edge = 1.0;
  opt.trials = 3;
  opt.climb_steps = 300;
  opt.init = sharp_pair(2, 1.0);
  const auto rep = adversarial_vertex_gap_search(opt);
  EXPECT_NEAR(rep.best_value, std::sqrt(0.5), 1e-9);
  EXPECT_LE(rep.best_value, rep.bound + 1e-7);
}

TEST(AdversarialSearch, ApproachesPlanarBound) {
  VertexGapOptions opt;
  opt.n = 2;
  opt.trials = 100;
  const auto rep = adversarial_vertex_gap_search(opt);
  EXPECT_GE(rep.best_value, 0.999 * vertex_gap_bound(2, 1.0).value);
  EXPECT_TRUE(rep.bound_respected);
  EXPECT_EQ(rep.trace.size(), 100u);
  // The reported pair realizes the reported value.
  EXPECT_NEAR(min_vertex_distance(rep.best_a, rep.best_b).distance, rep.best_value, 1e-9);
  EXPECT_NEAR(std::max(rep.best_a.max_edge(), rep.best_b.max_edge()), 1.0, 1e-12);
  EXPECT_TRUE(simplex_intersection(rep.best_a, rep.best_b, 1e-9));
}

TEST(AdversarialSearch, Deterministic) {
  VertexGapOptions opt;
  opt.n = 3;
  opt.trials = 4;
  opt.climb_steps = 200;
  opt.seed = 12;
  const auto a = adversarial_vertex_gap_search(opt);
  const auto b = adversarial_vertex_gap_search(opt);
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(a.best_a.vertices(), b.best_a.vertices());
}

TEST(AdversarialSearch, NeverAboveBoundAcrossDimensions) {
  for (int n = 1; n <= 5; ++n) {
    VertexGapOptions opt;
    opt.n = n;
    opt.trials = 10;
    opt.climb_steps = 400;
    opt.seed = static_cast<std::uint64_t>(100 * n);
    const auto rep = adversarial_vertex_gap_search(opt);
    EXPECT_LE(rep.best_value, vertex_gap_bound(n, 1.0).value + 1e-7) << n;
  }
}

TEST(MinimaxSearch, LinearInitStartsAtTwoThirdsPi) {
  MinimaxOptions opt;
  opt.init = MinimaxInit::kLinearCircle;
  opt.restarts = 1;
  opt.iterations = 10;
  const auto rep = minimax_distortion_search(opt);
  EXPECT_LT(rep.initial_value, 2 * kPi / 3 + 1e-9);
  EXPECT_LE(rep.best_value, rep.initial_value);
}

TEST(MinimaxSearch, CircleSearchIsSoundAndNearOptimal) {
  MinimaxOptions opt;
  opt.count = 101;
  opt.restarts = 6;
  opt.iterations = 1500;
  const auto rep = minimax_distortion_search(opt);
  ASSERT_TRUE(rep.certificate);
  EXPECT_GE(rep.best_value, rep.certificate->value - 1e-12);
  EXPECT_GE(rep.best_value, 2 * kPi * 99 / 303 - 1e-9);
  EXPECT_LE(rep.best_value, 2 * kPi / 3 + 0.05 * kPi);
  EXPECT_NEAR(distortion(rep.best), rep.best_value, 1e-9);
}

TEST(MinimaxSearch, SphereObservational) {
  MinimaxOptions opt;
  opt.n = 2;
  opt.target_dim = 2;
  opt.count = 500;
  opt.restarts = 1;
  opt.iterations = 150;
  const auto rep = minimax_distortion_search(opt);
  EXPECT_FALSE(rep.certificate);
  EXPECT_GE(rep.best_value, kPi / 2 - rep.mesh);
  EXPECT_LE(rep.best_value, rep.initial_value);
}

TEST(MinimaxSearch, Errors) {
  MinimaxOptions opt;
  opt.count = 100;
  EXPECT_THROW(minimax_distortion_search(opt), InputError);
  opt.count = 11;
  opt.target_dim = 2;
  EXPECT_THROW(minimax_distortion_search(opt), InputError);
  opt.n = 2;
  opt.init = MinimaxInit::kMonotone;
  EXPECT_THROW(minimax_distortion_search(opt), InputError);
}

TEST(MinimaxSearch, Deterministic) {
  MinimaxOptions opt;
  opt.count = 31;
  opt.restarts = 3;
  opt.iterations = 200;
  opt.seed = 5;
  EXPECT_EQ(minimax_distortion_search(opt).trace, minimax_distortion_search(opt).trace);
}

TEST(HullAtScale, MembersWithinEps) {
  const Relation rel = projection_map_sample(2, 1.0, 400, 0);
  Pointd x(3);
  x << 0, 0, 1;
  const auto h = hull_at_scale(rel, x, 0.3);
  EXPECT_FALSE(h.members.empty());
  for (int i : h.members) EXPECT_GE(rel.domain.col(i).dot(x), std::cos(0.3) - 1e-12);
  EXPECT_EQ(h.cloud.cols(), static_cast<Eigen::Index>(h.members.size()));
  EXPECT_THROW(hull_at_scale(rel, Pointd::Ones(2), 0.3), InputError);
}

TEST(SampleMesh, CircleGrid) {
  const Relation rel = projection_map_sample(1, 2.0, 12, 0);
  EXPECT_NEAR(sample_mesh(rel), 2.0 * 2 * kPi / 12, 1e-12);
}

TEST(AntipodalScan, ConstantMap) {
  const auto pts = sample_sphere<double>(2, 1.0, 200, 0);
  PointMatrixd domain(3, 200);
  for (int i = 0; i < 200; ++i) domain.col(i) = pts[static_cast<std::size_t>(i)].coords();
  const Relation rel(domain, 1.0, PointMatrixd::Zero(2, 200));
  const auto rep = antipodal_hull_scan(rel);
  ASSERT_TRUE(rep.found);
  EXPECT_EQ(rep.vertex_distance, 0.0);
  EXPECT_TRUE(rep.chain_holds);
  // Every direction with a near-antipode is feasible.
  for (int i = 0; i < 200; i += 17) {
    const auto a = hull_at_scale(rel, rel.domain.col(i), rep.eps);
    const auto b = hull_at_scale(rel, -rel.domain.col(i), rep.eps);
    if (!b.members.empty()) EXPECT_TRUE(hull_intersection(a.cloud, b.cloud));
  }
}

TEST(AntipodalScan, ProjectionOnFibonacciGrid) {
  const Relation rel = projection_map_sample(2, 1.0, 2000, 0);
  const auto rep = antipodal_hull_scan(rel);
  ASSERT_TRUE(rep.found);
  EXPECT_TRUE(rep.chain_holds);
  EXPECT_LE(rep.simplex_a.dim() + rep.simplex_b.dim(), 2);
  EXPECT_TRUE(simplex_intersection(rep.simplex_a, rep.simplex_b, 1e-9));
  // Extracted vertices come from the two clouds.
  const auto here = hull_at_scale(rel, rep.direction, rep.eps);
  const auto there = hull_at_scale(rel, -rep.direction, rep.eps);
  for (int v : rep.vertices_a) EXPECT_TRUE(std::count(here.members.begin(), here.members.end(), v));
  for (int v : rep.vertices_b) EXPECT_TRUE(std::count(there.members.begin(), there.members.end(), v));
}

TEST(AntipodalScan, LinearCircleMapJump) {
  const int m = 1001;
  const auto rel = circle_grid_relation(linear_circle_values(m, 1.0), 1.0);
  const auto rep = antipodal_hull_scan(rel);
  ASSERT_TRUE(rep.found);
  EXPECT_TRUE(rep.chain_holds);
  // The feasible direction sits at the jump or at its antipode.
  const double theta = std::atan2(rep.direction(1), rep.direction(0));
  const double to_jump = std::min(std::abs(theta), std::abs(std::abs(theta) - kPi));
  EXPECT_LE(to_jump, rep.eps + 1e-12);
}

TEST(AntipodalScan, EpsBelowMeshRejected) {
  const Relation rel = projection_map_sample(1, 1.0, 11, 0);
  EXPECT_THROW(antipodal_hull_scan(rel, 1e-3), InputError);
}

}  // namespace
}  // namespace sdlab
