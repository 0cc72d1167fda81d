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

#ifndef SDLAB_SEARCH_HPP
#define SDLAB_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sdlab/distortion.hpp"
#include "sdlab/geom.hpp"
#include "sdlab/intersect.hpp"

namespace sdlab {

/// Fields shared by every search; rerunning with the same inputs and seed
/// reproduces the report bit for bit.
struct SearchReport {
  std::string kind;
  std::uint64_t seed = 0;
  int trials = 0;
  double best_value = 0.0;
  /// Best value per trial or restart, in trial order.
  std::vector<double> trace;
};

/// Two simplices of dimensions k and m in R^n that share a point, with all
/// edges at most `edge`. Degenerate draws are resampled.
std::pair<Simplexd, Simplexd> random_intersecting_pair(int n, double edge, int k, int m, std::mt19937_64& rng);
std::pair<Simplexd, Simplexd> random_intersecting_pair(int n, double edge, int k, int m, std::uint64_t seed);

struct VertexGapReport : SearchReport {
  int n = 0;
  double edge = 1.0;
  int k = 0;
  int m = 0;
  double bound = 0.0;
  bool bound_respected = true;
  Simplexd best_a;
  Simplexd best_b;
};

struct VertexGapOptions {
  int n = 2;
  double edge = 1.0;
  int trials = 100;
  int climb_steps = 2000;
  std::uint64_t seed = 0;
  /// Starting pair for every trial instead of a random draw.
  std::optional<std::pair<Simplexd, Simplexd>> init;
};

/// Hill-climbs vertex positions of intersecting pairs to maximize the
/// closest cross vertex distance relative to the longest edge.
VertexGapReport adversarial_vertex_gap_search(const VertexGapOptions& opt);

/// kMonotone draws a random nondecreasing scalar map with a random jump
/// position and total rise; it needs n = 1 and scalar images. kMixed uses the
/// projection on restart 0, then kMonotone when available and kRandom
/// otherwise.
enum class MinimaxInit { kMixed, kProjection, kRandom, kLinearCircle, kMonotone };

struct MinimaxOptions {
  int n = 1;
  int target_dim = 1;
  double r = 1.0;
  int count = 201;
  int restarts = 20;
  int iterations = 4000;
  std::uint64_t seed = 0;
  MinimaxInit init = MinimaxInit::kMixed;
};

struct MinimaxReport : SearchReport {
  int n = 0;
  int target_dim = 0;
  double r = 1.0;
  int count = 0;
  double initial_value = 0.0;
  /// Closed-form distortion lower bound for this n.
  double theoretical_bound = 0.0;
  /// Largest geodesic nearest-neighbor distance of the sample.
  double mesh = 0.0;
  /// Circle certificate of the best images (n = 1 with scalar images only).
  std::optional<CertifiedBound> certificate;
  Relation best;
};

/// Minimizes the sampled distortion of a fixed sphere sample by subgradient
/// steps on the pairs attaining the current maximum deviation.
MinimaxReport minimax_distortion_search(const MinimaxOptions& opt);

/// Image points of the samples within geodesic distance eps of a direction.
struct HullAtScale {
  Pointd direction;
  double eps = 0.0;
  std::vector<int> members;
  PointMatrixd cloud;
};

HullAtScale hull_at_scale(const Relation& rel, const Pointd& direction, double eps);

/// Largest geodesic nearest-neighbor distance of the domain sample.
double sample_mesh(const Relation& rel);

struct AntipodalScanReport : SearchReport {
  bool found = false;
  int directions_tested = 0;
  double eps = 0.0;
  double mesh = 0.0;
  double sampled_distortion = 0.0;
  double q = 0.0;
  int direction_index = -1;
  Pointd direction;
  /// Sample indices of the extracted simplex vertices.
  std::vector<int> vertices_a;
  std::vector<int> vertices_b;
  Simplexd simplex_a;
  Simplexd simplex_b;
  double vertex_distance = 0.0;
  double simplex_edge = 0.0;
  double cloud_diameter = 0.0;
  double chain_lower = 0.0;
  double chain_upper = 0.0;
  bool chain_holds = false;
};

/// Finite-scale antipodal hull scan: finds a sampled direction x whose
/// eps-clouds at x and -x have intersecting hulls, extracts intersecting
/// simplices of complementary dimensions from them, and checks
///   pi r - dist - 2 eps - mesh <= d <= (dist + 2 eps + mesh) q.
/// A non-positive eps selects twice the sample mesh.
AntipodalScanReport antipodal_hull_scan(const Relation& rel, double eps = 0.0);

}  // namespace sdlab

#endif  // SDLAB_SEARCH_HPP
