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

#ifndef SDLAB_INTERSECT_HPP
#define SDLAB_INTERSECT_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "sdlab/geom.hpp"
#include "sdlab/lp.hpp"

namespace sdlab {

inline constexpr double kFeasibilityTol = 1e-10;

/// Containment tolerance for a reduced support, relative to the cloud scale.
/// Independence discards directions thinner than sqrt(tol) times the
/// diameter, so x may sit that far off the hull of the surviving points.
inline const double kReducedContainmentTol = std::sqrt(kDefaultIndependenceTol<double>);

/// A common point of two convex hulls with its convex weights on each side.
struct IntersectionWitness {
  Pointd point;
  BarycentricCoordsd alpha;
  BarycentricCoordsd beta;
  std::vector<int> support_a;
  std::vector<int> support_b;
};

/// Feasibility LP for conv(a) ∩ conv(b) over the columns of each matrix.
/// Returns a basic solution, so each support has at most n+1 indices.
std::optional<IntersectionWitness> hull_intersection(const PointMatrixd& a, const PointMatrixd& b,
                                                     double tol = kFeasibilityTol);

std::optional<IntersectionWitness> simplex_intersection(const Simplexd& a, const Simplexd& b,
                                                        double tol = kFeasibilityTol);

/// Affinely independent subset of `cloud` (at most n+1 points) whose hull
/// contains `x`. Throws ContainmentError if x is outside conv(cloud).
/// When `weights` is given it receives the convex weights of x. For clouds
/// thinner than the independence tolerance in some direction, x is contained
/// only to within kReducedContainmentTol.
Simplexd caratheodory_reduce(const Pointd& x, const PointMatrixd& cloud, double tol = kFeasibilityTol,
                             BarycentricCoordsd* weights = nullptr, std::vector<int>* indices = nullptr);

struct ReducedPair {
  Simplexd a;
  Simplexd b;
  IntersectionWitness witness;
  /// Vertex indices of the surviving faces in the original simplices.
  std::vector<int> kept_a;
  std::vector<int> kept_b;
  /// Ambiguous boundary hits resolved by lexicographic order.
  std::vector<std::string> notes;
};

/// Replaces the simplices by intersecting faces until dim a + dim b <= n.
///
/// Each step marches from the witness along a line in both affine hulls to
/// the nearest boundary hit and keeps the proper face that was hit.
ReducedPair reduce_to_complementary_dims(const Simplexd& a, const Simplexd& b, const IntersectionWitness& w,
                                         double tol = 1e-12);

struct VertexPair {
  int i = 0;
  int j = 0;
  double distance = 0.0;
};

/// Closest cross vertex pair; ties go to the lexicographically smallest (i, j).
template <typename DerivedA, typename DerivedB>
VertexPair min_vertex_distance(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows()) throw InputError("min_vertex_distance: ambient dimension mismatch");
  if (a.cols() == 0 || b.cols() == 0) throw InputError("min_vertex_distance: empty vertex set");
  VertexPair best{0, 0, (a.col(0) - b.col(0)).norm()};
  for (Eigen::Index i = 0; i < a.cols(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      const double d = (a.col(i) - b.col(j)).norm();
      if (d < best.distance) best = {static_cast<int>(i), static_cast<int>(j), d};
    }
  return best;
}

inline VertexPair min_vertex_distance(const Simplexd& a, const Simplexd& b) {
  return min_vertex_distance(a.vertices(), b.vertices());
}

}  // namespace sdlab

#endif  // SDLAB_INTERSECT_HPP
