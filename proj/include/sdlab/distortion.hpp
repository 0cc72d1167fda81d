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

#ifndef SDLAB_DISTORTION_HPP
#define SDLAB_DISTORTION_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "sdlab/geom.hpp"

namespace sdlab {

/// Sampled relation from S^n_r into Euclidean space: pair i is
/// (domain.col(i), image.col(i)).
struct Relation {
  PointMatrixd domain;
  double radius = 1.0;
  PointMatrixd image;

  Relation() = default;
  Relation(PointMatrixd domain_points, double r, PointMatrixd image_points);
  Relation(const std::vector<SpherePointd>& xs, const std::vector<Pointd>& ys);

  Eigen::Index size() const { return domain.cols(); }
  Eigen::Index sphere_dim() const { return domain.rows() - 1; }
  Eigen::Index image_dim() const { return image.rows(); }

  /// Pairs restricted to `indices`, in the given order.
  Relation subset(const std::vector<int>& indices) const;
};

/// Where the distortion supremum over a finite sample is attained.
struct DistortionWitness {
  double value = 0.0;
  int i = 0;
  int j = 0;
};

/// max |d_Y(y_i, y_j) - d_X(x_i, x_j)| over i < j with caller-supplied
/// metrics; `domain_metric(i, j)` and `image_metric(i, j)` take indices.
template <typename DomainMetric, typename ImageMetric>
DistortionWitness distortion_with(Eigen::Index count, DomainMetric&& domain_metric, ImageMetric&& image_metric) {
  DistortionWitness best;
  for (Eigen::Index i = 0; i < count; ++i)
    for (Eigen::Index j = i + 1; j < count; ++j) {
      const double dev = std::abs(image_metric(i, j) - domain_metric(i, j));
      if (dev > best.value) best = {dev, static_cast<int>(i), static_cast<int>(j)};
    }
  return best;
}

/// Exact O(N^2) scan with the geodesic sphere metric and the Euclidean image
/// metric. Blocks of rows run in parallel for large samples; the result does
/// not depend on the schedule.
DistortionWitness distortion_witness(const Relation& rel);

inline double distortion(const Relation& rel) { return distortion_witness(rel).value; }

/// Pairwise geodesic distances of the domain sample.
PointMatrixd domain_distances(const Relation& rel);

/// Sphere sample with images given by dropping the last coordinate.
Relation projection_map_sample(int n, double r, int count, std::uint64_t seed);

/// theta -> r theta / 3 on [0, 2 pi); discontinuous at theta = 0.
double linear_circle_map(double theta, double r);

/// The m equally spaced circle points x_k = r (cos 2 pi k/m, sin 2 pi k/m)
/// paired with the scalar images `values[k]`.
Relation circle_grid_relation(std::span<const double> values, double r);

/// Values of `linear_circle_map` on the m-point circle grid.
std::vector<double> linear_circle_values(int m, double r);

/// Exact distortion on the circle grid using the closed-form grid metric
/// r (2 pi / m) min(|i-j|, m-|i-j|).
double circle_grid_distortion(std::span<const double> values, double r);

/// Two almost antipodal grid points with equal images.
struct TieCase {
  int i = 0;
  int j = 0;
};

/// A monotone path k -> k+s -> k+1 (s = (m+1)/2) along the almost-antipodal
/// cycle. Configuration 1: f(x_k) <= f(x_{k+s}) <= f(x_{k+1}); 2: reversed.
struct PathCase {
  int k = 0;
  int configuration = 1;
};

struct CertifiedBound {
  double value = 0.0;
  int m = 0;
  double r = 1.0;
  std::variant<TieCase, PathCase> certificate;
};

/// Combinatorial lower bound on the distortion of any circle map with the
/// given values on the odd m-point grid. Ties give pi r (m-1)/m; otherwise
/// an odd cycle forces a monotone 2-path giving 2 pi r (m-2)/(3m).
CertifiedBound certify_circle_bound(std::span<const double> values, double r);

/// Bound recomputed from the certificate case and (m, r) alone.
double replay_bound(const CertifiedBound& cert);

/// True when the certificate's hypothesis holds for `values`.
bool certificate_holds(const CertifiedBound& cert, std::span<const double> values);

}  // namespace sdlab

#endif  // SDLAB_DISTORTION_HPP
