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

#ifndef SDLAB_GEOM_HPP
#define SDLAB_GEOM_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "sdlab/error.hpp"

namespace sdlab {

template <typename Scalar>
using Point = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Points stored as the columns of a dense matrix.
template <typename Scalar>
using PointMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Pointd = Point<double>;
using PointMatrixd = PointMatrix<double>;

template <typename Scalar>
inline constexpr Scalar kDefaultIndependenceTol = Scalar(1e-9);

/// Packs a list of equally sized points into matrix columns.
template <typename Scalar>
PointMatrix<Scalar> to_columns(const std::vector<Point<Scalar>>& points) {
  if (points.empty()) return PointMatrix<Scalar>(0, 0);
  const Eigen::Index n = points.front().size();
  PointMatrix<Scalar> out(n, static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != n) throw InputError("points have mismatched dimensions");
    out.col(static_cast<Eigen::Index>(i)) = points[i];
  }
  return out;
}

/// Largest pairwise squared distance between columns.
template <typename Derived>
typename Derived::Scalar squared_diameter(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  Scalar best = Scalar(0);
  for (Eigen::Index i = 0; i < points.cols(); ++i)
    for (Eigen::Index j = i + 1; j < points.cols(); ++j)
      best = std::max(best, (points.col(i) - points.col(j)).squaredNorm());
  return best;
}

template <typename Derived>
typename Derived::Scalar diameter(const Eigen::MatrixBase<Derived>& points) {
  using std::sqrt;
  return sqrt(squared_diameter(points));
}

/// Rank test on the Gram matrix of the difference vectors `p_i - p_0`.
///
/// The points are independent when the smallest Gram eigenvalue exceeds
/// `tol * diam^2`, which makes the test invariant under scaling.
template <typename Derived>
bool affinely_independent(const Eigen::MatrixBase<Derived>& points,
                          typename Derived::Scalar tol =
                              kDefaultIndependenceTol<typename Derived::Scalar>) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index count = points.cols();
  if (count == 0) throw InputError("affinely_independent: need at least one point");
  if (count == 1) return true;
  if (count - 1 > points.rows()) return false;
  const Scalar diam2 = squared_diameter(points);
  if (!(diam2 > Scalar(0))) return false;
  PointMatrix<Scalar> diffs = points.rightCols(count - 1).colwise() - points.col(0);
  PointMatrix<Scalar> gram = diffs.transpose() * diffs;
  Eigen::SelfAdjointEigenSolver<PointMatrix<Scalar>> eig(gram, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff() > tol * diam2;
}

/// Dimension of the affine hull, using the same relative eigenvalue
/// threshold as `affinely_independent`.
template <typename Derived>
int affine_dimension(const Eigen::MatrixBase<Derived>& points,
                     typename Derived::Scalar tol = kDefaultIndependenceTol<typename Derived::Scalar>) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index count = points.cols();
  if (count == 0) throw InputError("affine_dimension: need at least one point");
  const Scalar diam2 = squared_diameter(points);
  if (count == 1 || !(diam2 > Scalar(0))) return 0;
  PointMatrix<Scalar> diffs = points.rightCols(count - 1).colwise() - points.col(0);
  PointMatrix<Scalar> gram = diffs.transpose() * diffs;
  Eigen::SelfAdjointEigenSolver<PointMatrix<Scalar>> eig(gram, Eigen::EigenvaluesOnly);
  return static_cast<int>((eig.eigenvalues().array() > tol * diam2).count());
}

template <typename Scalar>
bool affinely_independent(const std::vector<Point<Scalar>>& points,
                          Scalar tol = kDefaultIndependenceTol<Scalar>) {
  if (points.empty()) throw InputError("affinely_independent: need at least one point");
  return affinely_independent(to_columns(points), tol);
}

/// Ordered vertex list; the vertices are the columns of `vertices()`.
template <typename Scalar>
class Simplex {
 public:
  Simplex() = default;

  explicit Simplex(PointMatrix<Scalar> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.cols() == 0) throw InputError("simplex needs at least one vertex");
    if (!vertices_.allFinite()) throw InputError("simplex vertices must be finite");
  }

  explicit Simplex(const std::vector<Point<Scalar>>& vertices) : Simplex(to_columns(vertices)) {}

  Eigen::Index dim() const { return vertices_.cols() - 1; }
  Eigen::Index size() const { return vertices_.cols(); }
  Eigen::Index ambient_dim() const { return vertices_.rows(); }

  auto vertex(Eigen::Index i) const { return vertices_.col(i); }
  const PointMatrix<Scalar>& vertices() const { return vertices_; }

  /// Longest edge; zero for a vertex.
  Scalar max_edge() const { return diameter(vertices_); }

  bool independent(Scalar tol = kDefaultIndependenceTol<Scalar>) const {
    return affinely_independent(vertices_, tol);
  }

 private:
  PointMatrix<Scalar> vertices_;
};

using Simplexd = Simplex<double>;

template <typename Scalar>
Point<Scalar> barycenter(const Simplex<Scalar>& s) {
  return s.vertices().rowwise().mean();
}

/// Calls `fn(indices)` for every size-`k` subset of `{0..n-1}` in
/// lexicographic order.
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(static_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

template <typename Scalar>
Simplex<Scalar> sub_simplex(const Simplex<Scalar>& s, const std::vector<int>& indices) {
  PointMatrix<Scalar> v(s.ambient_dim(), static_cast<Eigen::Index>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i) v.col(static_cast<Eigen::Index>(i)) = s.vertex(indices[i]);
  return Simplex<Scalar>(std::move(v));
}

/// All k-faces, ordered lexicographically by vertex index subset.
template <typename Scalar>
std::vector<Simplex<Scalar>> faces(const Simplex<Scalar>& s, int k) {
  if (k < 0 || k > s.dim()) throw InputError("faces: k must lie in [0, dim]");
  std::vector<Simplex<Scalar>> out;
  for_each_combination(static_cast<int>(s.size()), k + 1,
                       [&](const std::vector<int>& idx) { out.push_back(sub_simplex(s, idx)); });
  return out;
}

/// Regular m-simplex with edge `edge`, barycenter at the origin, lying in the
/// span of `basis` (an ambient_dim x m matrix with orthonormal columns;
/// defaults to the first m coordinate axes).
template <typename Scalar>
Simplex<Scalar> regular_simplex(int m, Scalar edge, int ambient_dim,
                                const std::optional<PointMatrix<Scalar>>& basis = std::nullopt) {
  using std::sqrt;
  if (m < 0) throw InputError("regular_simplex: m must be nonnegative");
  if (!(edge > Scalar(0))) throw InputError("regular_simplex: edge length must be positive");
  if (ambient_dim < m) throw InputError("regular_simplex: ambient dimension smaller than m");
  if (m == 0) return Simplex<Scalar>(PointMatrix<Scalar>::Zero(ambient_dim, 1));

  PointMatrix<Scalar> frame;
  if (basis) {
    if (basis->rows() != ambient_dim || basis->cols() < m)
      throw InputError("regular_simplex: basis must be ambient_dim x (>= m)");
    frame = basis->leftCols(m);
    const Scalar defect =
        (frame.transpose() * frame - PointMatrix<Scalar>::Identity(m, m)).cwiseAbs().maxCoeff();
    if (defect > Scalar(1e-10)) throw InputError("regular_simplex: basis is not orthonormal");
  } else {
    frame = PointMatrix<Scalar>::Identity(ambient_dim, m);
  }

  // Standard basis of R^{m+1}, centered at its mean and scaled to edge length.
  const int p = m + 1;
  PointMatrix<Scalar> centered = PointMatrix<Scalar>::Identity(p, p);
  centered.array() -= Scalar(1) / Scalar(p);
  centered *= edge / sqrt(Scalar(2));

  // Orthonormal frame of the sum-zero hyperplane.
  Eigen::HouseholderQR<PointMatrix<Scalar>> qr(centered.leftCols(m));
  PointMatrix<Scalar> q = qr.householderQ() * PointMatrix<Scalar>::Identity(p, m);
  PointMatrix<Scalar> local = q.transpose() * centered;
  return Simplex<Scalar>(frame * local);
}

/// Point on the round sphere of radius `radius` centered at the origin.
template <typename Scalar>
class SpherePoint {
 public:
  SpherePoint(Point<Scalar> coords, Scalar radius) : coords_(std::move(coords)), radius_(radius) {
    using std::abs;
    if (!(radius_ > Scalar(0))) throw InputError("sphere radius must be positive");
    if (!coords_.allFinite()) throw InputError("sphere point must be finite");
    if (abs(coords_.norm() - radius_) > Scalar(1e-9) * radius_)
      throw InputError("sphere point does not lie on the sphere");
  }

  const Point<Scalar>& coords() const { return coords_; }
  Scalar radius() const { return radius_; }
  /// Intrinsic dimension n of S^n.
  Eigen::Index sphere_dim() const { return coords_.size() - 1; }

  SpherePoint antipode() const { return SpherePoint(-coords_, radius_); }

 private:
  Point<Scalar> coords_;
  Scalar radius_;
};

using SpherePointd = SpherePoint<double>;

/// Angle between two nonzero vectors, accurate near 0 and near pi.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar angle_between(const Eigen::MatrixBase<DerivedA>& a,
                                        const Eigen::MatrixBase<DerivedB>& b) {
  using std::atan2;
  using Scalar = typename DerivedA::Scalar;
  const Point<Scalar> ua = a.normalized();
  const Point<Scalar> ub = b.normalized();
  return Scalar(2) * atan2((ua - ub).norm(), (ua + ub).norm());
}

/// Geodesic distance r * angle on the sphere, in [0, pi r].
template <typename Scalar>
Scalar sphere_distance(const SpherePoint<Scalar>& x, const SpherePoint<Scalar>& y) {
  using std::abs;
  if (x.coords().size() != y.coords().size())
    throw InputError("sphere_distance: dimension mismatch");
  if (abs(x.radius() - y.radius()) > Scalar(1e-12) * x.radius())
    throw InputError("sphere_distance: radius mismatch");
  return x.radius() * angle_between(x.coords(), y.coords());
}

/// Deterministic sample of N points on S^n_r: equally spaced angles for
/// n = 1, a Fibonacci lattice for n = 2, seeded isotropic directions above.
template <typename Scalar>
std::vector<SpherePoint<Scalar>> sample_sphere(int n, Scalar r, int count, std::uint64_t seed) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  if (n < 1) throw InputError("sample_sphere: n must be >= 1");
  if (count < 1) throw InputError("sample_sphere: need at least one point");
  if (!(r > Scalar(0))) throw InputError("sample_sphere: radius must be positive");
  const Scalar pi = std::numbers::pi_v<Scalar>;
  std::vector<SpherePoint<Scalar>> out;
  out.reserve(static_cast<std::size_t>(count));
  if (n == 1) {
    for (int k = 0; k < count; ++k) {
      const Scalar theta = Scalar(2) * pi * Scalar(k) / Scalar(count);
      Point<Scalar> c(2);
      c << r * cos(theta), r * sin(theta);
      out.emplace_back(std::move(c), r);
    }
  } else if (n == 2) {
    const Scalar golden = pi * (Scalar(3) - sqrt(Scalar(5)));
    for (int k = 0; k < count; ++k) {
      const Scalar z = Scalar(1) - Scalar(2 * k + 1) / Scalar(count);
      const Scalar rho = sqrt(std::max(Scalar(0), Scalar(1) - z * z));
      const Scalar phi = golden * Scalar(k);
      Point<Scalar> c(3);
      c << rho * cos(phi), rho * sin(phi), z;
      c *= r / c.norm();
      out.emplace_back(std::move(c), r);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (static_cast<int>(out.size()) < count) {
      Point<Scalar> c(n + 1);
      for (int i = 0; i <= n; ++i) c(i) = Scalar(gauss(rng));
      const Scalar norm = c.norm();
      if (!(norm > Scalar(1e-8))) continue;
      c *= r / norm;
      out.emplace_back(std::move(c), r);
    }
  }
  return out;
}

/// Nonnegative weights summing to one.
template <typename Scalar>
class BarycentricCoords {
 public:
  BarycentricCoords() = default;
  explicit BarycentricCoords(Point<Scalar> weights, Scalar tol = Scalar(1e-9))
      : weights_(std::move(weights)) {
    using std::abs;
    if (weights_.size() == 0) throw InputError("barycentric coordinates must be nonempty");
    if (!weights_.allFinite() || weights_.minCoeff() < -tol || abs(weights_.sum() - Scalar(1)) > tol)
      throw InputError("barycentric weights must be nonnegative and sum to one");
  }

  const Point<Scalar>& weights() const { return weights_; }
  Eigen::Index size() const { return weights_.size(); }
  Scalar operator[](Eigen::Index i) const { return weights_(i); }

  /// Indices of weights strictly above `tol`.
  std::vector<int> support(Scalar tol = Scalar(0)) const {
    std::vector<int> out;
    for (Eigen::Index i = 0; i < weights_.size(); ++i)
      if (weights_(i) > tol) out.push_back(static_cast<int>(i));
    return out;
  }

 private:
  Point<Scalar> weights_;
};

using BarycentricCoordsd = BarycentricCoords<double>;

}  // namespace sdlab

#endif  // SDLAB_GEOM_HPP
