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

#ifndef SDLAB_CIRCUMSPHERE_HPP
#define SDLAB_CIRCUMSPHERE_HPP

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <list>
#include <numeric>
#include <random>
#include <vector>

#include "sdlab/error.hpp"
#include "sdlab/geom.hpp"
#include "sdlab/lp.hpp"

namespace sdlab {

enum class SphereFlavor { kEquidistant, kMinEnclosing };

template <typename Scalar>
struct CircumSphere {
  Point<Scalar> center;
  Scalar radius = Scalar(0);
  SphereFlavor flavor = SphereFlavor::kEquidistant;
  /// For the minimum enclosing flavor: boundary points whose hull contains
  /// the center (at most n+1 of them), certifying minimality.
  std::vector<int> support;
};

using CircumSphered = CircumSphere<double>;

template <typename Scalar>
inline constexpr Scalar kDegeneracyRcond = Scalar(1e-12);

namespace detail {

/// Smallest sphere through the given columns, centered in their affine
/// hull. Affinely dependent inputs fall back to a minimum-norm solve.
template <typename Scalar>
CircumSphere<Scalar> sphere_through(const PointMatrix<Scalar>& pts) {
  CircumSphere<Scalar> s;
  s.flavor = SphereFlavor::kMinEnclosing;
  if (pts.cols() == 0) {
    s.center = Point<Scalar>::Zero(pts.rows());
    s.radius = Scalar(-1);
    return s;
  }
  if (pts.cols() == 1) {
    s.center = pts.col(0);
    return s;
  }
  PointMatrix<Scalar> diffs = pts.rightCols(pts.cols() - 1).colwise() - pts.col(0);
  PointMatrix<Scalar> gram = diffs.transpose() * diffs;
  Point<Scalar> rhs = Scalar(0.5) * gram.diagonal();
  Point<Scalar> coeff = gram.completeOrthogonalDecomposition().solve(rhs);
  s.center = pts.col(0) + diffs * coeff;
  for (Eigen::Index i = 0; i < pts.cols(); ++i)
    s.radius = std::max(s.radius, (pts.col(i) - s.center).norm());
  return s;
}

template <typename Scalar>
class MoveToFrontBall {
 public:
  MoveToFrontBall(const PointMatrix<Scalar>& pts, Scalar slack) : pts_(pts), slack_(slack) {}

  CircumSphere<Scalar> run(std::list<int>& order) {
    std::vector<int> boundary;
    return recurse(order, order.end(), boundary);
  }

 private:
  bool contains(const CircumSphere<Scalar>& b, int i) const {
    return b.radius >= Scalar(0) && (pts_.col(i) - b.center).norm() <= b.radius + slack_;
  }

  CircumSphere<Scalar> ball_of(const std::vector<int>& boundary) const {
    PointMatrix<Scalar> sub(pts_.rows(), static_cast<Eigen::Index>(boundary.size()));
    for (std::size_t i = 0; i < boundary.size(); ++i) sub.col(static_cast<Eigen::Index>(i)) = pts_.col(boundary[i]);
    return sphere_through(sub);
  }

  CircumSphere<Scalar> recurse(std::list<int>& order, std::list<int>::iterator end,
                               std::vector<int>& boundary) {
    CircumSphere<Scalar> ball = ball_of(boundary);
    if (static_cast<Eigen::Index>(boundary.size()) == pts_.rows() + 1) return ball;
    for (auto it = order.begin(); it != end;) {
      auto next = std::next(it);
      if (!contains(ball, *it)) {
        boundary.push_back(*it);
        ball = recurse(order, it, boundary);
        boundary.pop_back();
        order.splice(order.begin(), order, it);
      }
      it = next;
    }
    return ball;
  }

  const PointMatrix<Scalar>& pts_;
  Scalar slack_;
};

}  // namespace detail

/// Unique point of the affine hull equidistant from all vertices.
///
/// Throws DegeneracyError when the squared singular-value ratio of the edge
/// matrix falls below 1e-12.
template <typename Scalar>
CircumSphere<Scalar> equidistant_circumcenter(const Simplex<Scalar>& s) {
  CircumSphere<Scalar> out;
  out.flavor = SphereFlavor::kEquidistant;
  if (s.size() == 1) {
    out.center = s.vertex(0);
    return out;
  }
  PointMatrix<Scalar> diffs = s.vertices().rightCols(s.size() - 1).colwise() - s.vertex(0);
  if (diffs.cols() > diffs.rows())
    throw DegeneracyError("equidistant_circumcenter: more vertices than ambient dimension + 1", 0.0);
  Eigen::JacobiSVD<PointMatrix<Scalar>> svd(diffs);
  const auto& sv = svd.singularValues();
  const Scalar ratio = sv(0) > Scalar(0) ? sv(sv.size() - 1) / sv(0) : Scalar(0);
  const Scalar rcond = ratio * ratio;
  if (!(rcond >= kDegeneracyRcond<Scalar>))
    throw DegeneracyError("equidistant_circumcenter: near-degenerate simplex", static_cast<double>(rcond));
  PointMatrix<Scalar> gram = diffs.transpose() * diffs;
  Point<Scalar> coeff = gram.ldlt().solve(Scalar(0.5) * gram.diagonal());
  out.center = s.vertex(0) + diffs * coeff;
  out.radius = (s.vertex(0) - out.center).norm();
  return out;
}

/// Points within `rel_tol * (1 + radius)` of the sphere, reduced to a basic
/// subset whose convex hull contains the center; empty if none does.
template <typename Scalar>
std::vector<int> enclosing_support(const PointMatrix<Scalar>& pts, const CircumSphere<Scalar>& ball,
                                   Scalar rel_tol = Scalar(1e-9)) {
  std::vector<int> near;
  const Scalar band = rel_tol * (Scalar(1) + ball.radius);
  for (Eigen::Index i = 0; i < pts.cols(); ++i) {
    using std::abs;
    if (abs((pts.col(i) - ball.center).norm() - ball.radius) <= band) near.push_back(static_cast<int>(i));
  }
  if (near.empty()) return {};
  if (!(ball.radius > Scalar(0))) return {near.front()};
  const Eigen::Index n = pts.rows();
  LPProblem<Scalar> lp;
  lp.a.resize(n + 1, static_cast<Eigen::Index>(near.size()));
  lp.b = Point<Scalar>::Zero(n + 1);
  lp.b(n) = Scalar(1);
  for (std::size_t j = 0; j < near.size(); ++j) {
    const auto col = static_cast<Eigen::Index>(j);
    lp.a.col(col).head(n) = (pts.col(near[j]) - ball.center) / ball.radius;
    lp.a(n, col) = Scalar(1);
  }
  LPOptions<Scalar> opt;
  opt.feasibility_tol = Scalar(1e-7);
  const LPResult<Scalar> res = solve_lp(lp, opt);
  if (!res.feasible()) return {};
  std::vector<int> support;
  for (std::size_t j = 0; j < near.size(); ++j)
    if (res.x(static_cast<Eigen::Index>(j)) > Scalar(0)) support.push_back(near[j]);
  return support;
}

/// Smallest closed ball containing every column of `points`.
///
/// Move-to-front recursion over a seeded shuffle of the input.
template <typename Derived>
CircumSphere<typename Derived::Scalar> min_enclosing_ball(const Eigen::MatrixBase<Derived>& points,
                                                          std::uint64_t seed = 0) {
  using Scalar = typename Derived::Scalar;
  if (points.cols() == 0) throw InputError("min_enclosing_ball: need at least one point");
  const PointMatrix<Scalar> pts = points;
  std::vector<int> idx(static_cast<std::size_t>(pts.cols()));
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::list<int> order(idx.begin(), idx.end());
  const Scalar slack = Scalar(1e-12) * (Scalar(1) + diameter(pts));
  detail::MoveToFrontBall<Scalar> solver(pts, slack);
  CircumSphere<Scalar> ball = solver.run(order);
  ball.flavor = SphereFlavor::kMinEnclosing;
  // Enforce containment exactly for the points accepted within slack.
  for (Eigen::Index i = 0; i < pts.cols(); ++i) ball.radius = std::max(ball.radius, (pts.col(i) - ball.center).norm());
  ball.support = enclosing_support(pts, ball);
  return ball;
}

template <typename Scalar>
CircumSphere<Scalar> min_enclosing_ball(const Simplex<Scalar>& s, std::uint64_t seed = 0) {
  return min_enclosing_ball(s.vertices(), seed);
}

/// Upper bound D sqrt(k / (2(k+1))) on the enclosing radius of a set of
/// diameter D whose affine hull has dimension k.
template <typename Scalar>
Scalar jung_bound(Scalar diam, int k) {
  using std::sqrt;
  if (k < 0) throw InputError("jung_bound: dimension must be nonnegative");
  if (diam < Scalar(0)) throw InputError("jung_bound: diameter must be nonnegative");
  return diam * sqrt(Scalar(k) / (Scalar(2) * Scalar(k + 1)));
}

}  // namespace sdlab

#endif  // SDLAB_CIRCUMSPHERE_HPP
