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

#include "sdlab/intersect.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sdlab/error.hpp"

namespace sdlab {
namespace {

// Affine normalization so LP tolerances are relative to the data.
struct Frame {
  Pointd origin;
  double scale = 1.0;

  Frame(const Pointd& o, double s) : origin(o), scale(s > 0.0 ? s : 1.0) {}

  PointMatrixd apply(const PointMatrixd& pts) const { return (pts.colwise() - origin) / scale; }
};

Frame frame_for(const PointMatrixd& a, const PointMatrixd& b) {
  const Eigen::Index n = a.rows();
  Pointd origin = Pointd::Zero(n);
  if (a.cols() + b.cols() > 0)
    origin = (a.rowwise().sum() + b.rowwise().sum()) / static_cast<double>(a.cols() + b.cols());
  double scale = 0.0;
  if (a.cols()) scale = std::max(scale, (a.colwise() - origin).cwiseAbs().maxCoeff());
  if (b.cols()) scale = std::max(scale, (b.colwise() - origin).cwiseAbs().maxCoeff());
  return Frame(origin, scale);
}

// Zeroes weights below tol and renormalizes.
Pointd snap(const Pointd& w, double tol) {
  Pointd out = w;
  for (Eigen::Index i = 0; i < out.size(); ++i)
    if (out(i) < tol) out(i) = 0.0;
  const double total = out.sum();
  if (total > 0.0) out /= total;
  return out;
}

std::vector<int> positive_indices(const Pointd& w) {
  std::vector<int> out;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w(i) > 0.0) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace

std::optional<IntersectionWitness> hull_intersection(const PointMatrixd& a, const PointMatrixd& b, double tol) {
  if (a.cols() == 0 || b.cols() == 0) throw InputError("hull_intersection: point clouds must be nonempty");
  if (a.rows() != b.rows()) throw InputError("hull_intersection: ambient dimension mismatch");
  const Eigen::Index n = a.rows();
  const Eigen::Index na = a.cols();
  const Eigen::Index nb = b.cols();
  const Frame frame = frame_for(a, b);
  const PointMatrixd pa = frame.apply(a);
  const PointMatrixd pb = frame.apply(b);

  LPProblem<double> lp;
  lp.a = PointMatrixd::Zero(n + 2, na + nb);
  lp.a.topLeftCorner(n, na) = pa;
  lp.a.topRightCorner(n, nb) = -pb;
  lp.a.row(n).head(na).setOnes();
  lp.a.row(n + 1).tail(nb).setOnes();
  lp.b = Pointd::Zero(n + 2);
  lp.b(n) = 1.0;
  lp.b(n + 1) = 1.0;
  LPOptions<double> opt;
  opt.feasibility_tol = tol;
  const LPResult<double> res = solve_lp(lp, opt);
  if (!res.feasible()) return std::nullopt;

  Pointd alpha = res.x.head(na);
  Pointd beta = res.x.tail(nb);
  alpha /= alpha.sum();
  beta /= beta.sum();
  const Pointd sa = snap(alpha, tol);
  const Pointd sb = snap(beta, tol);
  // Keep the snapped weights only if the hulls still meet to within tol.
  if ((pa * sa - pb * sb).cwiseAbs().maxCoeff() <= std::max(tol, (pa * alpha - pb * beta).cwiseAbs().maxCoeff())) {
    alpha = sa;
    beta = sb;
  }

  IntersectionWitness w;
  w.point = 0.5 * (a * alpha + b * beta);
  w.alpha = BarycentricCoordsd(alpha);
  w.beta = BarycentricCoordsd(beta);
  w.support_a = positive_indices(alpha);
  w.support_b = positive_indices(beta);
  return w;
}

std::optional<IntersectionWitness> simplex_intersection(const Simplexd& a, const Simplexd& b, double tol) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("simplex_intersection: ambient dimension mismatch");
  return hull_intersection(a.vertices(), b.vertices(), tol);
}

Simplexd caratheodory_reduce(const Pointd& x, const PointMatrixd& cloud, double tol, BarycentricCoordsd* weights,
                             std::vector<int>* indices) {
  if (cloud.cols() == 0) throw InputError("caratheodory_reduce: empty point cloud");
  if (cloud.rows() != x.size()) throw InputError("caratheodory_reduce: ambient dimension mismatch");
  const Eigen::Index n = cloud.rows();
  const double scale = (cloud.colwise() - x).cwiseAbs().maxCoeff();

  auto finish = [&](std::vector<int> idx, Pointd lambda) {
    PointMatrixd verts(n, static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) verts.col(static_cast<Eigen::Index>(i)) = cloud.col(idx[i]);
    if (weights) *weights = BarycentricCoordsd(lambda / lambda.sum());
    if (indices) *indices = std::move(idx);
    return Simplexd(std::move(verts));
  };

  // A cloud point at x is its own certificate.
  for (Eigen::Index i = 0; i < cloud.cols(); ++i)
    if ((cloud.col(i) - x).cwiseAbs().maxCoeff() <= tol * std::max(1.0, scale))
      return finish({static_cast<int>(i)}, Pointd::Ones(1));

  const PointMatrixd local = (cloud.colwise() - x) / scale;
  LPProblem<double> lp;
  lp.a = PointMatrixd::Zero(n + 1, cloud.cols());
  lp.a.topRows(n) = local;
  lp.a.row(n).setOnes();
  lp.b = Pointd::Zero(n + 1);
  lp.b(n) = 1.0;
  LPOptions<double> opt;
  opt.feasibility_tol = tol;
  const LPResult<double> res = solve_lp(lp, opt);
  if (!res.feasible()) throw ContainmentError("caratheodory_reduce: point is not in the convex hull", res.infeasibility);

  const Pointd lambda_all = snap(res.x / res.x.sum(), tol);
  std::vector<int> idx = positive_indices(lambda_all);
  Pointd lambda(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) lambda(static_cast<Eigen::Index>(i)) = lambda_all(idx[i]);

  // Numerically dependent bases: walk along an affine dependence until a
  // weight vanishes.
  while (idx.size() > 1) {
    PointMatrixd sub(n, static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) sub.col(static_cast<Eigen::Index>(i)) = local.col(idx[i]);
    if (affinely_independent(sub)) break;
    PointMatrixd lifted(n + 1, sub.cols());
    lifted.topRows(n) = sub;
    lifted.row(n).setOnes();
    Eigen::JacobiSVD<PointMatrixd> svd(lifted, Eigen::ComputeFullV);
    Pointd mu = svd.matrixV().col(svd.matrixV().cols() - 1);
    if (mu.maxCoeff() <= 0.0) mu = -mu;
    double step = std::numeric_limits<double>::infinity();
    Eigen::Index drop = -1;
    for (Eigen::Index i = 0; i < mu.size(); ++i) {
      if (mu(i) > 0.0 && lambda(i) / mu(i) < step) {
        step = lambda(i) / mu(i);
        drop = i;
      }
    }
    lambda = (lambda - step * mu).cwiseMax(0.0);
    lambda(drop) = 0.0;
    idx.erase(idx.begin() + drop);
    Pointd next(lambda.size() - 1);
    next << lambda.head(drop), lambda.tail(lambda.size() - drop - 1);
    lambda = next / next.sum();
  }
  return finish(std::move(idx), std::move(lambda));
}

ReducedPair reduce_to_complementary_dims(const Simplexd& a, const Simplexd& b, const IntersectionWitness& w,
                                         double tol) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("reduce_to_complementary_dims: ambient dimension mismatch");
  if (w.alpha.size() != a.size() || w.beta.size() != b.size())
    throw InputError("reduce_to_complementary_dims: witness does not match the simplices");
  if (!a.independent() || !b.independent())
    throw InputError("reduce_to_complementary_dims: simplices must be affinely independent");

  const Eigen::Index n = a.ambient_dim();
  ReducedPair out;
  PointMatrixd va = a.vertices();
  PointMatrixd vb = b.vertices();
  Pointd alpha = w.alpha.weights();
  Pointd beta = w.beta.weights();
  out.kept_a.resize(static_cast<std::size_t>(a.size()));
  out.kept_b.resize(static_cast<std::size_t>(b.size()));
  for (int i = 0; i < a.size(); ++i) out.kept_a[static_cast<std::size_t>(i)] = i;
  for (int j = 0; j < b.size(); ++j) out.kept_b[static_cast<std::size_t>(j)] = j;

  auto remove_col = [](PointMatrixd& m, Eigen::Index c) {
    PointMatrixd next(m.rows(), m.cols() - 1);
    next << m.leftCols(c), m.rightCols(m.cols() - c - 1);
    m = std::move(next);
  };
  auto remove_entry = [](Pointd& v, Eigen::Index c) {
    Pointd next(v.size() - 1);
    next << v.head(c), v.tail(v.size() - c - 1);
    const double total = next.sum();
    v = total > 0.0 ? Pointd(next / total) : next;
  };

  while ((va.cols() - 1) + (vb.cols() - 1) > n) {
    const Eigen::Index k = va.cols() - 1;
    const Eigen::Index m = vb.cols() - 1;
    PointMatrixd stacked(n, k + m);
    stacked.leftCols(k) = va.rightCols(k).colwise() - va.col(0);
    stacked.rightCols(m) = -(vb.rightCols(m).colwise() - vb.col(0));
    Eigen::JacobiSVD<PointMatrixd> svd(stacked, Eigen::ComputeFullV);
    const Pointd z = svd.matrixV().col(k + m - 1);

    // Barycentric velocity of x + t u on each simplex; each sums to zero.
    Pointd da(k + 1);
    da(0) = -z.head(k).sum();
    da.tail(k) = z.head(k);
    Pointd db(m + 1);
    db(0) = -z.tail(m).sum();
    db.tail(m) = z.tail(m);

    struct Hit {
      double t;
      int side;
      Eigen::Index index;
    };
    std::vector<Hit> hits;
    for (Eigen::Index i = 0; i <= k; ++i)
      if (da(i) < -tol) hits.push_back({alpha(i) / -da(i), 0, i});
    for (Eigen::Index j = 0; j <= m; ++j)
      if (db(j) < -tol) hits.push_back({beta(j) / -db(j), 1, j});
    if (hits.empty()) throw DegeneracyError("reduce_to_complementary_dims: no boundary hit along the common line", 0.0);

    double tmin = std::numeric_limits<double>::infinity();
    for (const Hit& h : hits) tmin = std::min(tmin, h.t);
    const double band = 1e-12 * (1.0 + tmin);
    const Hit* chosen = nullptr;
    int ties = 0;
    for (const Hit& h : hits) {
      if (h.t > tmin + band) continue;
      ++ties;
      if (!chosen) chosen = &h;  // hits are already in (side, index) order
    }
    if (ties > 1) {
      std::ostringstream note;
      note << "ambiguous boundary hit at t=" << tmin << " (" << ties << " faces); kept "
           << (chosen->side == 0 ? "a" : "b") << " minus vertex "
           << (chosen->side == 0 ? out.kept_a : out.kept_b)[static_cast<std::size_t>(chosen->index)];
      out.notes.push_back(note.str());
    }

    alpha = (alpha + chosen->t * da).cwiseMax(0.0);
    beta = (beta + chosen->t * db).cwiseMax(0.0);
    if (chosen->side == 0) {
      remove_col(va, chosen->index);
      remove_entry(alpha, chosen->index);
      out.kept_a.erase(out.kept_a.begin() + chosen->index);
      beta /= beta.sum();
    } else {
      remove_col(vb, chosen->index);
      remove_entry(beta, chosen->index);
      out.kept_b.erase(out.kept_b.begin() + chosen->index);
      alpha /= alpha.sum();
    }
  }

  out.a = Simplexd(va);
  out.b = Simplexd(vb);
  out.witness.point = 0.5 * (va * alpha + vb * beta);
  out.witness.alpha = BarycentricCoordsd(alpha);
  out.witness.beta = BarycentricCoordsd(beta);
  out.witness.support_a = positive_indices(alpha);
  out.witness.support_b = positive_indices(beta);
  return out;
}

}  // namespace sdlab
