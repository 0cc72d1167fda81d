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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "sdlab/bounds.hpp"
#include "sdlab/error.hpp"

namespace sdlab {
namespace {

constexpr double kPi = std::numbers::pi;

PointMatrixd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  PointMatrixd out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = gauss(rng);
  return out;
}

Pointd random_weights(Eigen::Index size, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  Pointd w(size);
  for (Eigen::Index i = 0; i < size; ++i) w(i) = expo(rng);
  return w / w.sum();
}

double gap_ratio(const PointMatrixd& a, const PointMatrixd& b) {
  const double longest = std::max(diameter(a), diameter(b));
  if (!(longest > 0.0)) return 0.0;
  return min_vertex_distance(a, b).distance / longest;
}

// Smooth stand-in for gap_ratio: p-norm soft minimum of cross distances over
// p-norm soft maximum of edges. Tends to gap_ratio as p grows.
double soft_gap_ratio(const PointMatrixd& a, const PointMatrixd& b, double p) {
  std::vector<double> cross;
  std::vector<double> edges;
  for (Eigen::Index i = 0; i < a.cols(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) cross.push_back((a.col(i) - b.col(j)).norm());
  for (const PointMatrixd* s : {&a, &b})
    for (Eigen::Index i = 0; i < s->cols(); ++i)
      for (Eigen::Index j = i + 1; j < s->cols(); ++j) edges.push_back((s->col(i) - s->col(j)).norm());
  if (edges.empty()) return 0.0;
  const double lo = *std::min_element(cross.begin(), cross.end());
  const double hi = *std::max_element(edges.begin(), edges.end());
  if (!(lo > 0.0) || !(hi > 0.0)) return 0.0;
  double sum_lo = 0.0;
  double sum_hi = 0.0;
  for (double d : cross) sum_lo += std::pow(lo / d, p);
  for (double e : edges) sum_hi += std::pow(e / hi, p);
  return (lo * std::pow(sum_lo, -1.0 / p)) / (hi * std::pow(sum_hi, 1.0 / p));
}

double geodesic(const Pointd& u, const Pointd& v, double r) {
  return 2.0 * r * std::atan2((u - v).norm(), (u + v).norm());
}

}  // namespace

std::pair<Simplexd, Simplexd> random_intersecting_pair(int n, double edge, int k, int m, std::mt19937_64& rng) {
  if (n < 1) throw InputError("random_intersecting_pair: n must be >= 1");
  if (k < 0 || m < 0 || k > n || m > n) throw InputError("random_intersecting_pair: simplex dimensions must lie in [0, n]");
  if (!(edge > 0.0)) throw InputError("random_intersecting_pair: edge must be positive");
  std::uniform_real_distribution<double> shrink(0.2, 1.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    PointMatrixd a = gaussian_matrix(n, k + 1, rng);
    PointMatrixd b = gaussian_matrix(n, m + 1, rng);
    if (!affinely_independent(a) || !affinely_independent(b)) continue;
    // Put a random point of each simplex at the origin.
    a = a.colwise() - a * random_weights(k + 1, rng);
    b = b.colwise() - b * random_weights(m + 1, rng);
    b *= shrink(rng);
    const double longest = std::max(diameter(a), diameter(b));
    if (longest > 0.0) {
      a *= edge / longest;
      b *= edge / longest;
    }
    Simplexd sa(std::move(a));
    Simplexd sb(std::move(b));
    if (simplex_intersection(sa, sb)) return {std::move(sa), std::move(sb)};
  }
  throw std::runtime_error("random_intersecting_pair: could not draw a nondegenerate pair");
}

std::pair<Simplexd, Simplexd> random_intersecting_pair(int n, double edge, int k, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_intersecting_pair(n, edge, k, m, rng);
}

VertexGapReport adversarial_vertex_gap_search(const VertexGapOptions& opt) {
  if (opt.trials < 1 || opt.climb_steps < 1) throw InputError("adversarial search: trials and climb_steps must be >= 1");
  if (!(opt.edge > 0.0)) throw InputError("adversarial search: edge must be positive");
  VertexGapReport report;
  report.kind = "adversarial";
  report.seed = opt.seed;
  report.trials = opt.trials;
  report.n = opt.n;
  report.edge = opt.edge;
  std::tie(report.k, report.m) = optimal_split(opt.n);
  if (opt.init) {
    report.k = static_cast<int>(opt.init->first.dim());
    report.m = static_cast<int>(opt.init->second.dim());
  }
  report.bound = vertex_gap_bound(opt.n, opt.edge).value;
  report.best_value = -1.0;

  for (int trial = 0; trial < opt.trials; ++trial) {
    std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(trial));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<int> coin(0, 1);
    auto start = opt.init ? *opt.init : random_intersecting_pair(opt.n, opt.edge, report.k, report.m, rng);
    PointMatrixd a = start.first.vertices();
    PointMatrixd b = start.second.vertices();
    auto witness = hull_intersection(a, b);
    if (!witness) throw InputError("adversarial search: initial pair does not intersect");
    // Moves are accepted on the smooth surrogate with a sharpening exponent;
    // the best configuration is judged by the exact ratio.
    constexpr double kSharpStart = 16.0;
    constexpr double kSharpEnd = 4096.0;
    double best_ratio = gap_ratio(a, b);
    PointMatrixd best_a = a;
    PointMatrixd best_b = b;
    Pointd best_center = witness->point;
    double sigma = 0.2;

    for (int step = 0; step < opt.climb_steps; ++step) {
      const double sharp =
          kSharpStart * std::pow(kSharpEnd / kSharpStart, static_cast<double>(step) / opt.climb_steps);
      const double current = soft_gap_ratio(a, b, sharp);
      const double scale = std::max(diameter(a), diameter(b));
      PointMatrixd na = a;
      PointMatrixd nb = b;
      if (coin(rng) == 0) {
        // One vertex of one simplex.
        const Eigen::Index total = a.cols() + b.cols();
        const Eigen::Index pick = std::uniform_int_distribution<Eigen::Index>(0, total - 1)(rng);
        PointMatrixd& target = pick < a.cols() ? na : nb;
        const Eigen::Index col = pick < a.cols() ? pick : pick - a.cols();
        for (Eigen::Index i = 0; i < target.rows(); ++i) target(i, col) += sigma * scale * gauss(rng);
      } else {
        for (Eigen::Index j = 0; j < na.cols(); ++j)
          for (Eigen::Index i = 0; i < na.rows(); ++i) na(i, j) += sigma * scale * gauss(rng);
        for (Eigen::Index j = 0; j < nb.cols(); ++j)
          for (Eigen::Index i = 0; i < nb.rows(); ++i) nb(i, j) += sigma * scale * gauss(rng);
      }
      auto next = hull_intersection(na, nb);
      if (!next) {
        // Repair: translate b so the old witness weights meet again.
        nb = nb.colwise() + (na * witness->alpha.weights() - nb * witness->beta.weights());
        next = hull_intersection(na, nb);
      }
      if (!next || !affinely_independent(na) || !affinely_independent(nb)) {
        sigma = std::max(1e-9, sigma * 0.95);
        continue;
      }
      const double value = soft_gap_ratio(na, nb, sharp);
      if (value > current) {
        a = std::move(na);
        b = std::move(nb);
        witness = std::move(next);
        sigma = std::min(0.5, sigma * 1.2);
        const double exact = gap_ratio(a, b);
        if (exact > best_ratio) {
          best_ratio = exact;
          best_a = a;
          best_b = b;
          best_center = witness->point;
        }
      } else {
        sigma = std::max(1e-9, sigma * 0.95);
      }
    }

    // Rescale about the witness so the longest edge is exactly L.
    a = std::move(best_a);
    b = std::move(best_b);
    const double longest = std::max(diameter(a), diameter(b));
    if (longest > 0.0) {
      a = ((a.colwise() - best_center) * (opt.edge / longest)).colwise() + best_center;
      b = ((b.colwise() - best_center) * (opt.edge / longest)).colwise() + best_center;
    }
    const double value = best_ratio * opt.edge;
    report.trace.push_back(value);
    if (value > report.best_value) {
      report.best_value = value;
      report.best_a = Simplexd(a);
      report.best_b = Simplexd(b);
    }
  }
  report.bound_respected = report.best_value <= report.bound + 1e-7;
  return report;
}

MinimaxReport minimax_distortion_search(const MinimaxOptions& opt) {
  if (opt.n < 1) throw InputError("minimax search: n must be >= 1");
  if (opt.target_dim < 1 || opt.target_dim > opt.n) throw InputError("minimax search: target dimension must lie in [1, n]");
  if (opt.count < 3) throw InputError("minimax search: need at least three sample points");
  if (opt.n == 1 && opt.count % 2 == 0) throw InputError("minimax search: circle samples must have odd size");
  if (opt.restarts < 1 || opt.iterations < 1) throw InputError("minimax search: restarts and iterations must be >= 1");
  if (!(opt.r > 0.0)) throw InputError("minimax search: radius must be positive");
  const bool scalar_circle = opt.n == 1 && opt.target_dim == 1;
  if ((opt.init == MinimaxInit::kLinearCircle || opt.init == MinimaxInit::kMonotone) && !scalar_circle)
    throw InputError("minimax search: circle initializations need n = 1 and scalar images");

  const auto pts = sample_sphere<double>(opt.n, opt.r, opt.count, opt.seed);
  PointMatrixd domain(opt.n + 1, opt.count);
  for (int i = 0; i < opt.count; ++i) domain.col(i) = pts[static_cast<std::size_t>(i)].coords();
  Relation rel(domain, opt.r, PointMatrixd::Zero(opt.target_dim, opt.count));
  const PointMatrixd dist = domain_distances(rel);
  const Eigen::Index count = opt.count;

  MinimaxReport report;
  report.kind = "minimax";
  report.seed = opt.seed;
  report.trials = opt.restarts;
  report.n = opt.n;
  report.target_dim = opt.target_dim;
  report.r = opt.r;
  report.count = opt.count;
  report.theoretical_bound = distortion_lower_bound(opt.n, opt.r).value;
  report.mesh = sample_mesh(rel);
  report.best_value = std::numeric_limits<double>::infinity();

  auto evaluate = [&](const PointMatrixd& y, std::vector<std::pair<int, int>>* active, std::vector<double>* signs) {
    double worst = 0.0;
    PointMatrixd dev(count, count);
    for (Eigen::Index i = 0; i < count; ++i)
      for (Eigen::Index j = i + 1; j < count; ++j) {
        const double e = (y.col(i) - y.col(j)).norm() - dist(i, j);
        dev(i, j) = e;
        worst = std::max(worst, std::abs(e));
      }
    if (active) {
      active->clear();
      signs->clear();
      for (Eigen::Index i = 0; i < count; ++i)
        for (Eigen::Index j = i + 1; j < count; ++j)
          if (std::abs(dev(i, j)) >= worst - 1e-6) {
            active->emplace_back(static_cast<int>(i), static_cast<int>(j));
            signs->push_back(dev(i, j) >= 0.0 ? 1.0 : -1.0);
          }
    }
    return worst;
  };

  for (int restart = 0; restart < opt.restarts; ++restart) {
    std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(restart));
    MinimaxInit mode = opt.init;
    if (mode == MinimaxInit::kMixed)
      mode = restart == 0 ? MinimaxInit::kProjection : scalar_circle ? MinimaxInit::kMonotone : MinimaxInit::kRandom;
    PointMatrixd y = PointMatrixd::Zero(opt.target_dim, count);
    switch (mode) {
      case MinimaxInit::kProjection:
        y = domain.topRows(opt.target_dim);
        break;
      case MinimaxInit::kLinearCircle:
        for (Eigen::Index i = 0; i < count; ++i) y(0, i) = linear_circle_map(2.0 * kPi * static_cast<double>(i) / static_cast<double>(count), opt.r);
        break;
      case MinimaxInit::kMonotone: {
        // Exponential increments accumulated from a random start index.
        const Pointd inc = random_weights(count, rng);
        const Eigen::Index start = std::uniform_int_distribution<Eigen::Index>(0, count - 1)(rng);
        const double rise = std::uniform_real_distribution<double>(0.1, 1.0)(rng) * 2.0 * kPi * opt.r;
        double level = 0.0;
        for (Eigen::Index s = 0; s < count; ++s) {
          level += inc(s);
          y(0, (start + s) % count) = rise * level;
        }
        break;
      }
      default:
        y = gaussian_matrix(opt.target_dim, count, rng) * opt.r;
        break;
    }

    std::vector<std::pair<int, int>> active;
    std::vector<double> signs;
    double value = evaluate(y, &active, &signs);
    if (restart == 0) report.initial_value = value;
    PointMatrixd best_y = y;
    double best = value;
    const double c = 0.25 * opt.r;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int t = 0; t < opt.iterations; ++t) {
      PointMatrixd grad = PointMatrixd::Zero(opt.target_dim, count);
      for (std::size_t p = 0; p < active.size(); ++p) {
        const auto [i, j] = active[p];
        Pointd u = y.col(i) - y.col(j);
        double len = u.norm();
        if (!(len > 1e-14)) {
          for (Eigen::Index d = 0; d < u.size(); ++d) u(d) = gauss(rng);
          len = u.norm();
        }
        u /= len;
        grad.col(i) += signs[p] * u;
        grad.col(j) -= signs[p] * u;
      }
      const double gnorm = grad.norm();
      if (!(gnorm > 0.0)) break;
      y -= (c / std::sqrt(static_cast<double>(t + 1))) * grad / gnorm;
      value = evaluate(y, &active, &signs);
      if (value < best) {
        best = value;
        best_y = y;
      }
    }
    report.trace.push_back(best);
    if (best < report.best_value) {
      report.best_value = best;
      report.best = Relation(domain, opt.r, best_y);
    }
  }

  if (opt.n == 1 && opt.target_dim == 1) {
    std::vector<double> values(static_cast<std::size_t>(count));
    for (Eigen::Index i = 0; i < count; ++i) values[static_cast<std::size_t>(i)] = report.best.image(0, i);
    report.certificate = certify_circle_bound(values, opt.r);
  }
  return report;
}

HullAtScale hull_at_scale(const Relation& rel, const Pointd& direction, double eps) {
  if (direction.size() != rel.domain.rows()) throw InputError("hull_at_scale: direction dimension mismatch");
  HullAtScale h;
  h.direction = direction.normalized() * rel.radius;
  h.eps = eps;
  for (Eigen::Index i = 0; i < rel.size(); ++i)
    if (geodesic(rel.domain.col(i), h.direction, rel.radius) <= eps) h.members.push_back(static_cast<int>(i));
  h.cloud.resize(rel.image_dim(), static_cast<Eigen::Index>(h.members.size()));
  for (std::size_t k = 0; k < h.members.size(); ++k) h.cloud.col(static_cast<Eigen::Index>(k)) = rel.image.col(h.members[k]);
  return h;
}

double sample_mesh(const Relation& rel) {
  if (rel.size() < 2) return 0.0;
  const PointMatrixd units = rel.domain.colwise().normalized();
  double mesh = 0.0;
  for (Eigen::Index i = 0; i < rel.size(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < rel.size(); ++j)
      if (j != i) nearest = std::min(nearest, geodesic(units.col(i), units.col(j), rel.radius));
    mesh = std::max(mesh, nearest);
  }
  return mesh;
}

AntipodalScanReport antipodal_hull_scan(const Relation& rel, double eps) {
  AntipodalScanReport report;
  report.kind = "granas";
  report.mesh = sample_mesh(rel);
  report.eps = eps > 0.0 ? eps : 2.0 * report.mesh;
  if (report.eps < report.mesh) throw InputError("antipodal_hull_scan: eps must be at least the sample mesh");
  report.sampled_distortion = distortion(rel);
  const int n = static_cast<int>(rel.image_dim());
  report.q = vertex_gap_factor(n);
  const double r = rel.radius;
  const double slack = 2.0 * report.eps + report.mesh;
  report.chain_lower = kPi * r - report.sampled_distortion - slack;
  report.chain_upper = (report.sampled_distortion + slack) * report.q;

  const PointMatrixd units = rel.domain.colwise().normalized();
  for (Eigen::Index i = 0; i < rel.size(); ++i) {
    const Pointd x = rel.domain.col(i);
    double nearest = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < rel.size(); ++j) nearest = std::min(nearest, geodesic(units.col(j), -units.col(i), 1.0) * r);
    if (nearest > report.mesh + 1e-12) continue;
    ++report.directions_tested;
    const HullAtScale here = hull_at_scale(rel, x, report.eps);
    const HullAtScale there = hull_at_scale(rel, -x, report.eps);
    if (here.members.empty() || there.members.empty()) continue;
    const auto witness = hull_intersection(here.cloud, there.cloud);
    if (!witness) continue;

    std::vector<int> ia, ib;
    Simplexd sa = caratheodory_reduce(witness->point, here.cloud, 1e-9, nullptr, &ia);
    Simplexd sb = caratheodory_reduce(witness->point, there.cloud, 1e-9, nullptr, &ib);
    auto common = simplex_intersection(sa, sb, 1e-9);
    if (!common) continue;
    const ReducedPair reduced = reduce_to_complementary_dims(sa, sb, *common);

    report.found = true;
    report.direction_index = static_cast<int>(i);
    report.direction = x;
    for (int v : reduced.kept_a) report.vertices_a.push_back(here.members[static_cast<std::size_t>(ia[static_cast<std::size_t>(v)])]);
    for (int v : reduced.kept_b) report.vertices_b.push_back(there.members[static_cast<std::size_t>(ib[static_cast<std::size_t>(v)])]);
    report.simplex_a = reduced.a;
    report.simplex_b = reduced.b;
    report.vertex_distance = min_vertex_distance(reduced.a, reduced.b).distance;
    report.simplex_edge = std::max(reduced.a.max_edge(), reduced.b.max_edge());
    report.cloud_diameter = std::max(diameter(here.cloud), diameter(there.cloud));
    report.best_value = report.vertex_distance;
    const double d = report.vertex_distance;
    report.chain_holds = report.chain_lower <= d + 1e-12 && d <= report.chain_upper + 1e-12;
    break;
  }
  report.trials = report.directions_tested;
  return report;
}

}  // namespace sdlab
