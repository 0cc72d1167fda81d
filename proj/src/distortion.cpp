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

#include <algorithm>
#include <numbers>
#include <thread>

#include "sdlab/error.hpp"

namespace sdlab {
namespace {

constexpr double kPi = std::numbers::pi;

void check_grid(std::size_t m, double r) {
  if (m < 3 || m % 2 == 0) throw InputError("circle grid certificate needs an odd number m >= 3 of values");
  if (!(r > 0.0)) throw InputError("radius must be positive");
}

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

Relation::Relation(PointMatrixd domain_points, double r, PointMatrixd image_points)
    : domain(std::move(domain_points)), radius(r), image(std::move(image_points)) {
  if (domain.cols() == 0) throw InputError("relation must be nonempty");
  if (domain.cols() != image.cols()) throw InputError("relation: domain and image sizes differ");
  if (!(radius > 0.0)) throw InputError("relation: radius must be positive");
  for (Eigen::Index i = 0; i < domain.cols(); ++i)
    if (std::abs(domain.col(i).norm() - radius) > 1e-9 * radius)
      throw InputError("relation: domain point off the sphere");
}

Relation::Relation(const std::vector<SpherePointd>& xs, const std::vector<Pointd>& ys) {
  if (xs.empty() || xs.size() != ys.size()) throw InputError("relation: need equally many nonzero domain and image points");
  std::vector<Pointd> coords;
  coords.reserve(xs.size());
  for (const auto& x : xs) {
    if (std::abs(x.radius() - xs.front().radius()) > 1e-12 * x.radius())
      throw InputError("relation: inconsistent sphere radii");
    coords.push_back(x.coords());
  }
  *this = Relation(to_columns(coords), xs.front().radius(), to_columns(ys));
}

Relation Relation::subset(const std::vector<int>& indices) const {
  PointMatrixd d(domain.rows(), static_cast<Eigen::Index>(indices.size()));
  PointMatrixd y(image.rows(), static_cast<Eigen::Index>(indices.size()));
  for (std::size_t k = 0; k < indices.size(); ++k) {
    d.col(static_cast<Eigen::Index>(k)) = domain.col(indices[k]);
    y.col(static_cast<Eigen::Index>(k)) = image.col(indices[k]);
  }
  return Relation(std::move(d), radius, std::move(y));
}

DistortionWitness distortion_witness(const Relation& rel) {
  const Eigen::Index count = rel.size();
  const PointMatrixd units = rel.domain.colwise().normalized();
  const PointMatrixd& y = rel.image;
  const double r = rel.radius;

  auto scan_rows = [&](Eigen::Index begin, Eigen::Index end) {
    DistortionWitness best;
    for (Eigen::Index i = begin; i < end; ++i)
      for (Eigen::Index j = i + 1; j < count; ++j) {
        const double geo = 2.0 * r * std::atan2((units.col(i) - units.col(j)).norm(), (units.col(i) + units.col(j)).norm());
        const double dev = std::abs((y.col(i) - y.col(j)).norm() - geo);
        if (dev > best.value) best = {dev, static_cast<int>(i), static_cast<int>(j)};
      }
    return best;
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (count < 2048 || hw == 1) return scan_rows(0, count);

  // Row i costs count - i, so split on equal areas of the triangle.
  const unsigned blocks = std::min(hw, 16u);
  std::vector<Eigen::Index> cuts{0};
  for (unsigned b = 1; b < blocks; ++b) {
    const double frac = 1.0 - std::sqrt(1.0 - static_cast<double>(b) / blocks);
    cuts.push_back(static_cast<Eigen::Index>(frac * static_cast<double>(count)));
  }
  cuts.push_back(count);
  std::vector<DistortionWitness> partial(blocks);
  std::vector<std::thread> workers;
  for (unsigned b = 0; b < blocks; ++b)
    workers.emplace_back([&, b] { partial[b] = scan_rows(cuts[b], cuts[b + 1]); });
  for (auto& t : workers) t.join();
  // Blocks are in row order, so strict comparison keeps the first maximizer.
  DistortionWitness best;
  for (const auto& p : partial)
    if (p.value > best.value) best = p;
  return best;
}

PointMatrixd domain_distances(const Relation& rel) {
  const Eigen::Index count = rel.size();
  const PointMatrixd units = rel.domain.colwise().normalized();
  PointMatrixd d = PointMatrixd::Zero(count, count);
  for (Eigen::Index i = 0; i < count; ++i)
    for (Eigen::Index j = i + 1; j < count; ++j)
      d(i, j) = d(j, i) =
          2.0 * rel.radius * std::atan2((units.col(i) - units.col(j)).norm(), (units.col(i) + units.col(j)).norm());
  return d;
}

Relation projection_map_sample(int n, double r, int count, std::uint64_t seed) {
  if (count < 2) throw InputError("projection_map_sample: need at least two points");
  const auto pts = sample_sphere<double>(n, r, count, seed);
  PointMatrixd domain(n + 1, count);
  for (int i = 0; i < count; ++i) domain.col(i) = pts[static_cast<std::size_t>(i)].coords();
  PointMatrixd image = domain.topRows(n);
  return Relation(std::move(domain), r, std::move(image));
}

double linear_circle_map(double theta, double r) {
  if (!(theta >= 0.0 && theta < 2.0 * kPi)) throw InputError("linear_circle_map: theta must lie in [0, 2 pi)");
  return r * theta / 3.0;
}

Relation circle_grid_relation(std::span<const double> values, double r) {
  const auto m = static_cast<int>(values.size());
  if (m < 1) throw InputError("circle_grid_relation: need at least one value");
  PointMatrixd domain(2, m);
  PointMatrixd image(1, m);
  for (int k = 0; k < m; ++k) {
    const double theta = 2.0 * kPi * k / m;
    domain(0, k) = r * std::cos(theta);
    domain(1, k) = r * std::sin(theta);
    image(0, k) = values[static_cast<std::size_t>(k)];
  }
  return Relation(std::move(domain), r, std::move(image));
}

std::vector<double> linear_circle_values(int m, double r) {
  std::vector<double> out(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) out[static_cast<std::size_t>(k)] = linear_circle_map(2.0 * kPi * k / m, r);
  return out;
}

double circle_grid_distortion(std::span<const double> values, double r) {
  const auto m = static_cast<Eigen::Index>(values.size());
  std::vector<double> ring(static_cast<std::size_t>(m / 2 + 1));
  for (std::size_t s = 0; s < ring.size(); ++s) ring[s] = r * 2.0 * kPi * static_cast<double>(s) / static_cast<double>(m);
  return distortion_with(
             m,
             [&](Eigen::Index i, Eigen::Index j) {
               const Eigen::Index gap = j - i;
               return ring[static_cast<std::size_t>(std::min(gap, m - gap))];
             },
             [&](Eigen::Index i, Eigen::Index j) {
               return std::abs(values[static_cast<std::size_t>(i)] - values[static_cast<std::size_t>(j)]);
             })
      .value;
}

CertifiedBound certify_circle_bound(std::span<const double> values, double r) {
  check_grid(values.size(), r);
  const int m = static_cast<int>(values.size());
  const int step = (m + 1) / 2;
  auto f = [&](int k) { return values[static_cast<std::size_t>(mod(k, m))]; };

  CertifiedBound out;
  out.m = m;
  out.r = r;
  // The almost-antipodal edges k -- k+step form a single m-cycle.
  for (int t = 0, k = 0; t < m; ++t, k = mod(k + step, m)) {
    if (f(k) == f(k + step)) {
      out.certificate = TieCase{k, mod(k + step, m)};
      out.value = replay_bound(out);
      return out;
    }
  }
  for (int t = 0, k = 0; t < m; ++t, k = mod(k + step, m)) {
    const double a = f(k), mid = f(k + step), b = f(k + 1);
    if (a < mid && mid < b) {
      out.certificate = PathCase{k, 1};
      out.value = replay_bound(out);
      return out;
    }
    if (b < mid && mid < a) {
      out.certificate = PathCase{k, 2};
      out.value = replay_bound(out);
      return out;
    }
  }
  // Unreachable: orientations cannot alternate around an odd cycle.
  throw std::logic_error("certify_circle_bound: no monotone path on an odd cycle");
}

double replay_bound(const CertifiedBound& cert) {
  check_grid(static_cast<std::size_t>(cert.m), cert.r);
  const double m = cert.m;
  if (std::holds_alternative<TieCase>(cert.certificate)) return kPi * cert.r * (m - 1.0) / m;
  return 2.0 * kPi * cert.r * (m - 2.0) / (3.0 * m);
}

bool certificate_holds(const CertifiedBound& cert, std::span<const double> values) {
  const int m = cert.m;
  if (static_cast<int>(values.size()) != m) return false;
  const int step = (m + 1) / 2;
  auto f = [&](int k) { return values[static_cast<std::size_t>(mod(k, m))]; };
  if (const auto* tie = std::get_if<TieCase>(&cert.certificate)) {
    const int gap = mod(tie->j - tie->i, m);
    return (gap == step || gap == m - step) && f(tie->i) == f(tie->j);
  }
  const auto& path = std::get<PathCase>(cert.certificate);
  const double a = f(path.k), mid = f(path.k + step), b = f(path.k + 1);
  return path.configuration == 1 ? (a <= mid && mid <= b) : (b <= mid && mid <= a);
}

}  // namespace sdlab
