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

#include "sdlab/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "sdlab/bounds.hpp"
#include "sdlab/circumsphere.hpp"
#include "sdlab/distortion.hpp"
#include "sdlab/error.hpp"
#include "sdlab/intersect.hpp"
#include "sdlab/search.hpp"

namespace sdlab {
namespace {

using Generator = std::function<Json(std::mt19937_64&)>;
using Checker = std::function<bool(const Json&)>;

struct Suite {
  const char* name;
  Generator generate;
  Checker check;
};

Json pair_instance(const char* suite, std::mt19937_64& rng, const VerifyOptions& opt, bool overfull) {
  std::uniform_int_distribution<int> pick_n(1, 6);
  const int n = pick_n(rng);
  int k, m;
  if (overfull) {
    // k + m > n, both at most n.
    k = std::uniform_int_distribution<int>(1, n)(rng);
    m = std::uniform_int_distribution<int>(std::max(1, n - k + 1), n)(rng);
  } else {
    const int total = std::uniform_int_distribution<int>(0, n)(rng);
    k = std::uniform_int_distribution<int>(0, total)(rng);
    m = total - k;
  }
  const double edge = std::uniform_real_distribution<double>(0.1, 10.0)(rng);
  auto [a, b] = random_intersecting_pair(n, edge, k, m, rng);
  Json j;
  j["suite"] = suite;
  j["n"] = n;
  j["L"] = edge;
  j["a"] = to_json(a);
  j["b"] = to_json(b);
  j["bound_slack"] = opt.bound_slack;
  j["gap_slack"] = opt.gap_slack;
  return j;
}

bool check_vertex_gap(const Json& j) {
  const Simplexd a = simplex_from_json(j.at("a"));
  const Simplexd b = simplex_from_json(j.at("b"));
  const double edge = std::max(a.max_edge(), b.max_edge());
  const double bound = vertex_gap_bound(j.at("n").get<int>(), edge).value;
  return min_vertex_distance(a, b).distance <= bound + j.at("bound_slack").get<double>();
}

bool check_pair_dimension(const Json& j) {
  const Simplexd a = simplex_from_json(j.at("a"));
  const Simplexd b = simplex_from_json(j.at("b"));
  const double edge = std::max(a.max_edge(), b.max_edge());
  const double bound = pair_dimension_bound(static_cast<int>(a.dim()), static_cast<int>(b.dim()), edge);
  return min_vertex_distance(a, b).distance <= bound + j.at("gap_slack").get<double>();
}

bool check_circumradius_min_enclosing(const Json& j) {
  const Simplexd a = simplex_from_json(j.at("a"));
  const Simplexd b = simplex_from_json(j.at("b"));
  const double bound = circumradius_gap_bound(min_enclosing_ball(a).radius, min_enclosing_ball(b).radius);
  return min_vertex_distance(a, b).distance <= bound + j.at("gap_slack").get<double>();
}

bool check_circumradius_equidistant(const Json& j) {
  const Simplexd a = simplex_from_json(j.at("a"));
  const Simplexd b = simplex_from_json(j.at("b"));
  const double bound = circumradius_gap_bound(equidistant_circumcenter(a).radius, equidistant_circumcenter(b).radius);
  return min_vertex_distance(a, b).distance <= bound + j.at("gap_slack").get<double>();
}

bool check_reduction(const Json& j) {
  const Simplexd a = simplex_from_json(j.at("a"));
  const Simplexd b = simplex_from_json(j.at("b"));
  const auto w = simplex_intersection(a, b);
  if (!w) return false;
  const ReducedPair red = reduce_to_complementary_dims(a, b, *w);
  return red.a.dim() + red.b.dim() <= a.ambient_dim() && simplex_intersection(red.a, red.b, 1e-9).has_value();
}

Json jung_instance(std::mt19937_64& rng, const VerifyOptions& opt) {
  const int n = std::uniform_int_distribution<int>(1, 6)(rng);
  const int count = std::uniform_int_distribution<int>(1, 12)(rng);
  std::normal_distribution<double> gauss(0.0, 1.0);
  PointMatrixd pts(n, count);
  for (int c = 0; c < count; ++c)
    for (int i = 0; i < n; ++i) pts(i, c) = gauss(rng);
  Json j;
  j["suite"] = "jung";
  j["points"] = to_json(pts);
  j["gap_slack"] = opt.gap_slack;
  return j;
}

bool check_jung(const Json& j) {
  const PointMatrixd pts = points_from_json(j.at("points"));
  const CircumSphered ball = min_enclosing_ball(pts);
  for (Eigen::Index c = 0; c < pts.cols(); ++c)
    if ((pts.col(c) - ball.center).norm() > ball.radius + 1e-9) return false;
  return ball.radius <= jung_bound(diameter(pts), affine_dimension(pts)) + j.at("gap_slack").get<double>();
}

Json certifier_instance(std::mt19937_64& rng) {
  const int m = 2 * std::uniform_int_distribution<int>(1, 100)(rng) + 1;
  const double r = std::uniform_real_distribution<double>(0.1, 5.0)(rng);
  std::uniform_real_distribution<double> value(-4.0 * r, 4.0 * r);
  std::uniform_int_distribution<int> rounding(0, 3);
  std::vector<double> values(static_cast<std::size_t>(m));
  const bool quantize = rounding(rng) == 0;  // coarse values produce ties
  for (auto& v : values) v = quantize ? std::round(value(rng)) : value(rng);
  Json j;
  j["suite"] = "certifier_soundness";
  j["r"] = r;
  j["values"] = values;
  return j;
}

bool check_certifier(const Json& j) {
  const auto values = values_from_json(j.at("values"));
  const double r = j.at("r").get<double>();
  const CertifiedBound cert = certify_circle_bound(values, r);
  return certificate_holds(cert, values) && replay_bound(cert) == cert.value &&
         cert.value <= distortion(circle_grid_relation(values, r)) + 1e-12;
}

Json caratheodory_instance(std::mt19937_64& rng) {
  const int n = std::uniform_int_distribution<int>(1, 5)(rng);
  const int count = std::uniform_int_distribution<int>(1, 12)(rng);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  PointMatrixd pts(n, count);
  for (int c = 0; c < count; ++c)
    for (int i = 0; i < n; ++i) pts(i, c) = gauss(rng);
  Pointd w(count);
  for (int c = 0; c < count; ++c) w(c) = expo(rng);
  Json j;
  j["suite"] = "caratheodory";
  j["points"] = to_json(pts);
  j["x"] = to_json(Pointd(pts * (w / w.sum())));
  return j;
}

bool check_caratheodory(const Json& j) {
  const PointMatrixd pts = points_from_json(j.at("points"));
  const Pointd x = point_from_json(j.at("x"));
  const Simplexd s = caratheodory_reduce(x, pts);
  return s.size() <= pts.rows() + 1 && s.independent() &&
         hull_intersection(s.vertices(), PointMatrixd(x), kReducedContainmentTol).has_value();
}

Json metric_instance(std::mt19937_64& rng) {
  const int n = std::uniform_int_distribution<int>(1, 5)(rng);
  const double r = std::uniform_real_distribution<double>(0.1, 5.0)(rng);
  const auto pts = sample_sphere<double>(n, r, 3, rng());
  Json j;
  j["suite"] = "sphere_metric";
  j["points"] = Json::array();
  for (const auto& p : pts) j["points"].push_back(to_json(p));
  return j;
}

bool check_metric(const Json& j) {
  std::vector<SpherePointd> p;
  for (const auto& item : j.at("points")) p.push_back(sphere_point_from_json(item));
  const double r = p[0].radius();
  const double tol = 1e-12 * r;
  const double ab = sphere_distance(p[0], p[1]);
  const double bc = sphere_distance(p[1], p[2]);
  const double ac = sphere_distance(p[0], p[2]);
  return ab <= bc + ac + tol && bc <= ab + ac + tol && ac <= ab + bc + tol &&
         std::abs(ab - sphere_distance(p[1], p[0])) <= tol && sphere_distance(p[0], p[0]) <= tol &&
         std::abs(sphere_distance(p[0], p[0].antipode()) - std::numbers::pi * r) <= tol &&
         std::max({ab, bc, ac}) <= std::numbers::pi * r + tol;
}

std::vector<Suite> suites(const VerifyOptions& opt) {
  return {
      {"vertex_gap", [&opt](std::mt19937_64& g) { return pair_instance("vertex_gap", g, opt, false); }, check_vertex_gap},
      {"pair_dimension", [&opt](std::mt19937_64& g) { return pair_instance("pair_dimension", g, opt, false); },
       check_pair_dimension},
      {"circumradius_min_enclosing",
       [&opt](std::mt19937_64& g) { return pair_instance("circumradius_min_enclosing", g, opt, false); },
       check_circumradius_min_enclosing},
      {"circumradius_equidistant",
       [&opt](std::mt19937_64& g) { return pair_instance("circumradius_equidistant", g, opt, false); },
       check_circumradius_equidistant},
      {"complementary_reduction",
       [&opt](std::mt19937_64& g) { return pair_instance("complementary_reduction", g, opt, true); }, check_reduction},
      {"jung", [&opt](std::mt19937_64& g) { return jung_instance(g, opt); }, check_jung},
      {"certifier_soundness", certifier_instance, check_certifier},
      {"caratheodory", caratheodory_instance, check_caratheodory},
      {"sphere_metric", metric_instance, check_metric},
  };
}

bool safe_check(const Checker& check, const Json& instance) {
  try {
    return check(instance);
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyOptions& opt) {
  std::vector<SuiteResult> out;
  const auto all = suites(opt);
  for (std::size_t s = 0; s < all.size(); ++s) {
    std::mt19937_64 rng(opt.seed * 1000003ULL + s);
    SuiteResult res;
    res.name = all[s].name;
    for (int c = 0; c < opt.cases; ++c) {
      Json instance = all[s].generate(rng);
      ++res.cases;
      if (!safe_check(all[s].check, instance)) {
        ++res.violations;
        if (!res.first_failure) {
          instance["version"] = kVersion;
          res.first_failure = instance;
        }
      }
    }
    out.push_back(std::move(res));
  }
  return out;
}

bool replay_instance(const Json& instance) {
  const std::string name = instance.at("suite").get<std::string>();
  for (const auto& suite : suites(VerifyOptions{}))
    if (name == suite.name) return safe_check(suite.check, instance);
  throw InputError("unknown verification suite: " + name);
}

}  // namespace sdlab
