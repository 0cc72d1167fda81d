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

// sdlab: bound tables, constructions, certificates, invariant suites and
// search runs for distortion of sphere-to-Euclidean maps.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "sdlab/bounds.hpp"
#include "sdlab/circumsphere.hpp"
#include "sdlab/distortion.hpp"
#include "sdlab/error.hpp"
#include "sdlab/intersect.hpp"
#include "sdlab/io.hpp"
#include "sdlab/search.hpp"
#include "sdlab/verify.hpp"

namespace {

using sdlab::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SDLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw sdlab::InputError("SDLAB_SEED must be a nonnegative integer");
    }
  }
  return 0;
}

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    sdlab::write_json_file(out, j);
  }
}

struct RunConfig {
  int n = 2;
  int n_max = 10;
  int m = 0;
  int count = 0;
  int trials = 100;
  int restarts = 20;
  int steps = 2000;
  int iterations = 4000;
  int cases = 2000;
  double r = 1.0;
  double edge = 1.0;
  double eps = 0.0;
  double tol = sdlab::kFeasibilityTol;
  double bound_slack = 1e-7;
  double gap_slack = 1e-9;
  std::uint64_t seed = 0;
  bool reduce = false;
  std::string map = "projection";
  std::string init = "mixed";
  std::string points, file_a, file_b, values, relation, replay, out;
};

int cmd_bounds(const RunConfig& c) {
  if (c.n_max < 1) throw sdlab::InputError("--n-max must be >= 1");
  std::cout << "n,parity,q,theorem2_bound,theorem1_bound\n";
  for (int n = 1; n <= c.n_max; ++n) {
    const auto gap = sdlab::vertex_gap_bound(n, c.edge);
    const auto dist = sdlab::distortion_lower_bound(n, c.r);
    std::cout << n << ',' << sdlab::to_string(gap.parity) << ',' << sdlab::csv_number(gap.q) << ','
              << sdlab::csv_number(gap.value) << ',' << sdlab::csv_number(dist.value) << '\n';
  }
  return kExitOk;
}

int cmd_circumsphere(const RunConfig& c) {
  const sdlab::PointMatrixd pts = sdlab::points_from_json(sdlab::read_json_file(c.points));
  Json j;
  j["version"] = sdlab::kVersion;
  j["points"] = pts.cols();
  j["diameter"] = sdlab::diameter(pts);
  j["affine_dimension"] = sdlab::affine_dimension(pts);
  j["jung_bound"] = sdlab::jung_bound(sdlab::diameter(pts), sdlab::affine_dimension(pts));
  j["min_enclosing"] = sdlab::to_json(sdlab::min_enclosing_ball(pts, c.seed));
  try {
    j["equidistant"] = sdlab::to_json(sdlab::equidistant_circumcenter(sdlab::Simplexd(pts)));
  } catch (const sdlab::DegeneracyError& e) {
    j["equidistant"] = nullptr;
    j["equidistant_error"] = e.what();
  }
  emit(j, c.out);
  return kExitOk;
}

int cmd_intersect(const RunConfig& c) {
  const sdlab::Simplexd a = sdlab::simplex_from_json(sdlab::read_json_file(c.file_a));
  const sdlab::Simplexd b = sdlab::simplex_from_json(sdlab::read_json_file(c.file_b));
  const auto w = sdlab::simplex_intersection(a, b, c.tol);
  const auto close = sdlab::min_vertex_distance(a, b);
  Json j;
  j["version"] = sdlab::kVersion;
  j["intersects"] = w.has_value();
  j["witness"] = w ? sdlab::to_json(*w) : Json();
  j["min_vertex_distance"] = {{"i", close.i}, {"j", close.j}, {"distance", close.distance}};
  if (c.reduce && w) {
    const auto red = sdlab::reduce_to_complementary_dims(a, b, *w);
    j["reduced"] = {{"a", sdlab::to_json(red.a)}, {"b", sdlab::to_json(red.b)}, {"witness", sdlab::to_json(red.witness)},
                    {"notes", red.notes}};
  }
  emit(j, c.out);
  return kExitOk;
}

int cmd_construct(const RunConfig& c) {
  const auto [a, b] = sdlab::sharp_pair(c.n, c.edge);
  Json j;
  j["version"] = sdlab::kVersion;
  j["n"] = c.n;
  j["L"] = c.edge;
  j["k"] = a.dim();
  j["m"] = b.dim();
  j["a"] = sdlab::to_json(a);
  j["b"] = sdlab::to_json(b);
  j["min_cross_distance"] = sdlab::min_vertex_distance(a, b).distance;
  j["bound"] = sdlab::vertex_gap_bound(c.n, c.edge).value;
  emit(j, c.out);
  return kExitOk;
}

int cmd_certify(const RunConfig& c) {
  const auto values = sdlab::values_from_json(sdlab::read_json_file(c.values));
  emit(sdlab::to_json(sdlab::certify_circle_bound(values, c.r)), c.out);
  return kExitOk;
}

int cmd_distortion(const RunConfig& c) {
  const sdlab::Relation rel = sdlab::relation_from_json(sdlab::read_json_file(c.relation));
  const auto w = sdlab::distortion_witness(rel);
  Json j;
  j["version"] = sdlab::kVersion;
  j["pairs"] = rel.size();
  j["distortion"] = w.value;
  j["witness"] = {w.i, w.j};
  emit(j, c.out);
  return kExitOk;
}

int cmd_verify(const RunConfig& c) {
  if (!c.replay.empty()) {
    const Json instance = sdlab::read_json_file(c.replay);
    const bool ok = sdlab::replay_instance(instance);
    std::cout << instance.at("suite").get<std::string>() << ": " << (ok ? "holds" : "VIOLATED") << '\n';
    return ok ? kExitOk : kExitViolation;
  }
  sdlab::VerifyOptions opt;
  opt.seed = c.seed;
  opt.cases = c.cases;
  opt.bound_slack = c.bound_slack;
  opt.gap_slack = c.gap_slack;
  const auto results = sdlab::run_verify(opt);
  Json summary;
  summary["version"] = sdlab::kVersion;
  summary["seed"] = c.seed;
  summary["cases"] = c.cases;
  summary["suites"] = Json::array();
  bool failed = false;
  if (!c.out.empty()) std::filesystem::create_directories(c.out);
  for (const auto& res : results) {
    Json s;
    s["name"] = res.name;
    s["cases"] = res.cases;
    s["violations"] = res.violations;
    if (res.first_failure) {
      failed = true;
      s["failure"] = *res.first_failure;
      if (!c.out.empty()) {
        const std::string path = c.out + "/" + res.name + "_failure.json";
        sdlab::write_json_file(path, *res.first_failure);
        s["failure_file"] = path;
      }
    }
    summary["suites"].push_back(s);
  }
  std::cout << summary.dump(2) << '\n';
  return failed ? kExitViolation : kExitOk;
}

sdlab::Relation scan_relation(const RunConfig& c) {
  const int count = c.count > 0 ? c.count : (c.n == 1 ? 1001 : 2000);
  if (c.map == "projection") return sdlab::projection_map_sample(c.n, c.r, count, c.seed);
  const auto pts = sdlab::sample_sphere<double>(c.n, c.r, count, c.seed);
  sdlab::PointMatrixd domain(c.n + 1, count);
  for (int i = 0; i < count; ++i) domain.col(i) = pts[static_cast<std::size_t>(i)].coords();
  if (c.map == "constant") return sdlab::Relation(domain, c.r, sdlab::PointMatrixd::Zero(c.n, count));
  if (c.map == "linear") {
    if (c.n != 1) throw sdlab::InputError("--map linear needs --n 1");
    const auto v = sdlab::linear_circle_values(count, c.r);
    return sdlab::circle_grid_relation(v, c.r);
  }
  throw sdlab::InputError("--map must be projection, linear, or constant");
}

int cmd_search(const std::string& mode, const RunConfig& c) {
  if (mode == "adversarial") {
    sdlab::VertexGapOptions opt;
    opt.n = c.n;
    opt.edge = c.edge;
    opt.trials = c.trials;
    opt.climb_steps = c.steps;
    opt.seed = c.seed;
    const auto rep = sdlab::adversarial_vertex_gap_search(opt);
    emit(sdlab::to_json(rep), c.out);
    return rep.bound_respected ? kExitOk : kExitViolation;
  }
  if (mode == "minimax") {
    sdlab::MinimaxOptions opt;
    opt.n = c.n;
    opt.target_dim = c.m > 0 ? c.m : c.n;
    opt.r = c.r;
    opt.count = c.count > 0 ? c.count : 201;
    opt.restarts = c.restarts;
    opt.iterations = c.iterations;
    opt.seed = c.seed;
    if (c.init == "mixed") opt.init = sdlab::MinimaxInit::kMixed;
    else if (c.init == "projection") opt.init = sdlab::MinimaxInit::kProjection;
    else if (c.init == "random") opt.init = sdlab::MinimaxInit::kRandom;
    else if (c.init == "linear") opt.init = sdlab::MinimaxInit::kLinearCircle;
    else if (c.init == "monotone") opt.init = sdlab::MinimaxInit::kMonotone;
    else throw sdlab::InputError("--init must be mixed, projection, random, linear or monotone");
    const auto rep = sdlab::minimax_distortion_search(opt);
    emit(sdlab::to_json(rep), c.out);
    const bool sound = !rep.certificate || rep.best_value >= rep.certificate->value - 1e-12;
    return sound ? kExitOk : kExitViolation;
  }
  const auto rep = sdlab::antipodal_hull_scan(scan_relation(c), c.eps);
  emit(sdlab::to_json(rep), c.out);
  return !rep.found || rep.chain_holds ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sdlab: distortion bounds for maps from round spheres into Euclidean spaces"};
  app.set_version_flag("--version", std::string(sdlab::kVersion));
  app.require_subcommand(1);
  RunConfig c;
  try {
    c.seed = default_seed();
  } catch (const sdlab::InputError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  auto* bounds = app.add_subcommand("bounds", "CSV table of the closed-form bounds");
  bounds->add_option("--n-max", c.n_max, "Largest dimension")->capture_default_str();
  bounds->add_option("--r", c.r, "Sphere radius")->capture_default_str();
  bounds->add_option("--L", c.edge, "Edge length for the vertex-gap column")->capture_default_str();

  auto* circ = app.add_subcommand("circumsphere", "Equidistant and minimum enclosing spheres of a point set");
  circ->add_option("--points", c.points, "JSON array of points")->required();
  circ->add_option("--seed", c.seed, "Shuffle seed (default: $SDLAB_SEED or 0)");
  circ->add_option("--out", c.out, "Write JSON here instead of stdout");

  auto* inter = app.add_subcommand("intersect", "Intersection witness of two simplices");
  inter->add_option("--a", c.file_a, "JSON simplex")->required();
  inter->add_option("--b", c.file_b, "JSON simplex")->required();
  inter->add_option("--tol", c.tol, "Feasibility tolerance")->capture_default_str();
  inter->add_flag("--reduce", c.reduce, "Also reduce to faces of complementary dimension");
  inter->add_option("--out", c.out, "Write JSON here instead of stdout");

  auto* construct = app.add_subcommand("construct", "Extremal pair of regular simplices");
  construct->add_option("--n", c.n, "Ambient dimension")->capture_default_str();
  construct->add_option("--L", c.edge, "Edge length")->capture_default_str();
  construct->add_option("--out", c.out, "Write JSON here instead of stdout");

  auto* certify = app.add_subcommand("certify-1d", "Certified distortion lower bound for circle-grid values");
  certify->add_option("--values", c.values, "JSON array of m values (m odd)")->required();
  certify->add_option("--r", c.r, "Circle radius")->capture_default_str();
  certify->add_option("--out", c.out, "Write JSON here instead of stdout");

  auto* dist = app.add_subcommand("distortion", "Sampled distortion of a relation");
  dist->add_option("--relation", c.relation, "JSON relation file")->required();
  dist->add_option("--out", c.out, "Write JSON here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Randomized invariant suites; exit 1 on any violation");
  verify->add_option("--seed", c.seed, "Seed (default: $SDLAB_SEED or 0)");
  verify->add_option("--cases", c.cases, "Instances per suite")->capture_default_str();
  verify->add_option("--bound-slack", c.bound_slack, "Slack for the sharp vertex-gap bound")->capture_default_str();
  verify->add_option("--gap-slack", c.gap_slack, "Slack for the remaining inequalities")->capture_default_str();
  verify->add_option("--out", c.out, "Directory for failing instances");
  verify->add_option("--replay", c.replay, "Re-check one serialized failing instance");

  auto* search = app.add_subcommand("search", "Search harnesses (JSON report)");
  std::string mode;
  search->add_option("mode", mode, "minimax | adversarial | granas")
      ->required()
      ->check(CLI::IsMember({"minimax", "adversarial", "granas"}));
  search->add_option("--n", c.n, "Sphere / ambient dimension")->capture_default_str();
  search->add_option("--m", c.m, "Target dimension for minimax (default n)");
  search->add_option("--r", c.r, "Sphere radius")->capture_default_str();
  search->add_option("--L", c.edge, "Edge length for adversarial")->capture_default_str();
  search->add_option("--N", c.count, "Sample size (minimax default 201, granas 2000 or 1001 on the circle)");
  search->add_option("--eps", c.eps, "Ball radius for granas (default twice the mesh)");
  search->add_option("--trials", c.trials, "Adversarial trials")->capture_default_str();
  search->add_option("--steps", c.steps, "Adversarial climb steps per trial")->capture_default_str();
  search->add_option("--restarts", c.restarts, "Minimax restarts")->capture_default_str();
  search->add_option("--iterations", c.iterations, "Minimax iterations per restart")->capture_default_str();
  search->add_option("--init", c.init, "Minimax initialization: mixed | projection | random | linear | monotone")
      ->capture_default_str();
  search->add_option("--map", c.map, "Granas map: projection | linear | constant")->capture_default_str();
  search->add_option("--seed", c.seed, "Seed (default: $SDLAB_SEED or 0)");
  search->add_option("--out", c.out, "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bounds) return cmd_bounds(c);
    if (*circ) return cmd_circumsphere(c);
    if (*inter) return cmd_intersect(c);
    if (*construct) return cmd_construct(c);
    if (*certify) return cmd_certify(c);
    if (*dist) return cmd_distortion(c);
    if (*verify) return cmd_verify(c);
    if (*search) return cmd_search(mode, c);
  } catch (const sdlab::InputError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}
