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

#include "sdlab/io.hpp"

#include <fstream>
#include <iomanip>
#include <locale>
#include <sstream>

#include "sdlab/error.hpp"

namespace sdlab {
namespace {

Json search_header(const SearchReport& r) {
  Json j;
  j["version"] = kVersion;
  j["kind"] = r.kind;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["best_value"] = r.best_value;
  j["trace"] = r.trace;
  return j;
}

Json indices(const std::vector<int>& v) { return Json(v); }

}  // namespace

Json to_json(const Pointd& p) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) j.push_back(p(i));
  return j;
}

Json to_json(const PointMatrixd& columns) {
  Json j = Json::array();
  for (Eigen::Index c = 0; c < columns.cols(); ++c) j.push_back(to_json(Pointd(columns.col(c))));
  return j;
}

Json to_json(const Simplexd& s) { return to_json(s.vertices()); }

Json to_json(const SpherePointd& x) {
  Json j;
  j["coords"] = to_json(x.coords());
  j["r"] = x.radius();
  return j;
}

Json to_json(const CircumSphered& s) {
  Json j;
  j["flavor"] = s.flavor == SphereFlavor::kEquidistant ? "equidistant" : "min_enclosing";
  j["center"] = to_json(s.center);
  j["radius"] = s.radius;
  if (s.flavor == SphereFlavor::kMinEnclosing) j["support"] = indices(s.support);
  return j;
}

Json to_json(const IntersectionWitness& w) {
  Json j;
  j["point"] = to_json(w.point);
  j["alpha"] = to_json(w.alpha.weights());
  j["beta"] = to_json(w.beta.weights());
  j["support_a"] = indices(w.support_a);
  j["support_b"] = indices(w.support_b);
  return j;
}

Json to_json(const CertifiedBound& c) {
  Json j;
  j["version"] = kVersion;
  j["value"] = c.value;
  j["m"] = c.m;
  j["r"] = c.r;
  Json cert;
  if (const auto* tie = std::get_if<TieCase>(&c.certificate)) {
    cert["case"] = "tie";
    cert["i"] = tie->i;
    cert["j"] = tie->j;
  } else {
    const auto& path = std::get<PathCase>(c.certificate);
    cert["case"] = "path";
    cert["k"] = path.k;
    cert["configuration"] = path.configuration;
  }
  j["certificate"] = cert;
  return j;
}

Json to_json(const Relation& rel) {
  Json j;
  j["r"] = rel.radius;
  Json pairs = Json::array();
  for (Eigen::Index i = 0; i < rel.size(); ++i) {
    Json x;
    x["coords"] = to_json(Pointd(rel.domain.col(i)));
    x["r"] = rel.radius;
    Json pair;
    pair["x"] = x;
    pair["y"] = to_json(Pointd(rel.image.col(i)));
    pairs.push_back(pair);
  }
  j["pairs"] = pairs;
  return j;
}

Json to_json(const VertexGapReport& r) {
  Json j = search_header(r);
  j["n"] = r.n;
  j["L"] = r.edge;
  j["k"] = r.k;
  j["m"] = r.m;
  j["bound"] = r.bound;
  j["bound_respected"] = r.bound_respected;
  j["best_a"] = to_json(r.best_a);
  j["best_b"] = to_json(r.best_b);
  return j;
}

Json to_json(const MinimaxReport& r) {
  Json j = search_header(r);
  j["n"] = r.n;
  j["m"] = r.target_dim;
  j["r"] = r.r;
  j["N"] = r.count;
  j["initial_value"] = r.initial_value;
  j["theoretical_bound"] = r.theoretical_bound;
  j["mesh"] = r.mesh;
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json();
  j["best_images"] = to_json(r.best.image);
  return j;
}

Json to_json(const AntipodalScanReport& r) {
  Json j = search_header(r);
  j["found"] = r.found;
  j["directions_tested"] = r.directions_tested;
  j["eps"] = r.eps;
  j["mesh"] = r.mesh;
  j["sampled_distortion"] = r.sampled_distortion;
  j["q"] = r.q;
  j["direction_index"] = r.direction_index;
  j["direction"] = r.found ? to_json(r.direction) : Json();
  j["vertices_a"] = indices(r.vertices_a);
  j["vertices_b"] = indices(r.vertices_b);
  j["simplex_a"] = r.found ? to_json(r.simplex_a) : Json();
  j["simplex_b"] = r.found ? to_json(r.simplex_b) : Json();
  j["vertex_distance"] = r.vertex_distance;
  j["simplex_edge"] = r.simplex_edge;
  j["cloud_diameter"] = r.cloud_diameter;
  j["chain_lower"] = r.chain_lower;
  j["chain_upper"] = r.chain_upper;
  j["chain_holds"] = r.chain_holds;
  return j;
}

Pointd point_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("point must be a nonempty array of numbers");
  Pointd p(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw InputError("point coordinates must be numbers");
    p(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return p;
}

PointMatrixd points_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a nonempty array of points");
  std::vector<Pointd> pts;
  for (const auto& item : j) pts.push_back(point_from_json(item));
  return to_columns(pts);
}

Simplexd simplex_from_json(const Json& j) { return Simplexd(points_from_json(j)); }

SpherePointd sphere_point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coords") || !j.contains("r"))
    throw InputError("sphere point must be {\"coords\": [...], \"r\": number}");
  return SpherePointd(point_from_json(j.at("coords")), j.at("r").get<double>());
}

Relation relation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pairs")) throw InputError("relation must be an object with \"pairs\"");
  std::vector<SpherePointd> xs;
  std::vector<Pointd> ys;
  for (const auto& pair : j.at("pairs")) {
    if (!pair.contains("x") || !pair.contains("y")) throw InputError("relation pairs need \"x\" and \"y\"");
    xs.push_back(sphere_point_from_json(pair.at("x")));
    ys.push_back(point_from_json(pair.at("y")));
  }
  return Relation(xs, ys);
}

std::vector<double> values_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("values must be a JSON array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw InputError("values must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string csv_number(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(12) << v;
  return os.str();
}

}  // namespace sdlab
