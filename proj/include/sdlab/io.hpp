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

#ifndef SDLAB_IO_HPP
#define SDLAB_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "sdlab/circumsphere.hpp"
#include "sdlab/distortion.hpp"
#include "sdlab/geom.hpp"
#include "sdlab/intersect.hpp"
#include "sdlab/search.hpp"

namespace sdlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = SDLAB_VERSION;

// Points are arrays of numbers, simplices and clouds arrays of points,
// sphere points {"coords": [...], "r": number}.
Json to_json(const Pointd& p);
Json to_json(const PointMatrixd& columns);
Json to_json(const Simplexd& s);
Json to_json(const SpherePointd& x);
Json to_json(const CircumSphered& s);
Json to_json(const IntersectionWitness& w);
Json to_json(const CertifiedBound& c);
Json to_json(const Relation& rel);
Json to_json(const VertexGapReport& r);
Json to_json(const MinimaxReport& r);
Json to_json(const AntipodalScanReport& r);

Pointd point_from_json(const Json& j);
/// Array of points, packed as matrix columns.
PointMatrixd points_from_json(const Json& j);
Simplexd simplex_from_json(const Json& j);
SpherePointd sphere_point_from_json(const Json& j);
/// {"r": number, "pairs": [{"x": SpherePoint, "y": Point}, ...]}
Relation relation_from_json(const Json& j);
std::vector<double> values_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// Locale-independent decimal with 12 significant digits.
std::string csv_number(double v);

}  // namespace sdlab

#endif  // SDLAB_IO_HPP
