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

#ifndef SDLAB_VERIFY_HPP
#define SDLAB_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdlab/io.hpp"

namespace sdlab {

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Instances per suite.
  int cases = 2000;
  /// Additive slack for the sharp vertex-gap bound.
  double bound_slack = 1e-7;
  /// Additive slack for the circumradius, pair-dimension and Jung checks.
  double gap_slack = 1e-9;
};

struct SuiteResult {
  std::string name;
  int cases = 0;
  int violations = 0;
  /// First failing instance; feed it to `replay_instance`.
  std::optional<Json> first_failure;
};

/// Runs every invariant suite. Deterministic given the options.
std::vector<SuiteResult> run_verify(const VerifyOptions& opt);

/// Re-checks a serialized instance; true when the invariant holds.
bool replay_instance(const Json& instance);

}  // namespace sdlab

#endif  // SDLAB_VERIFY_HPP
