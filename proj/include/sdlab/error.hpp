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

#ifndef SDLAB_ERROR_HPP
#define SDLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sdlab {

/// Malformed arguments: dimension mismatch, out-of-range parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A linear system was too ill-conditioned to trust its solution.
class DegeneracyError : public std::runtime_error {
 public:
  DegeneracyError(const std::string& what, double rcond)
      : std::runtime_error(what + " (rcond=" + std::to_string(rcond) + ")"), rcond_(rcond) {}

  double rcond() const noexcept { return rcond_; }

 private:
  double rcond_;
};

/// A point was required to lie in a convex hull and does not.
class ContainmentError : public std::runtime_error {
 public:
  ContainmentError(const std::string& what, double margin)
      : std::runtime_error(what), margin_(margin) {}

  /// Phase-one infeasibility of the containment LP.
  double margin() const noexcept { return margin_; }

 private:
  double margin_;
};

}  // namespace sdlab

#endif  // SDLAB_ERROR_HPP
