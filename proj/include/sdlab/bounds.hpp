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

#ifndef SDLAB_BOUNDS_HPP
#define SDLAB_BOUNDS_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "sdlab/error.hpp"
#include "sdlab/geom.hpp"

namespace sdlab {

enum class Parity { kEven, kOdd };

inline Parity parity_of(int n) { return n % 2 == 0 ? Parity::kEven : Parity::kOdd; }
inline const char* to_string(Parity p) { return p == Parity::kEven ? "even" : "odd"; }

/// A closed-form bound: value = scale-dependent expression of the factor q.
template <typename Scalar>
struct BoundSpec {
  int n = 0;
  Parity parity = Parity::kOdd;
  /// Dimensionless vertex-gap factor, in [0, 1).
  Scalar q = Scalar(0);
  /// Edge length L or sphere radius r, depending on the bound.
  Scalar scale = Scalar(0);
  Scalar value = Scalar(0);
};

/// sqrt(Rv^2 + Rw^2): some cross vertex pair of two intersecting simplices
/// with circumradii Rv, Rw is at most this far apart.
template <typename Scalar>
Scalar circumradius_gap_bound(Scalar rv, Scalar rw) {
  using std::sqrt;
  if (rv < Scalar(0) || rw < Scalar(0)) throw InputError("circumradius_gap_bound: radii must be nonnegative");
  return sqrt(rv * rv + rw * rw);
}

/// L sqrt(1 - (1/(k+1) + 1/(m+1)) / 2) for a k- and an m-simplex with edges
/// at most L.
template <typename Scalar>
Scalar pair_dimension_bound(int k, int m, Scalar edge) {
  using std::sqrt;
  if (k < 0 || m < 0) throw InputError("pair_dimension_bound: dimensions must be nonnegative");
  if (edge < Scalar(0)) throw InputError("pair_dimension_bound: edge length must be nonnegative");
  const Scalar harmonic = Scalar(1) / Scalar(k + 1) + Scalar(1) / Scalar(m + 1);
  return edge * sqrt(Scalar(1) - harmonic / Scalar(2));
}

/// The factor q(n): sqrt(1 - 2/(n+2)) for even n,
/// sqrt(1 - 2(n+2)/((n+1)(n+3))) for odd n.
template <typename Scalar = double>
Scalar vertex_gap_factor(int n) {
  using std::sqrt;
  if (n < 1) throw InputError("vertex_gap_factor: n must be >= 1");
  const Scalar s = Scalar(n);
  if (parity_of(n) == Parity::kEven) return sqrt(Scalar(1) - Scalar(2) / (s + Scalar(2)));
  return sqrt(Scalar(1) - Scalar(2) * (s + Scalar(2)) / ((s + Scalar(1)) * (s + Scalar(3))));
}

/// Sharp bound L q(n) on the closest cross vertex pair of two intersecting
/// simplices in R^n with edges at most L.
template <typename Scalar>
BoundSpec<Scalar> vertex_gap_bound(int n, Scalar edge) {
  if (edge < Scalar(0)) throw InputError("vertex_gap_bound: edge length must be nonnegative");
  BoundSpec<Scalar> b;
  b.n = n;
  b.parity = parity_of(n);
  b.q = vertex_gap_factor<Scalar>(n);
  b.scale = edge;
  b.value = edge * b.q;
  return b;
}

/// Lower bound pi r / (1 + q(n)) on the additive distortion of any map
/// S^n_r -> R^n.
template <typename Scalar>
BoundSpec<Scalar> distortion_lower_bound(int n, Scalar r) {
  if (!(r > Scalar(0))) throw InputError("distortion_lower_bound: radius must be positive");
  BoundSpec<Scalar> b;
  b.n = n;
  b.parity = parity_of(n);
  b.q = vertex_gap_factor<Scalar>(n);
  b.scale = r;
  b.value = std::numbers::pi_v<Scalar> * r / (Scalar(1) + b.q);
  return b;
}

/// (floor(n/2), ceil(n/2)), checked against every split k + m = n.
inline std::pair<int, int> optimal_split(int n) {
  if (n < 1) throw InputError("optimal_split: n must be >= 1");
  const std::pair<int, int> split{n / 2, n - n / 2};
  const double at_split = pair_dimension_bound(split.first, split.second, 1.0);
  for (int k = 0; k <= n; ++k)
    if (pair_dimension_bound(k, n - k, 1.0) > at_split + 1e-15)
      throw std::logic_error("optimal_split: exhaustive check failed");
  return split;
}

/// Regular floor(n/2)- and ceil(n/2)-simplices with edge L in orthogonal
/// complementary coordinate subspaces of R^n, both centered at the origin.
/// Every cross vertex distance equals L q(n).
template <typename Scalar>
std::pair<Simplex<Scalar>, Simplex<Scalar>> sharp_pair(int n, Scalar edge) {
  const auto [k, m] = optimal_split(n);
  const PointMatrix<Scalar> eye = PointMatrix<Scalar>::Identity(n, n);
  Simplex<Scalar> a = k == 0 ? Simplex<Scalar>(PointMatrix<Scalar>::Zero(n, 1))
                             : regular_simplex<Scalar>(k, edge, n, PointMatrix<Scalar>(eye.leftCols(k)));
  Simplex<Scalar> b = regular_simplex<Scalar>(m, edge, n, PointMatrix<Scalar>(eye.rightCols(m)));
  return {std::move(a), std::move(b)};
}

}  // namespace sdlab

#endif  // SDLAB_BOUNDS_HPP
