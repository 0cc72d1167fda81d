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

#ifndef SDLAB_LP_HPP
#define SDLAB_LP_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "sdlab/error.hpp"
#include "sdlab/geom.hpp"

namespace sdlab {

/// Standard-form linear program: minimize cost . x subject to A x = b, x >= 0.
/// An empty cost vector means pure feasibility.
template <typename Scalar>
struct LPProblem {
  PointMatrix<Scalar> a;
  Point<Scalar> b;
  Point<Scalar> cost;

  Eigen::Index rows() const { return a.rows(); }
  Eigen::Index vars() const { return a.cols(); }
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

template <typename Scalar>
struct LPResult {
  LPStatus status = LPStatus::kInfeasible;
  Point<Scalar> x;
  /// Basic variable per surviving constraint row (original column indices).
  std::vector<int> basis;
  /// Optimal phase-one objective: L1 norm of the residual at the best point.
  Scalar infeasibility = Scalar(0);
  Scalar objective = Scalar(0);
  int iterations = 0;

  bool feasible() const { return status == LPStatus::kOptimal || status == LPStatus::kUnbounded; }
};

template <typename Scalar>
struct LPOptions {
  Scalar feasibility_tol = Scalar(1e-10);
  Scalar pivot_tol = Scalar(1e-11);
  int max_iterations = 100000;
};

namespace detail {

/// Dense tableau. Rows 0..m-1 are constraints, row m holds reduced costs.
/// The last column is the right-hand side; the objective cell stores -z.
template <typename Scalar>
class Tableau {
 public:
  Tableau(const LPProblem<Scalar>& p)
      : m_(static_cast<int>(p.rows())), n_(static_cast<int>(p.vars())), art_(m_) {
    t_ = PointMatrix<Scalar>::Zero(m_ + 1, n_ + m_ + 1);
    basis_.resize(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      const Scalar sign = p.b(i) < Scalar(0) ? Scalar(-1) : Scalar(1);
      t_.row(i).head(n_) = sign * p.a.row(i);
      t_(i, n_ + i) = Scalar(1);
      t_(i, rhs()) = sign * p.b(i);
      basis_[static_cast<std::size_t>(i)] = n_ + i;
    }
    // Phase one minimizes the sum of artificials.
    for (int i = 0; i < m_; ++i) {
      t_.row(m_).head(n_) -= t_.row(i).head(n_);
      t_(m_, rhs()) -= t_(i, rhs());
    }
    eligible_.assign(static_cast<std::size_t>(n_ + art_), true);
  }

  int rhs() const { return n_ + art_; }
  int rows() const { return m_; }
  bool artificial(int col) const { return col >= n_; }
  Scalar objective() const { return -t_(m_, rhs()); }

  /// Runs Bland's rule to optimality for the cost row currently loaded.
  LPStatus optimize(const LPOptions<Scalar>& opt, int& iterations) {
    while (iterations < opt.max_iterations) {
      int enter = -1;
      for (int j = 0; j < n_ + art_; ++j) {
        if (eligible_[static_cast<std::size_t>(j)] && t_(m_, j) < -opt.pivot_tol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LPStatus::kOptimal;
      Scalar best = std::numeric_limits<Scalar>::infinity();
      for (int i = 0; i < m_; ++i) {
        const Scalar coef = t_(i, enter);
        if (coef > opt.pivot_tol) best = std::min(best, t_(i, rhs()) / coef);
      }
      if (best == std::numeric_limits<Scalar>::infinity()) return LPStatus::kUnbounded;
      // Bland: among minimum-ratio rows, the one whose basic variable has the
      // smallest index leaves.
      int leave = -1;
      for (int i = 0; i < m_; ++i) {
        const Scalar coef = t_(i, enter);
        if (coef <= opt.pivot_tol || t_(i, rhs()) / coef > best + Scalar(1e-14)) continue;
        if (leave < 0 || basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])
          leave = i;
      }
      pivot(leave, enter);
      ++iterations;
    }
    return LPStatus::kIterationLimit;
  }

  /// Pivots basic artificials out where possible and drops redundant rows.
  void expel_artificials(const LPOptions<Scalar>& opt) {
    for (int i = 0; i < m_;) {
      if (!artificial(basis_[static_cast<std::size_t>(i)])) {
        ++i;
        continue;
      }
      int col = -1;
      Scalar best = opt.pivot_tol;
      for (int j = 0; j < n_; ++j) {
        using std::abs;
        if (abs(t_(i, j)) > best) {
          best = abs(t_(i, j));
          col = j;
        }
      }
      if (col >= 0) {
        pivot(i, col);
        ++i;
      } else {
        drop_row(i);
      }
    }
    for (int j = n_; j < n_ + art_; ++j) eligible_[static_cast<std::size_t>(j)] = false;
  }

  void load_cost(const Point<Scalar>& cost) {
    t_.row(m_).setZero();
    t_.row(m_).head(n_) = cost.transpose();
    for (int i = 0; i < m_; ++i) {
      const int bcol = basis_[static_cast<std::size_t>(i)];
      const Scalar cb = bcol < n_ ? cost(bcol) : Scalar(0);
      if (cb != Scalar(0)) t_.row(m_) -= cb * t_.row(i);
    }
  }

  Point<Scalar> solution() const {
    Point<Scalar> x = Point<Scalar>::Zero(n_);
    for (int i = 0; i < m_; ++i) {
      const int bcol = basis_[static_cast<std::size_t>(i)];
      if (bcol < n_) x(bcol) = std::max(Scalar(0), t_(i, rhs()));
    }
    return x;
  }

  std::vector<int> structural_basis() const {
    std::vector<int> out;
    for (int b : basis_)
      if (b < n_) out.push_back(b);
    return out;
  }

 private:
  void pivot(int row, int col) {
    t_.row(row) /= t_(row, col);
    for (int i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const Scalar f = t_(i, col);
      if (f != Scalar(0)) t_.row(i) -= f * t_.row(row);
    }
    // Rounding can push degenerate right-hand sides slightly negative.
    for (int i = 0; i < m_; ++i)
      if (t_(i, rhs()) < Scalar(0) && t_(i, rhs()) > -Scalar(1e-13)) t_(i, rhs()) = Scalar(0);
    basis_[static_cast<std::size_t>(row)] = col;
  }

  void drop_row(int row) {
    const int last = m_;  // objective row index
    PointMatrix<Scalar> next(m_, t_.cols());
    next.topRows(row) = t_.topRows(row);
    next.bottomRows(last - row) = t_.bottomRows(last - row);
    t_ = std::move(next);
    basis_.erase(basis_.begin() + row);
    --m_;
  }

  int m_;
  int n_;
  int art_;  // artificial columns; fixed even as redundant rows are dropped
  PointMatrix<Scalar> t_;
  std::vector<int> basis_;
  std::vector<bool> eligible_;
};

}  // namespace detail

/// Two-phase dense simplex method with Bland's anti-cycling rule.
///
/// Deterministic: identical problems give identical results. Phase one
/// declares the problem infeasible when its optimal residual exceeds
/// `feasibility_tol * (1 + |b|_inf)`. The returned point is a basic feasible
/// solution.
template <typename Scalar>
LPResult<Scalar> solve_lp(const LPProblem<Scalar>& problem, const LPOptions<Scalar>& opt = {}) {
  if (problem.b.size() != problem.a.rows())
    throw InputError("solve_lp: right-hand side size does not match constraint rows");
  if (problem.cost.size() != 0 && problem.cost.size() != problem.a.cols())
    throw InputError("solve_lp: cost size does not match variable count");

  LPResult<Scalar> result;
  detail::Tableau<Scalar> tab(problem);
  LPStatus phase1 = tab.optimize(opt, result.iterations);
  result.infeasibility = std::max(Scalar(0), tab.objective());
  if (phase1 == LPStatus::kIterationLimit) {
    result.status = phase1;
    return result;
  }
  const Scalar scale = Scalar(1) + (problem.b.size() ? problem.b.cwiseAbs().maxCoeff() : Scalar(0));
  if (result.infeasibility > opt.feasibility_tol * scale) {
    result.status = LPStatus::kInfeasible;
    result.x = tab.solution();
    return result;
  }
  tab.expel_artificials(opt);
  result.status = LPStatus::kOptimal;
  if (problem.cost.size() != 0) {
    tab.load_cost(problem.cost);
    result.status = tab.optimize(opt, result.iterations);
  }
  result.x = tab.solution();
  result.basis = tab.structural_basis();
  if (problem.cost.size() != 0) result.objective = problem.cost.dot(result.x);
  return result;
}

}  // namespace sdlab

#endif  // SDLAB_LP_HPP
