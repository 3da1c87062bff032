// Copyright 2026 The polydecomp Authors
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

#include "polydecomp/lp.h"

#include <cassert>
#include <utility>

#include "polydecomp/error.h"

namespace polydecomp {
namespace {

// Dense tableau over equality-form rows  sum_j t[i][j] x_j = t[i][rhs],
// x >= 0, with basis[i] the basic column of row i.
class Tableau {
 public:
  Tableau(std::vector<QVector> rows, std::vector<int> basis, int cols)
      : rows_(std::move(rows)), basis_(std::move(basis)), cols_(cols) {}

  // Maximizes <cost, x> over the columns flagged in `allowed`. Returns false
  // when the objective is unbounded.
  bool Optimize(const QVector& cost, const std::vector<bool>& allowed,
                int* pivots) {
    while (true) {
      int entering = -1;
      for (int j = 0; j < cols_ && entering < 0; ++j) {
        if (!allowed[j]) continue;
        Rational reduced = cost[j];
        for (size_t i = 0; i < rows_.size(); ++i) {
          if (sgn(rows_[i][j]) != 0) reduced -= cost[basis_[i]] * rows_[i][j];
        }
        if (sgn(reduced) > 0) entering = j;
      }
      if (entering < 0) return true;

      int leaving = -1;
      Rational best_ratio;
      for (size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][entering]) <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = static_cast<int>(i);
          best_ratio = std::move(ratio);
        }
      }
      if (leaving < 0) return false;
      Pivot(leaving, entering);
      ++*pivots;
    }
  }

  void Pivot(int r, int s) {
    const Rational inv = 1 / rows_[r][s];
    for (int c = 0; c <= cols_; ++c) rows_[r][c] *= inv;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == r || sgn(rows_[i][s]) == 0) continue;
      const Rational f = rows_[i][s];
      for (int c = 0; c <= cols_; ++c) {
        if (sgn(rows_[r][c]) != 0) rows_[i][c] -= f * rows_[r][c];
      }
    }
    basis_[r] = s;
  }

  Rational Objective(const QVector& cost) const {
    Rational v = 0;
    for (size_t i = 0; i < rows_.size(); ++i) {
      v += cost[basis_[i]] * rows_[i][cols_];
    }
    return v;
  }

  // Pivots basic columns in [first_banned, cols) out of the basis, dropping
  // rows that are identically zero on the remaining columns.
  void EvictColumns(int first_banned) {
    for (size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_banned) {
        ++i;
        continue;
      }
      int replacement = -1;
      for (int j = 0; j < first_banned; ++j) {
        if (sgn(rows_[i][j]) != 0) {
          replacement = j;
          break;
        }
      }
      if (replacement >= 0) {
        Pivot(static_cast<int>(i), replacement);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<long>(i));
        basis_.erase(basis_.begin() + static_cast<long>(i));
      }
    }
  }

  QVector Values() const {
    QVector x(cols_);
    for (size_t i = 0; i < rows_.size(); ++i) x[basis_[i]] = rows_[i][cols_];
    return x;
  }

 private:
  std::vector<QVector> rows_;
  std::vector<int> basis_;
  int cols_;
};

}  // namespace

LpResult Maximize(const LinearProgram& lp) {
  if (static_cast<int>(lp.nonnegative.size()) != lp.num_vars ||
      static_cast<int>(lp.objective.size()) != lp.num_vars) {
    throw Error(ErrorCode::kInvalidArgument, "LP dimension mismatch");
  }
  // Free variables split as x = x+ - x-.
  std::vector<int> pos_col(lp.num_vars), neg_col(lp.num_vars, -1);
  int structural = 0;
  for (int v = 0; v < lp.num_vars; ++v) {
    pos_col[v] = structural++;
    if (!lp.nonnegative[v]) neg_col[v] = structural++;
  }
  int slacks = 0;
  for (const auto& c : lp.constraints) {
    if (c.relation != Relation::kEqual) ++slacks;
  }
  const int m = static_cast<int>(lp.constraints.size());
  const int first_artificial = structural + slacks;
  const int cols = first_artificial + m;

  std::vector<QVector> rows(m, QVector(cols + 1));
  std::vector<int> basis(m, -1);
  int slack = structural;
  for (int i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    if (static_cast<int>(c.coeffs.size()) != lp.num_vars) {
      throw Error(ErrorCode::kInvalidArgument, "LP row length mismatch");
    }
    QVector& row = rows[i];
    for (int v = 0; v < lp.num_vars; ++v) {
      row[pos_col[v]] = c.coeffs[v];
      if (neg_col[v] >= 0) row[neg_col[v]] = -c.coeffs[v];
    }
    int slack_col = -1;
    if (c.relation == Relation::kLessEqual) {
      slack_col = slack++;
      row[slack_col] = 1;
    } else if (c.relation == Relation::kGreaterEqual) {
      slack_col = slack++;
      row[slack_col] = -1;
    }
    row[cols] = c.rhs;
    if (sgn(row[cols]) < 0) {
      for (auto& x : row) x = -x;
    }
    if (slack_col >= 0 && row[slack_col] == 1) {
      basis[i] = slack_col;
    } else {
      basis[i] = first_artificial + i;
      row[first_artificial + i] = 1;
    }
  }

  LpResult result;
  Tableau tableau(std::move(rows), std::move(basis), cols);

  QVector phase1_cost(cols);
  for (int j = first_artificial; j < cols; ++j) phase1_cost[j] = -1;
  std::vector<bool> allowed(cols, true);
  tableau.Optimize(phase1_cost, allowed, &result.pivots);
  if (sgn(tableau.Objective(phase1_cost)) < 0) {
    result.status = LpStatus::kInfeasible;
    return result;
  }
  tableau.EvictColumns(first_artificial);

  QVector cost(cols);
  for (int v = 0; v < lp.num_vars; ++v) {
    cost[pos_col[v]] = lp.objective[v];
    if (neg_col[v] >= 0) cost[neg_col[v]] = -lp.objective[v];
  }
  for (int j = first_artificial; j < cols; ++j) allowed[j] = false;
  if (!tableau.Optimize(cost, allowed, &result.pivots)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  const QVector values = tableau.Values();
  result.status = LpStatus::kOptimal;
  result.value = tableau.Objective(cost);
  result.solution.assign(lp.num_vars, 0);
  for (int v = 0; v < lp.num_vars; ++v) {
    result.solution[v] = values[pos_col[v]];
    if (neg_col[v] >= 0) result.solution[v] -= values[neg_col[v]];
  }
  return result;
}

}  // namespace polydecomp
