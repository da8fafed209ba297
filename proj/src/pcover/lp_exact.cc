// Copyright 2026 The pcover Authors
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

#include "pcover/lp_exact.h"

#include <gmpxx.h>

#include "pcover/error.h"

namespace pcover {

namespace {

class Tableau {
 public:
  // Columns: structural, then one slack or surplus per inequality, then one
  // artificial per row that has no slack basis.
  explicit Tableau(const LinearProgram& lp) : num_structural_(lp.num_vars) {
    const int rows = static_cast<int>(lp.rows.size());
    int slacks = 0;
    for (const auto& row : lp.rows) {
      if (row.relation != Relation::kEqual) ++slacks;
    }
    first_artificial_ = num_structural_ + slacks;
    std::vector<bool> needs_artificial(rows);
    int artificials = 0;
    for (int i = 0; i < rows; ++i) {
      const auto& row = lp.rows[i];
      // After sign normalization a <= row with rhs >= 0 starts on its slack.
      const bool flip = row.rhs.sign() < 0;
      Relation rel = row.relation;
      if (flip && rel != Relation::kEqual) {
        rel = rel == Relation::kLessEqual ? Relation::kGreaterEqual
                                          : Relation::kLessEqual;
      }
      needs_artificial[i] = rel != Relation::kLessEqual;
      if (needs_artificial[i]) ++artificials;
    }
    cols_ = first_artificial_ + artificials;
    t_.assign(rows, std::vector<mpq_class>(cols_ + 1));
    basis_.assign(rows, -1);
    int slack = num_structural_;
    int artificial = first_artificial_;
    for (int i = 0; i < rows; ++i) {
      const auto& row = lp.rows[i];
      const int sign = row.rhs.sign() < 0 ? -1 : 1;
      for (const auto& [var, coeff] : row.coeffs) {
        t_[i][var] += coeff.mpq() * sign;
      }
      t_[i][cols_] = row.rhs.mpq() * sign;
      if (row.relation != Relation::kEqual) {
        const int slack_sign = row.relation == Relation::kLessEqual ? 1 : -1;
        t_[i][slack] = slack_sign * sign;
        if (!needs_artificial[i]) basis_[i] = slack;
        ++slack;
      }
      if (needs_artificial[i]) {
        t_[i][artificial] = 1;
        basis_[i] = artificial++;
      }
    }
  }

  LpResult Solve(const std::vector<Rational>& objective) {
    LpResult result;
    if (cols_ > first_artificial_) {
      std::vector<mpq_class> phase1(cols_);
      for (int j = first_artificial_; j < cols_; ++j) phase1[j] = 1;
      if (!Optimize(phase1, cols_)) {
        throw Error(ErrorCode::kInternal, "phase one unbounded");
      }
      if (sgn(ObjectiveValue(phase1)) > 0) {
        result.status = LpStatus::kInfeasible;
        result.pivots = pivots_;
        return result;
      }
      DriveOutArtificials();
    }
    std::vector<mpq_class> costs(cols_);
    for (int j = 0; j < num_structural_; ++j) costs[j] = objective[j].mpq();
    if (!Optimize(costs, first_artificial_)) {
      result.status = LpStatus::kUnbounded;
      result.pivots = pivots_;
      return result;
    }
    result.status = LpStatus::kOptimal;
    result.x.assign(num_structural_, Rational(0));
    for (size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < num_structural_) {
        result.x[basis_[i]] = Rational(t_[i][cols_]);
      }
    }
    result.value = Rational(ObjectiveValue(costs));
    result.pivots = pivots_;
    return result;
  }

 private:
  mpq_class ObjectiveValue(const std::vector<mpq_class>& costs) const {
    mpq_class value = 0;
    for (size_t i = 0; i < basis_.size(); ++i) {
      value += costs[basis_[i]] * t_[i][cols_];
    }
    return value;
  }

  // Minimizes costs over columns [0, allowed). False when unbounded.
  bool Optimize(const std::vector<mpq_class>& costs, int allowed) {
    const int rows = static_cast<int>(t_.size());
    while (true) {
      // Bland: the lowest-index column with negative reduced cost enters.
      int enter = -1;
      mpq_class reduced;
      for (int j = 0; j < allowed && enter < 0; ++j) {
        reduced = costs[j];
        for (int i = 0; i < rows; ++i) {
          if (sgn(t_[i][j]) != 0) reduced -= costs[basis_[i]] * t_[i][j];
        }
        if (sgn(reduced) < 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      mpq_class best_ratio;
      for (int i = 0; i < rows; ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        mpq_class ratio = t_[i][cols_] / t_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
  }

  void Pivot(int row, int col) {
    ++pivots_;
    std::vector<mpq_class>& pivot_row = t_[row];
    const mpq_class inv = 1 / pivot_row[col];
    std::vector<int> nonzero;
    for (int j = 0; j <= cols_; ++j) {
      if (sgn(pivot_row[j]) != 0) {
        pivot_row[j] *= inv;
        nonzero.push_back(j);
      }
    }
    mpq_class factor;
    for (size_t i = 0; i < t_.size(); ++i) {
      if (static_cast<int>(i) == row || sgn(t_[i][col]) == 0) continue;
      factor = t_[i][col];
      for (int j : nonzero) t_[i][j] -= factor * pivot_row[j];
    }
    basis_[row] = col;
  }

  void DriveOutArtificials() {
    for (size_t i = 0; i < t_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < first_artificial_ && col < 0; ++j) {
        if (sgn(t_[i][j]) != 0) col = j;
      }
      if (col >= 0) {
        Pivot(static_cast<int>(i), col);
        ++i;
      } else {
        // Redundant constraint.
        t_.erase(t_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
  }

  int num_structural_;
  int first_artificial_ = 0;
  int cols_ = 0;
  std::vector<std::vector<mpq_class>> t_;
  std::vector<int> basis_;
  int pivots_ = 0;
};

}  // namespace

LpResult Minimize(const LinearProgram& lp) {
  if (static_cast<int>(lp.objective.size()) != lp.num_vars) {
    throw Error(ErrorCode::kInvalidArgument, "objective length mismatch");
  }
  for (const auto& row : lp.rows) {
    for (const auto& [var, coeff] : row.coeffs) {
      if (var < 0 || var >= lp.num_vars) {
        throw Error(ErrorCode::kInvalidArgument, "variable out of range");
      }
    }
  }
  Tableau tableau(lp);
  return tableau.Solve(lp.objective);
}

FractionalSolution SolveLp(const Instance& instance) {
  const int n = instance.num_elements();
  const int m = instance.num_sets();
  LinearProgram lp;
  lp.num_vars = m + n;
  lp.objective.assign(m + n, Rational(0));
  for (int j = 0; j < m; ++j) lp.objective[j] = instance.cost(j);
  for (int i = 0; i < n; ++i) {
    LinearProgram::Row row;
    for (int j : instance.sets_of(i)) row.coeffs.emplace_back(j, Rational(1));
    row.coeffs.emplace_back(m + i, Rational(1));
    row.relation = Relation::kGreaterEqual;
    row.rhs = 1;
    lp.rows.push_back(std::move(row));
  }
  LinearProgram::Row budget;
  for (int i = 0; i < n; ++i) {
    if (instance.profit(i).sign() != 0) {
      budget.coeffs.emplace_back(m + i, instance.profit(i));
    }
  }
  budget.relation = Relation::kLessEqual;
  budget.rhs = instance.total_profit() - instance.target();
  lp.rows.push_back(std::move(budget));

  const LpResult result = Minimize(lp);
  if (result.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kInfeasible, "partial cover relaxation infeasible");
  }
  FractionalSolution s;
  s.x.assign(result.x.begin(), result.x.begin() + m);
  s.r.assign(result.x.begin() + m, result.x.end());
  s.value = result.value;
  return s;
}

DualFractional SolveDual(const Instance& instance) {
  const int n = instance.num_elements();
  const int m = instance.num_sets();
  const Rational slack_profit = instance.total_profit() - instance.target();
  LinearProgram lp;
  lp.num_vars = n + 1;
  lp.objective.assign(n + 1, Rational(-1));
  lp.objective[n] = slack_profit;
  for (int j = 0; j < m; ++j) {
    LinearProgram::Row row;
    for (int i : instance.elements_of(j)) row.coeffs.emplace_back(i, Rational(1));
    row.rhs = instance.cost(j);
    lp.rows.push_back(std::move(row));
  }
  for (int i = 0; i < n; ++i) {
    LinearProgram::Row row;
    row.coeffs.emplace_back(i, Rational(1));
    if (instance.profit(i).sign() != 0) {
      row.coeffs.emplace_back(n, -instance.profit(i));
    }
    lp.rows.push_back(std::move(row));
  }
  const LpResult result = Minimize(lp);
  if (result.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kInfeasible, "dual relaxation has no optimum");
  }
  DualFractional d;
  d.y.assign(result.x.begin(), result.x.begin() + n);
  d.lambda = result.x[n];
  d.value = -result.value;
  return d;
}

bool IsPrimalFeasible(const Instance& instance, const FractionalSolution& s) {
  const int n = instance.num_elements();
  const int m = instance.num_sets();
  if (static_cast<int>(s.x.size()) != m || static_cast<int>(s.r.size()) != n) {
    return false;
  }
  for (const Rational& v : s.x) {
    if (v.sign() < 0) return false;
  }
  Rational lost;
  for (int i = 0; i < n; ++i) {
    if (s.r[i].sign() < 0) return false;
    Rational row = s.r[i];
    for (int j : instance.sets_of(i)) row += s.x[j];
    if (row < 1) return false;
    lost += instance.profit(i) * s.r[i];
  }
  return lost <= instance.total_profit() - instance.target();
}

bool IsDualFeasible(const Instance& instance, const std::vector<Rational>& y,
                    const Rational& lambda) {
  if (static_cast<int>(y.size()) != instance.num_elements()) return false;
  if (lambda.sign() < 0) return false;
  for (int i = 0; i < instance.num_elements(); ++i) {
    if (y[i].sign() < 0 || y[i] > lambda * instance.profit(i)) return false;
  }
  for (int j = 0; j < instance.num_sets(); ++j) {
    Rational load;
    for (int i : instance.elements_of(j)) load += y[i];
    if (load > instance.cost(j)) return false;
  }
  return true;
}

Rational DualObjective(const Instance& instance, const std::vector<Rational>& y,
                       const Rational& lambda) {
  Rational total;
  for (const Rational& v : y) total += v;
  return total - (instance.total_profit() - instance.target()) * lambda;
}

}  // namespace pcover
