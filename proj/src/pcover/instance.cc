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

#include "pcover/instance.h"

#include <algorithm>
#include <string>

#include "pcover/error.h"

namespace pcover {

Instance Instance::Make(BinaryMatrix matrix, std::vector<Rational> costs,
                        std::vector<Rational> profits, Rational target) {
  const int n = matrix.rows();
  const int m = matrix.cols();
  if (static_cast<int>(costs.size()) != m) {
    throw Error(ErrorCode::kInvalidArgument,
                "dimension mismatch: " + std::to_string(costs.size()) +
                    " costs for " + std::to_string(m) + " sets");
  }
  if (static_cast<int>(profits.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "dimension mismatch: " + std::to_string(profits.size()) +
                    " profits for " + std::to_string(n) + " elements");
  }
  for (int j = 0; j < m; ++j) {
    if (costs[j].sign() < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative cost at set " + std::to_string(j));
    }
  }
  Instance out;
  out.sets_of_.assign(n, {});
  out.elements_of_.assign(m, {});
  for (int i = 0; i < n; ++i) {
    if (profits[i].sign() < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative profit at element " + std::to_string(i));
    }
    out.total_profit_ += profits[i];
    for (int j = 0; j < m; ++j) {
      if (matrix.at(i, j)) {
        out.sets_of_[i].push_back(j);
        out.elements_of_[j].push_back(i);
      }
    }
    if (!out.sets_of_[i].empty()) out.coverable_profit_ += profits[i];
  }
  if (target.sign() < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative target");
  }
  if (target > out.total_profit_) {
    throw Error(ErrorCode::kInfeasible,
                "infeasible target: P = " + target.ToString() +
                    " exceeds p(U) = " + out.total_profit_.ToString());
  }
  out.matrix_ = std::move(matrix);
  out.costs_ = std::move(costs);
  out.profits_ = std::move(profits);
  out.target_ = std::move(target);
  return out;
}

Rational Instance::max_cost() const {
  Rational best;
  for (const Rational& c : costs_) best = Max(best, c);
  return best;
}

Instance Instance::WithTarget(Rational target) const {
  return Make(matrix_, costs_, profits_, std::move(target));
}

Cover Cover::FromIndices(std::vector<int> sets, int num_sets) {
  std::sort(sets.begin(), sets.end());
  for (size_t k = 0; k < sets.size(); ++k) {
    if (sets[k] < 0 || sets[k] >= num_sets) {
      throw Error(ErrorCode::kInvalidArgument,
                  "set index out of range: " + std::to_string(sets[k]));
    }
    if (k > 0 && sets[k] == sets[k - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate set index: " + std::to_string(sets[k]));
    }
  }
  Cover out;
  out.sets_ = std::move(sets);
  return out;
}

Cover Cover::FromMask(const std::vector<char>& mask) {
  Cover out;
  for (size_t j = 0; j < mask.size(); ++j) {
    if (mask[j]) out.sets_.push_back(static_cast<int>(j));
  }
  return out;
}

bool Cover::Contains(int j) const {
  return std::binary_search(sets_.begin(), sets_.end(), j);
}

std::vector<char> Cover::ToMask(int num_sets) const {
  std::vector<char> mask(num_sets, 0);
  for (int j : sets_) mask[j] = 1;
  return mask;
}

Rational CoveredProfit(const Instance& instance,
                       const std::vector<char>& mask) {
  Rational total;
  for (int i = 0; i < instance.num_elements(); ++i) {
    for (int j : instance.sets_of(i)) {
      if (mask[j]) {
        total += instance.profit(i);
        break;
      }
    }
  }
  return total;
}

Rational CoveredProfit(const Instance& instance, const Cover& cover) {
  return CoveredProfit(instance, cover.ToMask(instance.num_sets()));
}

Rational CoverCost(const Instance& instance, const Cover& cover) {
  Rational total;
  for (int j : cover.sets()) total += instance.cost(j);
  return total;
}

bool IsFeasible(const Instance& instance, const Cover& cover) {
  return CoveredProfit(instance, cover) >= instance.target();
}

PermutationPair PermutationPair::Identity(int rows, int cols) {
  PermutationPair p;
  p.row_perm.resize(rows);
  p.col_perm.resize(cols);
  for (int i = 0; i < rows; ++i) p.row_perm[i] = i;
  for (int j = 0; j < cols; ++j) p.col_perm[j] = j;
  return p;
}

namespace {

std::vector<int> InvertPermutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = static_cast<int>(k);
  return inv;
}

bool IsBijection(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 0 || v >= static_cast<int>(perm.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

PermutationPair PermutationPair::FromOrders(const std::vector<int>& row_order,
                                            const std::vector<int>& col_order) {
  return PermutationPair{InvertPermutation(row_order),
                         InvertPermutation(col_order)};
}

bool PermutationPair::IsValid() const {
  return IsBijection(row_perm) && IsBijection(col_perm);
}

PermutationPair PermutationPair::Inverse() const {
  return PermutationPair{InvertPermutation(row_perm),
                         InvertPermutation(col_perm)};
}

std::vector<int> PermutationPair::RowOrder() const {
  return InvertPermutation(row_perm);
}

std::vector<int> PermutationPair::ColOrder() const {
  return InvertPermutation(col_perm);
}

BinaryMatrix ApplyPermutation(const BinaryMatrix& matrix,
                              const PermutationPair& perm) {
  return matrix.Reordered(perm.RowOrder(), perm.ColOrder());
}

Instance ApplyPermutation(const Instance& instance,
                          const PermutationPair& perm) {
  const std::vector<int> row_order = perm.RowOrder();
  const std::vector<int> col_order = perm.ColOrder();
  std::vector<Rational> costs;
  std::vector<Rational> profits;
  for (int j : col_order) costs.push_back(instance.cost(j));
  for (int i : row_order) profits.push_back(instance.profit(i));
  return Instance::Make(instance.matrix().Reordered(row_order, col_order),
                        std::move(costs), std::move(profits),
                        instance.target());
}

Cover MapCoverToOriginal(const Cover& cover, const PermutationPair& perm) {
  const std::vector<int> col_order = perm.ColOrder();
  std::vector<int> sets;
  for (int j : cover.sets()) sets.push_back(col_order[j]);
  return Cover::FromIndices(std::move(sets), static_cast<int>(col_order.size()));
}

}  // namespace pcover
