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

#ifndef PCOVER_INSTANCE_H_
#define PCOVER_INSTANCE_H_

#include <vector>

#include "pcover/binary_matrix.h"
#include "pcover/rational.h"

namespace pcover {

// A Partial Cover instance: incidence matrix (element i in set j iff
// matrix.at(i, j)), set costs, element profits and the coverage target P.
// Immutable once built; Make() is the only way to construct a non-empty one.
class Instance {
 public:
  Instance() = default;

  // Validates dimensions, non-negativity and 0 <= target <= p(U). Throws
  // Error(kInvalidArgument) naming the offending index, or Error(kInfeasible)
  // for a target above the total profit.
  static Instance Make(BinaryMatrix matrix, std::vector<Rational> costs,
                       std::vector<Rational> profits, Rational target);

  int num_elements() const { return matrix_.rows(); }
  int num_sets() const { return matrix_.cols(); }
  const BinaryMatrix& matrix() const { return matrix_; }
  const std::vector<Rational>& costs() const { return costs_; }
  const std::vector<Rational>& profits() const { return profits_; }
  const Rational& cost(int j) const { return costs_[j]; }
  const Rational& profit(int i) const { return profits_[i]; }
  const Rational& target() const { return target_; }

  // Sets containing element i, ascending.
  const std::vector<int>& sets_of(int i) const { return sets_of_[i]; }
  // Elements of set j, ascending.
  const std::vector<int>& elements_of(int j) const { return elements_of_[j]; }

  const Rational& total_profit() const { return total_profit_; }
  // Profit of the elements that belong to at least one set.
  const Rational& coverable_profit() const { return coverable_profit_; }
  // c_max; zero for an instance without sets.
  Rational max_cost() const;

  Instance WithTarget(Rational target) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.matrix_ == b.matrix_ && a.costs_ == b.costs_ &&
           a.profits_ == b.profits_ && a.target_ == b.target_;
  }

 private:
  BinaryMatrix matrix_;
  std::vector<Rational> costs_;
  std::vector<Rational> profits_;
  Rational target_;
  std::vector<std::vector<int>> sets_of_;
  std::vector<std::vector<int>> elements_of_;
  Rational total_profit_;
  Rational coverable_profit_;
};

// A set of set indices, kept sorted and duplicate free.
class Cover {
 public:
  Cover() = default;

  // Throws Error(kInvalidArgument) on duplicates or out-of-range indices.
  static Cover FromIndices(std::vector<int> sets, int num_sets);
  // Members of a 0/1 membership mask.
  static Cover FromMask(const std::vector<char>& mask);

  const std::vector<int>& sets() const { return sets_; }
  int size() const { return static_cast<int>(sets_.size()); }
  bool empty() const { return sets_.empty(); }
  bool Contains(int j) const;
  std::vector<char> ToMask(int num_sets) const;

  friend bool operator==(const Cover&, const Cover&) = default;
  friend auto operator<=>(const Cover&, const Cover&) = default;

 private:
  std::vector<int> sets_;
};

// p(C): profit of the elements covered by at least one set of the cover.
Rational CoveredProfit(const Instance& instance, const Cover& cover);
Rational CoveredProfit(const Instance& instance, const std::vector<char>& mask);
Rational CoverCost(const Instance& instance, const Cover& cover);
bool IsFeasible(const Instance& instance, const Cover& cover);

// row_perm[i] is the permuted position of original row i; likewise for
// columns.
struct PermutationPair {
  std::vector<int> row_perm;
  std::vector<int> col_perm;

  static PermutationPair Identity(int rows, int cols);
  // From orders: row_order[k] is the original row placed at position k.
  static PermutationPair FromOrders(const std::vector<int>& row_order,
                                    const std::vector<int>& col_order);
  bool IsValid() const;
  PermutationPair Inverse() const;
  std::vector<int> RowOrder() const;
  std::vector<int> ColOrder() const;

  friend bool operator==(const PermutationPair&,
                         const PermutationPair&) = default;
};

BinaryMatrix ApplyPermutation(const BinaryMatrix& matrix,
                              const PermutationPair& perm);
Instance ApplyPermutation(const Instance& instance,
                          const PermutationPair& perm);
// Cover over permuted set indices -> cover over original set indices.
Cover MapCoverToOriginal(const Cover& cover, const PermutationPair& perm);

}  // namespace pcover

#endif  // PCOVER_INSTANCE_H_
