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

#include "pcover/oracles.h"

#include <optional>
#include <vector>

#include "pcover/error.h"

namespace pcover {

namespace {

void CheckSize(const Instance& instance) {
  if (instance.num_sets() > kBruteForceSetLimit && !GuardOverridden()) {
    throw Error(ErrorCode::kSizeGuard,
                "brute force is limited to " +
                    std::to_string(kBruteForceSetLimit) + " sets, got " +
                    std::to_string(instance.num_sets()));
  }
}

// Include/exclude recursion over sets in index order with incremental
// coverage counts.
class Enumerator {
 public:
  explicit Enumerator(const Instance& instance)
      : instance_(instance), count_(instance.num_elements(), 0) {}

  template <typename Leaf, typename Prune>
  void Run(Leaf&& leaf, Prune&& prune) {
    Visit(0, leaf, prune);
  }

  const Rational& cost() const { return cost_; }
  const Rational& covered() const { return covered_; }
  const std::vector<int>& chosen() const { return chosen_; }

 private:
  template <typename Leaf, typename Prune>
  void Visit(int j, Leaf& leaf, Prune& prune) {
    if (prune()) return;
    if (j == instance_.num_sets()) {
      leaf();
      return;
    }
    Visit(j + 1, leaf, prune);
    Add(j);
    Visit(j + 1, leaf, prune);
    Remove(j);
  }

  void Add(int j) {
    chosen_.push_back(j);
    cost_ += instance_.cost(j);
    for (int i : instance_.elements_of(j)) {
      if (count_[i]++ == 0) covered_ += instance_.profit(i);
    }
  }
  void Remove(int j) {
    chosen_.pop_back();
    cost_ -= instance_.cost(j);
    for (int i : instance_.elements_of(j)) {
      if (--count_[i] == 0) covered_ -= instance_.profit(i);
    }
  }

  const Instance& instance_;
  std::vector<int> count_;
  std::vector<int> chosen_;
  Rational cost_;
  Rational covered_;
};

}  // namespace

OracleResult BruteForcePartial(const Instance& instance) {
  CheckSize(instance);
  std::optional<OracleResult> best;
  Enumerator e(instance);
  e.Run(
      [&] {
        if (e.covered() < instance.target()) return;
        Cover candidate = Cover::FromIndices(e.chosen(), instance.num_sets());
        if (!best || e.cost() < best->cost ||
            (e.cost() == best->cost && candidate < best->cover)) {
          best = OracleResult{std::move(candidate), e.cost()};
        }
      },
      [&] { return best && e.cost() > best->cost; });
  if (!best) {
    throw Error(ErrorCode::kInfeasible, "no cover reaches the target");
  }
  return *best;
}

Rational BruteForcePrizeCollecting(const Instance& instance,
                                   const Rational& lambda) {
  CheckSize(instance);
  std::optional<Rational> best;
  Enumerator e(instance);
  e.Run(
      [&] {
        Rational value =
            e.cost() + lambda * (instance.total_profit() - e.covered());
        if (!best || value < *best) best = std::move(value);
      },
      [&] { return best && e.cost() > *best; });
  return *best;
}

}  // namespace pcover
