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

#include "pcover/kolen.h"

#include <algorithm>

#include "pcover/error.h"
#include "pcover/tb_matrix.h"

namespace pcover {

DualSolution DualUpdate(const Instance& instance, const DeltaRational& lambda,
                        bool check_form) {
  if (lambda.is_negative()) {
    throw Error(ErrorCode::kInvalidArgument, "negative multiplier");
  }
  if (check_form && !IsGammaFree(instance.matrix())) {
    throw Error(ErrorCode::kInvalidArgument,
                "matrix is not in standard greedy form");
  }
  DualSolution dual;
  dual.lambda = lambda;
  dual.residuals.reserve(instance.num_sets());
  for (const Rational& c : instance.costs()) dual.residuals.emplace_back(c);
  dual.y.resize(instance.num_elements());
  for (int i = 0; i < instance.num_elements(); ++i) {
    DeltaRational y = lambda * instance.profit(i);
    for (int j : instance.sets_of(i)) y = Min(y, dual.residuals[j]);
    for (int j : instance.sets_of(i)) dual.residuals[j] -= y;
    dual.y[i] = std::move(y);
  }
  return dual;
}

Cover ReverseDelete(const Instance& instance, const Cover& tight,
                    const DualSolution& dual) {
  for (int j : tight.sets()) {
    if (!dual.residuals[j].is_zero()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "set " + std::to_string(j) + " is not tight");
    }
  }
  std::vector<int> remaining = tight.sets();
  std::vector<int> kept;
  while (!remaining.empty()) {
    const int j = remaining.back();
    remaining.pop_back();
    kept.push_back(j);
    std::erase_if(remaining, [&](int other) {
      for (int i : instance.elements_of(j)) {
        if (instance.matrix().at(i, other) && dual.y[i].is_positive()) {
          return true;
        }
      }
      return false;
    });
  }
  return Cover::FromIndices(std::move(kept), instance.num_sets());
}

KolenResult Kolen(const Instance& instance, const DeltaRational& lambda,
                  bool check_form) {
  KolenResult result;
  result.dual = DualUpdate(instance, lambda, check_form);
  std::vector<int> tight;
  for (int j = 0; j < instance.num_sets(); ++j) {
    if (result.dual.residuals[j].is_zero()) tight.push_back(j);
  }
  result.tight = Cover::FromIndices(std::move(tight), instance.num_sets());
  result.pruned = ReverseDelete(instance, result.tight, result.dual);
  return result;
}

DeltaRational PrizeCollectingValue(const Instance& instance,
                                   const Cover& cover,
                                   const DeltaRational& lambda) {
  return DeltaRational(CoverCost(instance, cover)) +
         lambda * (instance.total_profit() - CoveredProfit(instance, cover));
}

namespace {

AuditReport Fail(const char* clause, std::string detail) {
  return AuditReport{false, clause, std::move(detail)};
}

}  // namespace

AuditReport AuditOptimality(const Instance& instance,
                            const KolenResult& result) {
  const DualSolution& dual = result.dual;
  const int n = instance.num_elements();
  const int m = instance.num_sets();
  if (static_cast<int>(dual.y.size()) != n ||
      static_cast<int>(dual.residuals.size()) != m) {
    return Fail("d", "dual has wrong dimensions");
  }
  for (int j : result.pruned.sets()) {
    if (j < 0 || j >= m) return Fail("d", "pruned set out of range");
  }
  std::vector<int> cover_count(n, 0);
  for (int j : result.pruned.sets()) {
    for (int i : instance.elements_of(j)) ++cover_count[i];
  }

  for (int i = 0; i < n; ++i) {
    if (dual.y[i].is_positive() && cover_count[i] > 1) {
      return Fail("b", "element " + std::to_string(i) + " covered " +
                           std::to_string(cover_count[i]) + " times");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (cover_count[i] == 0 && dual.y[i] != dual.lambda * instance.profit(i)) {
      return Fail("c", "uncovered element " + std::to_string(i) +
                           " has y below lambda p");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (dual.y[i].is_negative() ||
        dual.lambda * instance.profit(i) < dual.y[i]) {
      return Fail("d", "y out of bounds at element " + std::to_string(i));
    }
  }
  for (int j = 0; j < m; ++j) {
    DeltaRational residual = instance.cost(j);
    for (int i : instance.elements_of(j)) residual -= dual.y[i];
    if (residual != dual.residuals[j]) {
      return Fail("d", "residual of set " + std::to_string(j) +
                           " inconsistent with y");
    }
    if (residual.is_negative()) {
      return Fail("d", "set " + std::to_string(j) + " overpaid");
    }
  }
  for (int j : result.pruned.sets()) {
    if (!dual.residuals[j].is_zero()) {
      return Fail("d", "pruned set " + std::to_string(j) + " not tight");
    }
  }
  DeltaRational lhs = CoverCost(instance, result.pruned);
  DeltaRational sum_y;
  for (int i = 0; i < n; ++i) {
    sum_y += dual.y[i];
    if (cover_count[i] == 0) lhs += dual.lambda * instance.profit(i);
  }
  if (lhs != sum_y) {
    return Fail("a", "c(pruned) + lambda p(uncovered) = " + lhs.ToString() +
                         " but sum y = " + sum_y.ToString());
  }
  return AuditReport{};
}

}  // namespace pcover
