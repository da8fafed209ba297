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

#include "pcover/blackbox.h"

#include <algorithm>
#include <functional>

#include "pcover/error.h"
#include "pcover/oracles.h"

namespace pcover {
namespace {

std::vector<int> AllColumns(int m) {
  std::vector<int> cols(m);
  for (int j = 0; j < m; ++j) cols[j] = j;
  return cols;
}

EquitableCheck SampleColumns(
    int m, int samples, uint64_t seed,
    const std::function<bool(const std::vector<int>&)>& check) {
  EquitableCheck out;
  Lcg rng(seed);
  for (int s = 0; s <= samples; ++s) {
    std::vector<int> cols;
    if (s == 0) {
      cols = AllColumns(m);
    } else {
      for (int j = 0; j < m; ++j) {
        if (rng.Next() & 1u) cols.push_back(j);
      }
    }
    ++out.submatrices_checked;
    if (!check(cols)) {
      out.passed = false;
      out.counterexample = cols;
      return out;
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> DefaultBlackBoxSchedule(int q, const Rational& alpha) {
  const Rational q3(q * q * q);
  std::vector<Rational> points = {
      Rational(0),
      Rational(2) * alpha / (Rational(3) * q3),
      (Rational(3) - Rational(2) * alpha) / Rational(3 * q),
      (Rational(4) * alpha - Rational(3)) / Rational(3 * q),
      Rational(1) / (q3 + Rational(q)),
      Rational(1, 3 * q),
  };
  std::erase_if(points, [](const Rational& x) { return x.sign() < 0; });
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Rational> schedule;
  for (size_t i = 0; i < points.size(); ++i) {
    schedule.push_back(points[i]);
    if (i + 1 < points.size()) {
      schedule.push_back((points[i] + points[i + 1]) / Rational(2));
    }
  }
  schedule.push_back(points.back() * Rational(2) + Rational(1));
  return schedule;
}

BlackBoxTranscript SimulateBlackBox(int q, const Rational& alpha,
                                    BlackBoxVariant variant,
                                    const std::vector<Rational>& schedule) {
  const BlackBoxFamily family = GenerateBlackBoxFamily(q, alpha, variant);
  const Instance& inst = family.instance;
  const int m = inst.num_sets();
  BlackBoxTranscript t;
  t.q = q;
  t.alpha = alpha;
  t.variant = variant;
  std::vector<char> in_union(m, 0);
  const Rational qr(q);
  for (const Rational& lambda : schedule) {
    if (lambda.sign() < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative lambda in schedule");
    }
    BlackBoxStep step;
    step.lambda = lambda;
    const Rational e = Rational(q * q * q + 2 * q) * lambda;
    const Rational a = Rational(2, 3) * alpha + Rational(2 * q) * lambda;
    const Rational b = Rational(4, 3) * alpha;
    const Rational o = Rational(1) + qr * lambda;
    step.opt_pc = Min(Min(e, a), Min(b, o));
    if (e == step.opt_pc) {
      step.output = "empty";
    } else if (a == step.opt_pc) {
      step.output = "A";
    } else if (b == step.opt_pc) {
      step.output = "B";
    } else {
      step.output = lambda <= Rational(1, 3 * q) ? "A" : "B";
    }
    if (step.output == "A") {
      step.sets = Cover::FromIndices(family.a_sets, m);
    } else if (step.output == "B") {
      step.sets = Cover::FromIndices(family.b_sets, m);
    }
    for (int j : step.sets.sets()) in_union[j] = 1;
    if (m <= 15) {
      step.opt_pc_enumerated = BruteForcePrizeCollecting(inst, lambda);
      if (*step.opt_pc_enumerated != step.opt_pc) t.closed_forms_match = false;
    }
    step.lmp_lhs =
        CoverCost(inst, step.sets) +
        alpha * lambda * (inst.total_profit() - CoveredProfit(inst, step.sets));
    step.lmp_rhs = alpha * step.opt_pc;
    step.lmp_ok = step.lmp_lhs <= step.lmp_rhs;
    if (!step.lmp_ok) t.all_lmp_ok = false;
    t.steps.push_back(std::move(step));
  }
  t.union_sets = Cover::FromMask(in_union);

  const std::vector<int>& kept = t.union_sets.sets();
  std::vector<int> rows(inst.num_elements());
  for (int i = 0; i < inst.num_elements(); ++i) rows[i] = i;
  std::vector<Rational> costs;
  for (int j : kept) costs.push_back(inst.cost(j));
  const Instance restricted =
      Instance::Make(inst.matrix().Submatrix(rows, kept), costs,
                     inst.profits(), inst.target());
  if (restricted.coverable_profit() >= restricted.target()) {
    const OracleResult best = BruteForcePartial(restricted);
    std::vector<int> sets;
    for (int j : best.cover.sets()) sets.push_back(kept[j]);
    t.best_merged = Cover::FromIndices(std::move(sets), m);
    t.best_merged_cost = best.cost;
  }
  const OracleResult opt = BruteForcePartial(inst);
  t.opt_cost = opt.cost;
  t.opt_cover = opt.cover;
  return t;
}

std::vector<int> ConstructiveColoring(const BlackBoxFamily& family,
                                      const std::vector<int>& cols) {
  std::vector<char> listed(family.kind.size(), 0);
  for (int j : cols) listed[j] = 1;
  std::vector<int> colors;
  for (int j : cols) {
    if (family.kind[j] == 'A') {
      colors.push_back(1);
      continue;
    }
    const int g = family.group[j];
    const bool pair = listed[family.b_sets[g]] && listed[family.o_sets[g]];
    colors.push_back(pair && family.kind[j] == 'O' ? 1 : -1);
  }
  return colors;
}

bool IsEquitable(const BinaryMatrix& matrix, const std::vector<int>& cols,
                 const std::vector<int>& colors) {
  for (int i = 0; i < matrix.rows(); ++i) {
    int balance = 0;
    for (size_t t = 0; t < cols.size(); ++t) {
      if (matrix.at(i, cols[t])) balance += colors[t];
    }
    if (balance < -1 || balance > 1) return false;
  }
  return true;
}

bool HasEquitableColoring(const BinaryMatrix& matrix,
                          const std::vector<int>& cols) {
  const int k = static_cast<int>(cols.size());
  if (k > 20 && !GuardOverridden()) {
    throw Error(ErrorCode::kSizeGuard,
                "equitable coloring search over more than 20 columns");
  }
  std::vector<int> colors(k);
  for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
    for (int t = 0; t < k; ++t) colors[t] = (mask >> t) & 1 ? 1 : -1;
    if (IsEquitable(matrix, cols, colors)) return true;
  }
  return false;
}

EquitableCheck EquitableColoringCheck(const BlackBoxFamily& family, int samples,
                                      uint64_t seed) {
  const BinaryMatrix& a = family.instance.matrix();
  return SampleColumns(a.cols(), samples, seed,
                       [&](const std::vector<int>& cols) {
                         return IsEquitable(a, cols,
                                            ConstructiveColoring(family, cols));
                       });
}

EquitableCheck EquitableColoringCheck(const BinaryMatrix& matrix, int samples,
                                      uint64_t seed) {
  return SampleColumns(matrix.cols(), samples, seed,
                       [&](const std::vector<int>& cols) {
                         return HasEquitableColoring(matrix, cols);
                       });
}

}  // namespace pcover
