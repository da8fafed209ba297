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

#include "pcover/threshold_search.h"

#include <algorithm>
#include <map>

#include "pcover/error.h"
#include "pcover/tb_matrix.h"

namespace pcover {

std::vector<Rational> LowerEnvelopeBreakpoints(
    const std::vector<LinearFunction>& lines, const Rational& lo,
    const Rational& hi) {
  std::vector<Rational> candidates;
  for (size_t a = 0; a < lines.size(); ++a) {
    for (size_t b = a + 1; b < lines.size(); ++b) {
      if (lines[a].slope == lines[b].slope) continue;
      Rational x = (lines[b].intercept - lines[a].intercept) /
                   (lines[a].slope - lines[b].slope);
      if (lo < x && x < hi) candidates.push_back(std::move(x));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  auto envelope_at = [&](const Rational& x) {
    const LinearFunction* best = &lines.front();
    for (const LinearFunction& line : lines) {
      if (line.At(x) < best->At(x)) best = &line;
    }
    return *best;
  };
  std::vector<Rational> breakpoints;
  Rational left = lo;
  LinearFunction previous;
  for (size_t t = 0; t <= candidates.size(); ++t) {
    const Rational& right = t < candidates.size() ? candidates[t] : hi;
    LinearFunction current = envelope_at((left + right) / 2);
    if (t > 0 && !(current == previous)) breakpoints.push_back(left);
    previous = std::move(current);
    left = right;
  }
  return breakpoints;
}

int ThresholdCallBudget(int num_elements, int num_sets) {
  int log = 0;
  while ((1 << log) < num_sets) ++log;
  return num_elements * (log + 2);
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const Instance& instance) : instance_(instance) {}

  const KolenResult& Run(const DeltaRational& lambda) {
    auto it = cache_.find(lambda);
    if (it == cache_.end()) {
      ++calls_;
      it = cache_.emplace(lambda, Kolen(instance_, lambda, false)).first;
    }
    return it->second;
  }
  Rational Profit(const DeltaRational& lambda) {
    return CoveredProfit(instance_, Run(lambda).pruned);
  }
  int calls() const { return calls_; }

 private:
  const Instance& instance_;
  std::map<DeltaRational, KolenResult> cache_;
  int calls_ = 0;
};

DeltaRational Minus(const Rational& x) { return DeltaRational(x, -1); }
DeltaRational Plus(const Rational& x) { return DeltaRational(x, 1); }

}  // namespace

ThresholdResult FindThreshold(const Instance& instance, const Rational& target) {
  ThresholdResult result;
  const int n = instance.num_elements();
  const int m = instance.num_sets();
  if (target.sign() <= 0) {
    KolenResult empty;
    empty.dual.y.assign(n, DeltaRational());
    std::vector<int> tight;
    for (int j = 0; j < m; ++j) {
      empty.dual.residuals.emplace_back(instance.cost(j));
      if (instance.cost(j).is_zero()) tight.push_back(j);
    }
    empty.tight = Cover::FromIndices(std::move(tight), m);
    result.exact_hit = std::move(empty);
    return result;
  }
  if (target > instance.coverable_profit()) {
    throw Error(ErrorCode::kInfeasible,
                "target " + target.ToString() +
                    " exceeds the coverable profit " +
                    instance.coverable_profit().ToString());
  }
  if (!IsGammaFree(instance.matrix())) {
    throw Error(ErrorCode::kInvalidArgument,
                "matrix is not in standard greedy form");
  }

  Evaluator eval(instance);
  auto finish = [&]() {
    result.kolen_calls = eval.calls();
    return result;
  };
  auto record_hit = [&](const DeltaRational& lambda) {
    result.exact_hit = eval.Run(lambda);
    result.exact_lambda = lambda;
    result.lambda_star = lambda.value();
  };

  Rational max_ratio;
  bool has_zero_cost = false;
  for (int j = 0; j < m; ++j) {
    if (instance.cost(j).is_zero()) has_zero_cost = true;
    for (int i : instance.elements_of(j)) {
      if (instance.profit(i).sign() > 0) {
        max_ratio = Max(max_ratio, instance.cost(j) / instance.profit(i));
      }
    }
  }
  Rational lo;
  Rational hi = max_ratio.is_zero() ? Rational(1) : max_ratio * 2;

  // With positive costs nothing is tight just above 0, and just below hi
  // every positive-profit element has y_i < lambda p_i, so the pruned cover
  // reaches all coverable profit. Both ends of the initial interval are
  // therefore known without a call unless a set is free.
  if (has_zero_cost) {
    if (eval.Profit(Rational(0)) >= target) {
      record_hit(Rational(0));
      return finish();
    }
    const Rational above_zero = eval.Profit(Plus(lo));
    if (above_zero == target) {
      record_hit(Plus(lo));
      return finish();
    }
    if (above_zero > target) {
      result.below = eval.Run(Rational(0));
      result.at = eval.Run(Rational(0));
      result.at_or_above = eval.Run(Plus(lo));
      return finish();
    }
  }
  if (instance.coverable_profit() == target) {
    if (eval.Profit(Minus(hi)) != target) {
      throw Error(ErrorCode::kInternal, "upper end of the initial interval "
                                        "does not cover all coverable profit");
    }
    record_hit(Minus(hi));
    return finish();
  }

  std::vector<LinearFunction> residual(m);
  for (int j = 0; j < m; ++j) residual[j] = {instance.cost(j), Rational(0)};
  std::vector<LinearFunction> y;
  y.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<LinearFunction> lines;
    for (int j : instance.sets_of(i)) lines.push_back(residual[j]);
    lines.push_back({Rational(0), instance.profit(i)});

    const std::vector<Rational> bps = LowerEnvelopeBreakpoints(lines, lo, hi);
    if (!bps.empty()) {
      result.interval_lo = lo;
      result.interval_hi = hi;
      result.agreed_duals = y;
      // Probe points lo+, b1-, b1+, ..., bs-, bs+, hi-; the profit is below
      // P at the first and at least P at the last.
      const int s = static_cast<int>(bps.size());
      auto point = [&](int t) {
        if (t == 0) return Plus(lo);
        if (t == 2 * s + 1) return Minus(hi);
        return t % 2 == 1 ? Minus(bps[(t - 1) / 2]) : Plus(bps[t / 2 - 1]);
      };
      int a = 0;
      int b = 2 * s + 1;
      while (b - a > 1) {
        const int mid = (a + b) / 2;
        const Rational profit = eval.Profit(point(mid));
        if (profit == target) {
          record_hit(point(mid));
          return finish();
        }
        if (profit < target) {
          a = mid;
        } else {
          b = mid;
        }
      }
      if (a % 2 == 1) {
        result.lambda_star = bps[(a - 1) / 2];
        result.below = eval.Run(point(a));
        result.at_or_above = eval.Run(point(a + 1));
        if (eval.Profit(result.lambda_star) == target) {
          record_hit(result.lambda_star);
          result.below.reset();
          result.at_or_above.reset();
          return finish();
        }
        result.at = eval.Run(result.lambda_star);
        return finish();
      }
      const int k = a / 2;
      const Rational new_lo = k == 0 ? lo : bps[k - 1];
      const Rational new_hi = k < s ? bps[k] : hi;
      lo = new_lo;
      hi = new_hi;
    }

    const Rational mid = (lo + hi) / 2;
    const LinearFunction* best = &lines.front();
    for (const LinearFunction& line : lines) {
      if (line.At(mid) < best->At(mid)) best = &line;
    }
    const LinearFunction yi = *best;
    for (int j : instance.sets_of(i)) {
      residual[j].intercept -= yi.intercept;
      residual[j].slope -= yi.slope;
    }
    y.push_back(yi);
  }
  throw Error(ErrorCode::kInternal,
              "threshold search ended without isolating a threshold");
}

}  // namespace pcover
