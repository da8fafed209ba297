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

#ifndef PCOVER_THRESHOLD_SEARCH_H_
#define PCOVER_THRESHOLD_SEARCH_H_

#include <optional>
#include <vector>

#include "pcover/delta_rational.h"
#include "pcover/instance.h"
#include "pcover/kolen.h"
#include "pcover/rational.h"

namespace pcover {

// intercept + slope * lambda.
struct LinearFunction {
  Rational intercept;
  Rational slope;

  Rational At(const Rational& x) const { return intercept + slope * x; }
  DeltaRational At(const DeltaRational& x) const {
    return DeltaRational(intercept) + x * slope;
  }

  friend bool operator==(const LinearFunction&,
                         const LinearFunction&) = default;
};

// Points strictly inside (lo, hi) where the pointwise minimum of `lines`
// changes from one function to another. Ascending, without duplicates.
std::vector<Rational> LowerEnvelopeBreakpoints(
    const std::vector<LinearFunction>& lines, const Rational& lo,
    const Rational& hi);

struct ThresholdResult {
  Rational lambda_star;
  // Kolen runs at lambda_star - delta, lambda_star and lambda_star + delta.
  // Present whenever exact_hit is absent. When lambda_star is 0 because of
  // zero-cost sets, `below` repeats the run at 0.
  std::optional<KolenResult> below;
  std::optional<KolenResult> at;
  std::optional<KolenResult> at_or_above;
  // A run whose pruned cover has profit exactly P (or a zero-cost run
  // reaching P), with the multiplier it was run at.
  std::optional<KolenResult> exact_hit;
  DeltaRational exact_lambda;
  int kolen_calls = 0;
  // Last interval on which the first agreed_duals.size() elements had linear
  // duals; agreed_duals[i] is y_i as a function of lambda there.
  Rational interval_lo;
  Rational interval_hi;
  std::vector<LinearFunction> agreed_duals;
};

// n * (ceil(log2 m) + 2).
int ThresholdCallBudget(int num_elements, int num_sets);

// Parametric search for the multiplier at which Kolen's pruned cover crosses
// profit P. The instance matrix must be Gamma-free. Throws Error(kInfeasible)
// when no cover reaches P.
ThresholdResult FindThreshold(const Instance& instance, const Rational& target);

}  // namespace pcover

#endif  // PCOVER_THRESHOLD_SEARCH_H_
