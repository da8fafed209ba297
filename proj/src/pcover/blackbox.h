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

#ifndef PCOVER_BLACKBOX_H_
#define PCOVER_BLACKBOX_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcover/binary_matrix.h"
#include "pcover/instance.h"
#include "pcover/instances_gen.h"
#include "pcover/rational.h"

namespace pcover {

struct BlackBoxStep {
  Rational lambda;
  // "empty", "A" or "B".
  std::string output;
  Cover sets;
  // min of (q^3 + 2q) lambda, 2/3 alpha + 2q lambda, 4/3 alpha, 1 + q lambda.
  Rational opt_pc;
  // Enumerated prize-collecting optimum; absent above 15 sets.
  std::optional<Rational> opt_pc_enumerated;
  // c(C) + alpha lambda (p(U) - p(C)) and alpha OPT-PC.
  Rational lmp_lhs;
  Rational lmp_rhs;
  bool lmp_ok = false;
};

struct BlackBoxTranscript {
  int q = 0;
  Rational alpha;
  BlackBoxVariant variant = BlackBoxVariant::kGeneral;
  std::vector<BlackBoxStep> steps;
  Cover union_sets;
  // Cheapest cover reaching P using only sets in union_sets.
  std::optional<Rational> best_merged_cost;
  Cover best_merged;
  Rational opt_cost;
  Cover opt_cover;
  bool all_lmp_ok = true;
  bool closed_forms_match = true;
};

// 0, the interval endpoints 2 alpha/(3q^3), (3 - 2 alpha)/(3q),
// (4 alpha - 3)/(3q), 1/(q^3 + q) and 1/(3q) that are non-negative, the
// midpoints between consecutive ones and one point past the last.
std::vector<Rational> DefaultBlackBoxSchedule(int q, const Rational& alpha);

// The adversarial prize-collecting oracle on the A/B/O family: returns the
// first of empty / A-sets / B-sets whose closed form attains the minimum;
// when only the O-sets do, A-sets for lambda <= 1/(3q) and B-sets otherwise.
BlackBoxTranscript SimulateBlackBox(int q, const Rational& alpha,
                                    BlackBoxVariant variant,
                                    const std::vector<Rational>& schedule);

// Blue (+1) and red (-1) per listed column of the family: A-sets blue; B_i
// red and O_i blue when both are listed, a lone B_i or O_i red.
std::vector<int> ConstructiveColoring(const BlackBoxFamily& family,
                                      const std::vector<int>& cols);

// Every row of the column submatrix has blue and red counts within one.
bool IsEquitable(const BinaryMatrix& matrix, const std::vector<int>& cols,
                 const std::vector<int>& colors);

// Exhaustive over the 2^|cols| colorings. Throws Error(kSizeGuard) above 20
// columns unless overridden.
bool HasEquitableColoring(const BinaryMatrix& matrix,
                          const std::vector<int>& cols);

struct EquitableCheck {
  bool passed = true;
  int submatrices_checked = 0;
  // Columns of the first failing submatrix.
  std::vector<int> counterexample;
};

// The full column set plus `samples` pseudorandom column subsets. Row
// subsets need no sampling: the condition is per row.
EquitableCheck EquitableColoringCheck(const BlackBoxFamily& family, int samples,
                                      uint64_t seed);
// Same sampling, with the exhaustive search in place of the rule.
EquitableCheck EquitableColoringCheck(const BinaryMatrix& matrix, int samples,
                                      uint64_t seed);

}  // namespace pcover

#endif  // PCOVER_BLACKBOX_H_
