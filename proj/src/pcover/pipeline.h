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

#ifndef PCOVER_PIPELINE_H_
#define PCOVER_PIPELINE_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcover/decomposition.h"
#include "pcover/instance.h"
#include "pcover/merger.h"
#include "pcover/rational.h"

namespace pcover {

struct SolveOptions {
  int k = 3;
  // Bound audit range: k = 1..k_max.
  int k_max = 10;
  bool compute_lp = false;
  // Definitional total-balance check when both dimensions are at most
  // kTotalBalanceCertificationLimit.
  bool certify_tb = true;
};

struct AuditEntry {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SolveReport {
  Cover cover;
  Rational cost;
  Rational covered;
  Rational target;
  std::optional<Rational> lp_value;
  Rational dl_value;
  int k_used = 0;
  // (1 + 3^(1-k)) DL + k c_max at k_used.
  Rational bound;
  int splits = 0;
  std::optional<Rational> ratio_vs_oracle;

  bool exact_hit = false;
  Rational lambda_star;
  int kolen_calls = 0;
  int call_budget = 0;
  std::string sgf_method;
  std::string merge_exit;
  bool interval_fast_path = false;
  BoundAudit bound_audit;
  MergeTrace trace;
  std::vector<AuditEntry> audits;
  // Seconds per stage. Never part of comparison payloads.
  std::map<std::string, double> timings;

  bool AuditsPassed() const;
  // First failing audit as "name: detail", empty when all passed.
  std::string FirstFailure() const;
};

// Standard greedy form, threshold search and merge. Throws
// Error(kNotTotallyBalanced) when no standard greedy form is found or the
// certification finds an unbalanced submatrix, Error(kInfeasible) when P
// exceeds the coverable profit. Audit outcomes are report content.
SolveReport SolvePartialTbc(const Instance& instance,
                            const SolveOptions& options = {});

// Solves the instance restricted to the kept elements and sets (indices into
// the original instance, ascending); returns a cover in reduced indices.
using ReducedSolver = std::function<Cover(
    const Instance& reduced, const std::vector<int>& kept_elements,
    const std::vector<int>& kept_sets)>;

struct AbsorbResult {
  Cover cover;
  Rational cost;
  Cover prefix;  // the enumerated X of the winning combination
  int subset_size = 0;
  long subsets_tried = 0;
  long subsets_solved = 0;
};

inline constexpr long kAbsorbEnumerationLimit = 1000000;

// Enumerates every X of at most s = ceil(k / (alpha - 1)) sets (size first,
// then lexicographic), keeps sets costing at most min c(X), drops elements
// covered by X, lowers P by p(X), solves the rest with `solver` and keeps the
// cheapest X + solution. Ties keep the earlier X. Throws
// Error(kInvalidArgument) for alpha <= 1, Error(kSizeGuard) when the number
// of subsets exceeds kAbsorbEnumerationLimit, Error(kInfeasible) when no
// combination is feasible.
AbsorbResult AbsorbAdditiveError(const Instance& instance, int k,
                                 const Rational& alpha,
                                 const ReducedSolver& solver);
// Uses SolvePartialTbc with parameter k and no LP.
AbsorbResult AbsorbAdditiveError(const Instance& instance, int k,
                                 const Rational& alpha);

struct SeparableReport {
  SolveReport inner;  // on the row-induced matrix B
  std::vector<int> part_of_row;
  Rational lp_value;  // of the original relaxation
  // (1 + 3^(1-k)) rho LP + k c_max.
  Rational bound;
  bool feasible_on_original = false;
  bool within_bound = false;
};

// Solves the LP on A, picks for each element the smallest part q with
// a_i^q x >= (1 - r_i) / rho, and solves the row-induced instance. Throws
// Error(kInternal) when some element has no qualifying part.
SeparableReport SolveRhoSeparable(const Instance& instance,
                                  const Decomposition& decomposition,
                                  const SolveOptions& options = {});

}  // namespace pcover

#endif  // PCOVER_PIPELINE_H_
