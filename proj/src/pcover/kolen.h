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

#ifndef PCOVER_KOLEN_H_
#define PCOVER_KOLEN_H_

#include <string>
#include <vector>

#include "pcover/delta_rational.h"
#include "pcover/instance.h"

namespace pcover {

struct DualSolution {
  std::vector<DeltaRational> y;
  DeltaRational lambda;
  // c_j minus the duals of the elements of set j.
  std::vector<DeltaRational> residuals;
};

struct KolenResult {
  Cover pruned;
  // All sets with zero residual.
  Cover tight;
  DualSolution dual;
};

// Elements in increasing index order: y_i = min(lambda p_i, smallest residual
// over the sets containing i). Requires a Gamma-free matrix; the check is
// skipped when `check_form` is false (callers that certified the matrix once).
DualSolution DualUpdate(const Instance& instance, const DeltaRational& lambda,
                        bool check_form = true);

// Repeatedly keeps the largest remaining tight set and drops every smaller set
// sharing an element of positive dual with it.
Cover ReverseDelete(const Instance& instance, const Cover& tight,
                    const DualSolution& dual);

KolenResult Kolen(const Instance& instance, const DeltaRational& lambda,
                  bool check_form = true);

// c(cover) + lambda * (profit not covered by cover).
DeltaRational PrizeCollectingValue(const Instance& instance,
                                   const Cover& cover,
                                   const DeltaRational& lambda);

struct AuditReport {
  bool passed = true;
  // First violated clause ("a".."d"), empty on success.
  std::string clause;
  std::string detail;
};

// Clauses: (a) c(pruned) + lambda p(uncovered) = sum y; (b) an element with
// positive dual lies in at most one pruned set; (c) uncovered elements have
// y_i = lambda p_i; (d) 0 <= y <= lambda p, residuals non-negative and
// consistent, pruned sets tight.
AuditReport AuditOptimality(const Instance& instance, const KolenResult& result);

}  // namespace pcover

#endif  // PCOVER_KOLEN_H_
