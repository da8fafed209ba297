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

#ifndef PCOVER_ORACLES_H_
#define PCOVER_ORACLES_H_

#include "pcover/instance.h"
#include "pcover/rational.h"

namespace pcover {

inline constexpr int kBruteForceSetLimit = 24;

struct OracleResult {
  Cover cover;
  Rational cost;
};

// Exhaustive minimum-cost cover with profit >= P; among equal costs the
// lexicographically smallest ascending set list wins. Throws
// Error(kSizeGuard) above kBruteForceSetLimit sets (unless overridden) and
// Error(kInfeasible) when no cover reaches P.
OracleResult BruteForcePartial(const Instance& instance);

// min over all covers of c(C) + lambda * (p(U) - p(C)).
Rational BruteForcePrizeCollecting(const Instance& instance,
                                   const Rational& lambda);

}  // namespace pcover

#endif  // PCOVER_ORACLES_H_
