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

#ifndef PCOVER_LP_EXACT_H_
#define PCOVER_LP_EXACT_H_

#include <utility>
#include <vector>

#include "pcover/instance.h"
#include "pcover/rational.h"

namespace pcover {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

// minimize objective . x  subject to rows, x >= 0.
struct LinearProgram {
  struct Row {
    std::vector<std::pair<int, Rational>> coeffs;
    Relation relation = Relation::kLessEqual;
    Rational rhs;
  };
  int num_vars = 0;
  std::vector<Row> rows;
  std::vector<Rational> objective;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> x;
  Rational value;
  int pivots = 0;
};

// Two-phase dense tableau simplex over exact rationals with Bland's rule.
LpResult Minimize(const LinearProgram& lp);

// min c.x  s.t.  A x + r >= 1,  p.r <= p(U) - P,  x, r >= 0.
struct FractionalSolution {
  std::vector<Rational> x;
  std::vector<Rational> r;
  Rational value;
};

// max 1.y - (p(U) - P) lambda  s.t.  A^T y <= c,  y <= lambda p,  y, lambda >= 0.
struct DualFractional {
  std::vector<Rational> y;
  Rational lambda;
  Rational value;
};

FractionalSolution SolveLp(const Instance& instance);
DualFractional SolveDual(const Instance& instance);

bool IsPrimalFeasible(const Instance& instance, const FractionalSolution& s);
bool IsDualFeasible(const Instance& instance, const std::vector<Rational>& y,
                    const Rational& lambda);
Rational DualObjective(const Instance& instance, const std::vector<Rational>& y,
                       const Rational& lambda);

}  // namespace pcover

#endif  // PCOVER_LP_EXACT_H_
