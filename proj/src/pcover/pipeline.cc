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

#include "pcover/pipeline.h"

#include <algorithm>
#include <chrono>
#include <utility>

#include "pcover/error.h"
#include "pcover/kolen.h"
#include "pcover/lp_exact.h"
#include "pcover/tb_matrix.h"
#include "pcover/threshold_search.h"

namespace pcover {
namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double Lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - start_).count();
    start_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void AddAudit(SolveReport& r, std::string name, bool passed,
              std::string detail = "") {
  r.audits.push_back({std::move(name), passed, std::move(detail)});
}

std::string IndexList(const std::vector<int>& v) {
  std::string out;
  for (int x : v) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

bool IsSubset(const Cover& a, const Cover& b) {
  return std::includes(b.sets().begin(), b.sets().end(), a.sets().begin(),
                       a.sets().end());
}

void AuditRun(SolveReport& r, const Instance& instance, const char* name,
              const KolenResult& run) {
  const AuditReport audit = AuditOptimality(instance, run);
  AddAudit(r, std::string("kolen_optimality_") + name, audit.passed,
           audit.passed ? "" : audit.clause + ": " + audit.detail);
  AddAudit(r, std::string("pruned_within_tight_") + name,
           IsSubset(run.pruned, run.tight));
}

// Tight sets of `side` lie among those of `at`, and the value parts of the
// duals agree.
void AuditNesting(SolveReport& r, const char* name, const KolenResult& side,
                  const KolenResult& at) {
  bool same_values = true;
  for (size_t i = 0; i < at.dual.y.size(); ++i) {
    if (side.dual.y[i].value() != at.dual.y[i].value()) same_values = false;
  }
  AddAudit(r, std::string("tight_nested_") + name,
           IsSubset(side.tight, at.tight));
  AddAudit(r, std::string("dual_values_agree_") + name, same_values);
}

std::vector<Rational> ValueParts(const std::vector<DeltaRational>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const DeltaRational& d : v) out.push_back(d.value());
  return out;
}

Rational BoundAt(const Rational& base, const Rational& max_cost, int k) {
  return (Rational(1) + PowerOfThree(1 - k)) * base + max_cost * k;
}

}  // namespace

bool SolveReport::AuditsPassed() const {
  return std::all_of(audits.begin(), audits.end(),
                     [](const AuditEntry& a) { return a.passed; });
}

std::string SolveReport::FirstFailure() const {
  for (const AuditEntry& a : audits) {
    if (!a.passed) return a.detail.empty() ? a.name : a.name + ": " + a.detail;
  }
  return "";
}

SolveReport SolvePartialTbc(const Instance& instance,
                            const SolveOptions& options) {
  if (options.k < 1 || options.k_max < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k and k_max must be >= 1");
  }
  SolveReport r;
  r.target = instance.target();
  r.k_used = options.k;
  r.call_budget =
      ThresholdCallBudget(instance.num_elements(), instance.num_sets());
  const BinaryMatrix& a = instance.matrix();
  Stopwatch clock;

  if (options.certify_tb && a.rows() <= kTotalBalanceCertificationLimit &&
      a.cols() <= kTotalBalanceCertificationLimit) {
    if (auto w = FindUnbalancedSubmatrix(a)) {
      throw Error(ErrorCode::kNotTotallyBalanced,
                  "not totally balanced: cycle submatrix on rows " +
                      IndexList(w->rows) + " and columns " +
                      IndexList(w->cols));
    }
    AddAudit(r, "totally_balanced", true);
  }
  const SgfResult sgf = StandardGreedyForm(a);
  if (!sgf.success) {
    std::string detail = "no standard greedy form found";
    if (sgf.witness) {
      detail += "; Gamma at rows " + std::to_string(sgf.witness->row1) + "," +
                std::to_string(sgf.witness->row2) + " columns " +
                std::to_string(sgf.witness->col1) + "," +
                std::to_string(sgf.witness->col2) + " of the refined order";
    }
    throw Error(ErrorCode::kNotTotallyBalanced, detail);
  }
  r.sgf_method = sgf.method;
  const Instance permuted = ApplyPermutation(instance, sgf.perm);
  r.timings["sgf"] = clock.Lap();

  const ThresholdResult th = FindThreshold(permuted, instance.target());
  r.timings["threshold"] = clock.Lap();
  r.kolen_calls = th.kolen_calls;
  r.lambda_star = th.lambda_star;
  AddAudit(r, "call_budget", r.kolen_calls <= r.call_budget,
           std::to_string(r.kolen_calls) + " calls, budget " +
               std::to_string(r.call_budget));

  const Rational uncoverable_target =
      permuted.total_profit() - permuted.target();
  Cover permuted_cover;
  std::vector<Rational> dual_y;
  Rational dual_lambda;
  if (th.exact_hit) {
    const KolenResult& hit = *th.exact_hit;
    r.exact_hit = true;
    r.merge_exit = "exact-hit";
    AuditRun(r, permuted, "exact", hit);
    permuted_cover = hit.pruned;
    DeltaRational sum_y;
    for (const DeltaRational& y : hit.dual.y) sum_y += y;
    const DeltaRational dl = sum_y - th.exact_lambda * uncoverable_target;
    const Rational cost = CoverCost(permuted, hit.pruned);
    AddAudit(r, "exact_cover_identity", DeltaRational(cost) == dl,
             "cost " + cost.ToString() + " vs " + dl.ToString());
    r.dl_value = dl.value();
    dual_y = ValueParts(hit.dual.y);
    dual_lambda = th.exact_lambda.value();
  } else {
    const KolenResult& below = *th.below;
    const KolenResult& at = *th.at;
    const KolenResult& above = *th.at_or_above;
    AuditRun(r, permuted, "below", below);
    AuditRun(r, permuted, "at", at);
    AuditRun(r, permuted, "above", above);
    AuditNesting(r, "below", below, at);
    AuditNesting(r, "above", above, at);
    const Rational p_below = CoveredProfit(permuted, below.pruned);
    const Rational p_above = CoveredProfit(permuted, above.pruned);
    AddAudit(r, "threshold_bracket",
             p_below < permuted.target() && permuted.target() <= p_above,
             p_below.ToString() + " / " + p_above.ToString());

    dual_y = ValueParts(at.dual.y);
    dual_lambda = th.lambda_star;
    Rational sum_y;
    for (const Rational& y : dual_y) sum_y += y;
    r.dl_value = sum_y - th.lambda_star * uncoverable_target;

    const bool at_above = CoveredProfit(permuted, at.pruned) > permuted.target();
    const KolenResult& lower = at_above ? below : at;
    const KolenResult& upper = at_above ? at : above;
    std::optional<MergerGraph> graph;
    try {
      graph = BuildMergerGraph(permuted, lower.pruned, upper.pruned,
                               lower.dual, upper.dual);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInternal) throw;
      AddAudit(r, "merger_graph", false, e.what());
    }
    if (graph) {
      const std::vector<std::string> issues = CheckMergerGraph(*graph);
      AddAudit(r, "merger_graph", issues.empty(),
               issues.empty() ? "" : issues.front());
      const std::vector<int> white = FindUncoveredWhiteElements(
          permuted, *graph, lower.pruned, upper.pruned, at.dual,
          th.lambda_star);
      AddAudit(r, "white_elements_witnessed", white.empty(),
               white.empty() ? "" : "elements " + IndexList(white));
      permuted_cover = Merge(permuted, *graph, lower.pruned, upper.pruned,
                             permuted.target(), &r.trace);
      AddAudit(r, "merge_contracts", r.trace.violations.empty(),
               r.trace.violations.empty() ? "" : r.trace.violations.front());
      r.splits = static_cast<int>(r.trace.splits.size());
      r.merge_exit = r.trace.exit;
    } else {
      permuted_cover = upper.pruned;
      r.merge_exit = "graph-failure";
    }
  }
  r.timings["merge"] = clock.Lap();

  r.cover = MapCoverToOriginal(permuted_cover, sgf.perm);
  r.cost = CoverCost(instance, r.cover);
  r.covered = CoveredProfit(instance, r.cover);
  AddAudit(r, "feasible", r.covered >= instance.target(),
           r.covered.ToString() + " covered");
  const Rational max_cost = instance.max_cost();
  r.bound_audit = AuditMergeBound(r.cost, r.dl_value, max_cost, options.k_max);
  AddAudit(r, "cost_bound", r.bound_audit.passed,
           r.bound_audit.passed
               ? ""
               : "fails at k = " + std::to_string(r.bound_audit.tightest_k));
  r.bound = BoundAt(r.dl_value, max_cost, options.k);

  r.interval_fast_path = HasConsecutiveOnesRows(a);
  if (options.compute_lp || r.interval_fast_path) {
    const FractionalSolution lp = SolveLp(instance);
    const DualFractional dual = SolveDual(instance);
    r.lp_value = lp.value;
    AddAudit(r, "strong_duality", lp.value == dual.value,
             lp.value.ToString() + " vs " + dual.value.ToString());
    AddAudit(r, "dl_within_lp", r.dl_value <= lp.value,
             r.dl_value.ToString() + " vs " + lp.value.ToString());
    const bool dual_ok = IsDualFeasible(permuted, dual_y, dual_lambda) &&
                         DualObjective(permuted, dual_y, dual_lambda) ==
                             r.dl_value;
    AddAudit(r, "threshold_dual_feasible", dual_ok);
    if (r.interval_fast_path) {
      const Rational limit = lp.value + max_cost;
      AddAudit(r, "interval_fast_path", r.cost <= limit && r.splits <= 1,
               "cost " + r.cost.ToString() + ", LP + c_max " +
                   limit.ToString() + ", splits " + std::to_string(r.splits));
    }
    r.timings["lp"] = clock.Lap();
  }
  return r;
}

AbsorbResult AbsorbAdditiveError(const Instance& instance, int k,
                                 const Rational& alpha,
                                 const ReducedSolver& solver) {
  if (alpha <= Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must exceed 1");
  }
  const int m = instance.num_sets();
  const int n = instance.num_elements();
  int s = 0;
  if (k > 0) {
    const Rational ratio = (Rational(k) / (alpha - Rational(1))).Ceil();
    s = ratio > Rational(m) ? m
                            : static_cast<int>(ratio.mpq().get_num().get_si());
  }
  long total = 0;
  long binom = 1;
  for (int t = 0; t <= s; ++t) {
    if (t > 0) binom = binom * (m - t + 1) / t;
    total += binom;
    if (total > kAbsorbEnumerationLimit) break;
  }
  if (total > kAbsorbEnumerationLimit && !GuardOverridden()) {
    throw Error(ErrorCode::kSizeGuard,
                "absorption would enumerate more than " +
                    std::to_string(kAbsorbEnumerationLimit) + " subsets");
  }

  std::optional<AbsorbResult> best;
  AbsorbResult stats;
  stats.subset_size = s;
  const BinaryMatrix& a = instance.matrix();
  for (int t = 0; t <= s; ++t) {
    std::vector<int> x(t);
    for (int i = 0; i < t; ++i) x[i] = i;
    while (true) {
      ++stats.subsets_tried;
      Rational cx;
      for (int j : x) cx += instance.cost(j);
      if (!best || cx < best->cost) {
        std::vector<char> covered(n, 0);
        std::vector<char> in_x(m, 0);
        Rational px;
        Rational min_cost = t > 0 ? instance.cost(x.front()) : Rational();
        for (int j : x) {
          in_x[j] = 1;
          min_cost = Min(min_cost, instance.cost(j));
          for (int i : instance.elements_of(j)) {
            if (!covered[i]) {
              covered[i] = 1;
              px += instance.profit(i);
            }
          }
        }
        const Rational remaining = instance.target() - px;
        std::optional<Cover> candidate;
        if (remaining.sign() <= 0) {
          candidate = Cover::FromIndices(x, m);
        } else {
          std::vector<int> kept_sets;
          std::vector<int> kept_elements;
          for (int j = 0; j < m; ++j) {
            if (!in_x[j] && (t == 0 || instance.cost(j) <= min_cost)) {
              kept_sets.push_back(j);
            }
          }
          for (int i = 0; i < n; ++i) {
            if (!covered[i]) kept_elements.push_back(i);
          }
          std::vector<Rational> costs;
          for (int j : kept_sets) costs.push_back(instance.cost(j));
          std::vector<Rational> profits;
          for (int i : kept_elements) profits.push_back(instance.profit(i));
          const Instance reduced =
              Instance::Make(a.Submatrix(kept_elements, kept_sets), costs,
                             profits, remaining);
          if (remaining <= reduced.coverable_profit()) {
            ++stats.subsets_solved;
            const Cover sub = solver(reduced, kept_elements, kept_sets);
            std::vector<int> sets = x;
            for (int j : sub.sets()) sets.push_back(kept_sets.at(j));
            candidate = Cover::FromIndices(std::move(sets), m);
          }
        }
        if (candidate) {
          if (!IsFeasible(instance, *candidate)) {
            throw Error(ErrorCode::kAuditFailure,
                        "absorption produced an infeasible cover");
          }
          const Rational cost = CoverCost(instance, *candidate);
          if (!best || cost < best->cost) {
            best = AbsorbResult{*candidate, cost, Cover::FromIndices(x, m), s,
                                0, 0};
          }
        }
      }
      int pos = t - 1;
      while (pos >= 0 && x[pos] == m - t + pos) --pos;
      if (pos < 0) break;
      ++x[pos];
      for (int i = pos + 1; i < t; ++i) x[i] = x[i - 1] + 1;
    }
  }
  if (!best) {
    throw Error(ErrorCode::kInfeasible, "no feasible combination reaches P");
  }
  best->subsets_tried = stats.subsets_tried;
  best->subsets_solved = stats.subsets_solved;
  return *best;
}

AbsorbResult AbsorbAdditiveError(const Instance& instance, int k,
                                 const Rational& alpha) {
  SolveOptions options;
  options.k = std::max(k, 1);
  return AbsorbAdditiveError(
      instance, k, alpha,
      [&](const Instance& reduced, const std::vector<int>&,
          const std::vector<int>&) {
        return SolvePartialTbc(reduced, options).cover;
      });
}

SeparableReport SolveRhoSeparable(const Instance& instance,
                                  const Decomposition& decomposition,
                                  const SolveOptions& options) {
  ValidateDecomposition(instance.matrix(), decomposition);
  Stopwatch clock;
  SeparableReport out;
  const FractionalSolution lp = SolveLp(instance);
  out.lp_value = lp.value;
  const double lp_seconds = clock.Lap();
  const Rational rho(decomposition.rho);
  for (int i = 0; i < instance.num_elements(); ++i) {
    const Rational need = (Rational(1) - lp.r[i]) / rho;
    int chosen = -1;
    for (int q = 0; q < decomposition.rho && chosen < 0; ++q) {
      Rational row;
      for (int j = 0; j < instance.num_sets(); ++j) {
        if (decomposition.parts[q].at(i, j)) row += lp.x[j];
      }
      if (row >= need) chosen = q;
    }
    if (chosen < 0) {
      throw Error(ErrorCode::kInternal,
                  "no part qualifies for element " + std::to_string(i));
    }
    out.part_of_row.push_back(chosen);
  }
  const Instance b =
      Instance::Make(RowInduced(decomposition, out.part_of_row),
                     instance.costs(), instance.profits(), instance.target());
  out.inner = SolvePartialTbc(b, options);
  out.inner.timings["separable_lp"] = lp_seconds;
  out.feasible_on_original = IsFeasible(instance, out.inner.cover);
  out.bound = BoundAt(rho * lp.value, instance.max_cost(), options.k);
  out.within_bound = out.inner.cost <= out.bound;
  AddAudit(out.inner, "separable_feasible", out.feasible_on_original);
  AddAudit(out.inner, "separable_bound", out.within_bound,
           out.inner.cost.ToString() + " vs " + out.bound.ToString());
  return out;
}

}  // namespace pcover
