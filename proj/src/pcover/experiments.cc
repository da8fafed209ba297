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

#include "pcover/experiments.h"

#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "pcover/blackbox.h"
#include "pcover/error.h"
#include "pcover/lp_exact.h"
#include "pcover/oracles.h"
#include "pcover/pipeline.h"
#include "pcover/report.h"

namespace pcover {

using nlohmann::json;

namespace {

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

ExperimentOutput RunGapExperiment(int qmax) {
  if (qmax < 1) throw Error(ErrorCode::kInvalidArgument, "qmax must be >= 1");
  ExperimentOutput out;
  out.payload = {{"schema", kReportSchema}, {"experiment", "gap"}};
  json rows = json::array();
  json timings = json::array();
  for (int q = 1; q <= qmax; ++q) {
    const auto start = std::chrono::steady_clock::now();
    const GapFamily g = GenerateGapFamily(q);
    const Instance& inst = g.generated.instance;
    json row;
    row["q"] = q;
    row["nodes"] = inst.num_sets() + 1;
    row["edges"] = inst.num_sets();
    row["internal_paths"] = g.generated.metadata["internal_paths"];
    row["fringe_paths"] = g.generated.metadata["fringe_paths"];
    row["dl_formula"] = ToJson(g.dl);
    row["expected_ip"] = ToJson(g.expected_ip);

    const FractionalSolution lp = SolveLp(inst);
    row["lp"] = ToJson(lp.value);
    row["dual_feasible"] = IsDualFeasible(inst, g.dual_y, g.dual_lambda);
    row["dual_value"] = ToJson(DualObjective(inst, g.dual_y, g.dual_lambda));

    const Rational w = g.x1_weight;
    const Rational one_minus = Rational(1) - w;
    FractionalSolution mix;
    mix.x.assign(inst.num_sets(), Rational(0));
    for (int j : g.x1.sets()) mix.x[j] += w;
    for (int j : g.x2.sets()) mix.x[j] += one_minus;
    const std::vector<char> m1 = g.x1.ToMask(inst.num_sets());
    const std::vector<char> m2 = g.x2.ToMask(inst.num_sets());
    for (int i = 0; i < inst.num_elements(); ++i) {
      bool in1 = false;
      bool in2 = false;
      for (int j : inst.sets_of(i)) {
        in1 = in1 || m1[j];
        in2 = in2 || m2[j];
      }
      mix.r.push_back((in1 ? Rational(0) : w) + (in2 ? Rational(0) : one_minus));
    }
    for (int j = 0; j < inst.num_sets(); ++j) mix.value += inst.cost(j) * mix.x[j];
    row["primal_feasible"] = IsPrimalFeasible(inst, mix);
    row["primal_value"] = ToJson(mix.value);
    row["x1_weight"] = ToJson(w);

    row["x_tilde_cost"] = ToJson(CoverCost(inst, g.x_tilde));
    row["x_tilde_feasible"] = IsFeasible(inst, g.x_tilde);
    if (inst.num_sets() <= kBruteForceSetLimit) {
      const OracleResult ip = BruteForcePartial(inst);
      row["ip"] = ToJson(ip.cost);
      row["ip_cover"] = ToJson(ip.cover);
      row["ip_matches_formula"] = ip.cost == g.expected_ip;
    } else {
      row["ip"] = json();
      row["ip_cover"] = json();
      row["ip_matches_formula"] = json();
    }
    SolveOptions options;
    options.certify_tb = false;
    const SolveReport solved = SolvePartialTbc(inst, options);
    row["solve_cost"] = ToJson(solved.cost);
    row["solve_dl"] = ToJson(solved.dl_value);
    row["solve_audits_passed"] = solved.AuditsPassed();
    rows.push_back(row);
    timings.push_back({{"q", q}, {"seconds", Seconds(start)}});
  }
  out.payload["rows"] = rows;
  out.timings = {{"rows", timings}};
  return out;
}

ExperimentOutput RunBlackBoxExperiment(int q, const Rational& alpha,
                                       BlackBoxVariant variant,
                                       std::vector<Rational> schedule) {
  const auto start = std::chrono::steady_clock::now();
  if (schedule.empty()) schedule = DefaultBlackBoxSchedule(q, alpha);
  const BlackBoxTranscript t = SimulateBlackBox(q, alpha, variant, schedule);
  ExperimentOutput out;
  out.payload = ToJson(t);
  out.payload["experiment"] = "blackbox";
  if (variant == BlackBoxVariant::kTotallyUnimodular) {
    const BlackBoxFamily family = GenerateBlackBoxFamily(q, alpha, variant);
    const EquitableCheck check = EquitableColoringCheck(family, 64, 1);
    out.payload["equitable"] = {{"passed", check.passed},
                                {"submatrices", check.submatrices_checked}};
  }
  out.timings = {{"seconds", Seconds(start)}};
  return out;
}

namespace {

json CorpusRow(uint64_t seed, double* seconds) {
  const auto start = std::chrono::steady_clock::now();
  const GeneratedInstance g = GenerateCorpusInstance(seed);
  const Instance& inst = g.instance;
  json row;
  row["seed"] = seed;
  row["n"] = inst.num_elements();
  row["m"] = inst.num_sets();
  row["target"] = ToJson(inst.target());
  try {
    SolveOptions options;
    options.compute_lp = true;
    SolveReport r = SolvePartialTbc(inst, options);
    const OracleResult oracle = BruteForcePartial(inst);
    if (oracle.cost.sign() > 0) r.ratio_vs_oracle = r.cost / oracle.cost;
    row["cost"] = ToJson(r.cost);
    row["dl"] = ToJson(r.dl_value);
    row["lp"] = r.lp_value ? ToJson(*r.lp_value) : json();
    row["oracle"] = ToJson(oracle.cost);
    row["ratio"] = r.ratio_vs_oracle ? ToJson(*r.ratio_vs_oracle) : json();
    row["splits"] = r.splits;
    row["kolen_calls"] = r.kolen_calls;
    row["call_budget"] = r.call_budget;
    row["exact_hit"] = r.exact_hit;
    row["audits_passed"] = r.AuditsPassed();
    row["first_failure"] = r.FirstFailure();
  } catch (const Error& e) {
    row["audits_passed"] = false;
    row["first_failure"] = std::string("error: ") + e.what();
  }
  *seconds = Seconds(start);
  return row;
}

}  // namespace

ExperimentOutput RunCorpusExperiment(uint64_t first, uint64_t last, int jobs) {
  if (last < first) throw Error(ErrorCode::kInvalidArgument, "empty seed range");
  if (jobs < 1) throw Error(ErrorCode::kInvalidArgument, "jobs must be >= 1");
  const size_t count = static_cast<size_t>(last - first + 1);
  std::vector<json> rows(count);
  std::vector<double> seconds(count, 0.0);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<size_t> next{0};
  const auto work = [&]() {
    for (size_t i = next++; i < count; i = next++) {
      try {
        rows[i] = CorpusRow(first + i, &seconds[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::thread> threads;
  const int workers = static_cast<int>(std::min<size_t>(jobs, count));
  for (int t = 1; t < workers; ++t) threads.emplace_back(work);
  work();
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  int passed = 0;
  int exact_hits = 0;
  int total_splits = 0;
  json failures = json::array();
  for (const json& row : rows) {
    if (row["audits_passed"].get<bool>()) {
      ++passed;
    } else {
      failures.push_back(row["seed"]);
    }
    if (row.contains("exact_hit") && row["exact_hit"].get<bool>()) ++exact_hits;
    if (row.contains("splits")) total_splits += row["splits"].get<int>();
  }
  ExperimentOutput out;
  out.payload = {{"schema", kReportSchema},
                 {"experiment", "corpus"},
                 {"first_seed", first},
                 {"last_seed", last},
                 {"rows", rows},
                 {"summary",
                  {{"instances", static_cast<int>(count)},
                   {"audits_passed", passed},
                   {"all_audits_passed", passed == static_cast<int>(count)},
                   {"exact_hits", exact_hits},
                   {"total_splits", total_splits},
                   {"failed_seeds", failures}}}};
  out.timings = {{"seconds", Seconds(start)}, {"per_seed", seconds}};
  return out;
}

}  // namespace pcover
