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

#include "pcover/report.h"

namespace pcover {

using nlohmann::json;

json ToJson(const Rational& r) { return r.ToString(); }

json ToJson(const Cover& cover) { return json(cover.sets()); }

json ToJson(const SolveReport& r) {
  json j;
  j["schema"] = kReportSchema;
  j["cover"] = ToJson(r.cover);
  j["cost"] = ToJson(r.cost);
  j["covered"] = ToJson(r.covered);
  j["target"] = ToJson(r.target);
  j["lp_value"] = r.lp_value ? ToJson(*r.lp_value) : json();
  j["dl_value"] = ToJson(r.dl_value);
  j["k_used"] = r.k_used;
  j["bound"] = ToJson(r.bound);
  j["splits"] = r.splits;
  j["ratio_vs_oracle"] = r.ratio_vs_oracle ? ToJson(*r.ratio_vs_oracle) : json();
  j["exact_hit"] = r.exact_hit;
  j["lambda_star"] = ToJson(r.lambda_star);
  j["kolen_calls"] = r.kolen_calls;
  j["call_budget"] = r.call_budget;
  j["sgf_method"] = r.sgf_method;
  j["merge_exit"] = r.merge_exit;
  j["interval_fast_path"] = r.interval_fast_path;
  json bounds = json::array();
  for (const Rational& b : r.bound_audit.bounds) bounds.push_back(ToJson(b));
  j["bound_audit"] = {{"passed", r.bound_audit.passed},
                      {"tightest_k", r.bound_audit.tightest_k},
                      {"bounds", bounds}};
  json audits = json::array();
  for (const AuditEntry& a : r.audits) {
    audits.push_back(
        {{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  }
  j["audits"] = audits;
  j["audits_passed"] = r.AuditsPassed();
  json splits = json::array();
  for (const MergeSplit& s : r.trace.splits) {
    splits.push_back({{"procedure", s.procedure},
                      {"vertex", s.vertex},
                      {"children_flipped", s.children_flipped}});
  }
  j["merge_trace"] = {{"calls", static_cast<int>(r.trace.calls.size())},
                      {"root_flips", r.trace.root_flips},
                      {"splits", splits},
                      {"violations", r.trace.violations}};
  return j;
}

json ToJson(const SeparableReport& r) {
  json j = ToJson(r.inner);
  j["separable"] = {{"part_of_row", r.part_of_row},
                    {"lp_value", ToJson(r.lp_value)},
                    {"bound", ToJson(r.bound)},
                    {"feasible_on_original", r.feasible_on_original},
                    {"within_bound", r.within_bound}};
  return j;
}

json ToJson(const AbsorbResult& r) {
  return {{"cover", ToJson(r.cover)},
          {"cost", ToJson(r.cost)},
          {"prefix", ToJson(r.prefix)},
          {"subset_size", r.subset_size},
          {"subsets_tried", r.subsets_tried},
          {"subsets_solved", r.subsets_solved}};
}

json ToJson(const BlackBoxTranscript& t) {
  json j;
  j["schema"] = kReportSchema;
  j["q"] = t.q;
  j["alpha"] = ToJson(t.alpha);
  j["variant"] = t.variant == BlackBoxVariant::kGeneral ? "general" : "tu";
  json steps = json::array();
  for (const BlackBoxStep& s : t.steps) {
    steps.push_back(
        {{"lambda", ToJson(s.lambda)},
         {"output", s.output},
         {"sets", ToJson(s.sets)},
         {"opt_pc", ToJson(s.opt_pc)},
         {"opt_pc_enumerated",
          s.opt_pc_enumerated ? ToJson(*s.opt_pc_enumerated) : json()},
         {"lmp_lhs", ToJson(s.lmp_lhs)},
         {"lmp_rhs", ToJson(s.lmp_rhs)},
         {"lmp_ok", s.lmp_ok}});
  }
  j["steps"] = steps;
  j["union_sets"] = ToJson(t.union_sets);
  j["best_merged_cost"] =
      t.best_merged_cost ? ToJson(*t.best_merged_cost) : json();
  j["best_merged"] = ToJson(t.best_merged);
  j["opt_cost"] = ToJson(t.opt_cost);
  j["opt_cover"] = ToJson(t.opt_cover);
  j["all_lmp_ok"] = t.all_lmp_ok;
  j["closed_forms_match"] = t.closed_forms_match;
  j["ratio"] = t.best_merged_cost && t.opt_cost.sign() > 0
                   ? ToJson(*t.best_merged_cost / t.opt_cost)
                   : json();
  return j;
}

json TimingsJson(const SolveReport& r) {
  json j = json::object();
  for (const auto& [stage, seconds] : r.timings) j[stage] = seconds;
  return j;
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace pcover
