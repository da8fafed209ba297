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

#include "pcover/pcover.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "pcover/blackbox.h"
#include "pcover/decomposition.h"
#include "pcover/error.h"
#include "pcover/experiments.h"
#include "pcover/formats.h"
#include "pcover/instance.h"
#include "pcover/instances_gen.h"
#include "pcover/lp_exact.h"
#include "pcover/oracles.h"
#include "pcover/pipeline.h"
#include "pcover/report.h"
#include "pcover/tb_matrix.h"

struct pcover_instance {
  pcover::Instance value;
};

struct pcover_decomposition {
  pcover::Decomposition value;
};

struct pcover_generated {
  pcover_instance instance;
  pcover_decomposition decomposition;
  std::optional<pcover::TreeInstance> tree;
  nlohmann::json metadata;
};

namespace {

using nlohmann::json;
using pcover::ErrorCode;
using pcover::Rational;

thread_local std::string last_error;

pcover_status ToStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return PCOVER_INVALID_ARGUMENT;
    case ErrorCode::kParse:
      return PCOVER_PARSE_ERROR;
    case ErrorCode::kInfeasible:
      return PCOVER_INFEASIBLE;
    case ErrorCode::kAuditFailure:
      return PCOVER_AUDIT_FAILURE;
    case ErrorCode::kSizeGuard:
      return PCOVER_SIZE_GUARD;
    case ErrorCode::kNotTotallyBalanced:
      return PCOVER_NOT_TOTALLY_BALANCED;
    case ErrorCode::kInternal:
      return PCOVER_INTERNAL;
  }
  return PCOVER_INTERNAL;
}

template <typename F>
pcover_status Guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const pcover::Error& e) {
    last_error = e.what();
    return ToStatus(e.code());
  } catch (const json::exception& e) {
    last_error = std::string("bad parameters: ") + e.what();
    return PCOVER_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PCOVER_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return PCOVER_INTERNAL;
  }
}

char* Copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Emit(char** out, const std::string& s) {
  if (out != nullptr) *out = Copy(s);
}

void Require(bool ok, const char* what) {
  if (!ok) throw pcover::Error(ErrorCode::kInvalidArgument, what);
}

json ParseParams(const char* params_json) {
  if (params_json == nullptr || *params_json == '\0') return json::object();
  json j = json::parse(params_json);
  Require(j.is_object(), "parameters must be a JSON object");
  return j;
}

long GetInt(const json& p, const char* key, long fallback) {
  if (!p.contains(key)) return fallback;
  Require(p[key].is_number_integer(), "integer parameter expected");
  return p[key].get<long>();
}

uint64_t GetSeed(const json& p, const char* key, uint64_t fallback) {
  if (!p.contains(key)) return fallback;
  Require(p[key].is_number_unsigned() || p[key].is_number_integer(),
          "seed must be a non-negative integer");
  Require(!p[key].is_number_integer() || p[key].get<long long>() >= 0,
          "seed must be a non-negative integer");
  return p[key].get<uint64_t>();
}

bool GetBool(const json& p, const char* key, bool fallback) {
  if (!p.contains(key)) return fallback;
  Require(p[key].is_boolean(), "boolean parameter expected");
  return p[key].get<bool>();
}

std::optional<Rational> GetRational(const json& p, const char* key) {
  if (!p.contains(key) || p[key].is_null()) return std::nullopt;
  if (p[key].is_number_integer()) return Rational(p[key].get<long>());
  Require(p[key].is_string(), "rational parameter expected");
  std::optional<Rational> r = Rational::Parse(p[key].get<std::string>());
  Require(r.has_value(), "malformed rational parameter");
  return r;
}

int AsInt(long v, const char* what) {
  Require(v >= -(1L << 30) && v <= (1L << 30), what);
  return static_cast<int>(v);
}

pcover_generated* Wrap(pcover::GeneratedInstance g) {
  auto* out = new pcover_generated;
  out->instance.value = std::move(g.instance);
  out->decomposition.value = std::move(g.decomposition);
  out->tree = std::move(g.tree);
  out->metadata = std::move(g.metadata);
  return out;
}

pcover::GeneratedInstance Generate(const std::string& family, const json& p) {
  using pcover::GeneratedInstance;
  if (family == "gap") {
    pcover::GapFamily g =
        pcover::GenerateGapFamily(AsInt(GetInt(p, "q", 1), "bad q"));
    return std::move(g.generated);
  }
  if (family == "blackbox") {
    const int q = AsInt(GetInt(p, "q", 2), "bad q");
    const Rational alpha = GetRational(p, "alpha").value_or(Rational(1));
    const auto variant = GetBool(p, "tu", false)
                             ? pcover::BlackBoxVariant::kTotallyUnimodular
                             : pcover::BlackBoxVariant::kGeneral;
    pcover::BlackBoxFamily f = pcover::GenerateBlackBoxFamily(q, alpha, variant);
    GeneratedInstance g{f.instance,
                        pcover::Decomposition::Trivial(f.instance.matrix()),
                        std::nullopt, json::object()};
    g.metadata["family"] = "blackbox";
    g.metadata["q"] = q;
    g.metadata["alpha"] = alpha.ToString();
    g.metadata["variant"] = GetBool(p, "tu", false) ? "tu" : "general";
    g.metadata["kind"] = std::string(f.kind.begin(), f.kind.end());
    g.metadata["opt_cost"] = "1";
    g.metadata["closed_forms"] = {"(q^3+2q)*lambda", "2/3*alpha+2q*lambda",
                                  "4/3*alpha", "1+q*lambda"};
    return g;
  }
  if (family == "random") {
    pcover::RandomPathsOptions o;
    o.seed = GetSeed(p, "seed", 0);
    o.nodes = AsInt(GetInt(p, "nodes", 10), "bad nodes");
    o.num_cover_paths = AsInt(GetInt(p, "cover_paths", 6), "bad cover_paths");
    o.num_demand_paths =
        AsInt(GetInt(p, "demand_paths", 6), "bad demand_paths");
    o.target = GetRational(p, "target");
    return pcover::GenerateRandomDescendingPaths(o);
  }
  if (family == "corpus") {
    return pcover::GenerateCorpusInstance(GetSeed(p, "seed", 1));
  }
  if (family == "multicut") {
    if (p.contains("tree")) {
      Require(p["tree"].is_string(), "tree must be TREE text");
      return pcover::ReduceMulticut(
          pcover::ParseTree(p["tree"].get<std::string>()),
          GetRational(p, "target"));
    }
    return pcover::GenerateRandomMulticut(
        GetSeed(p, "seed", 1), AsInt(GetInt(p, "max_edges", 15), "bad edges"),
        AsInt(GetInt(p, "max_pairs", 10), "bad pairs"));
  }
  if (family == "pathhit") {
    return pcover::GenerateRandomPathHitting(
        GetSeed(p, "seed", 1), AsInt(GetInt(p, "nodes", 10), "bad nodes"),
        AsInt(GetInt(p, "cover_paths", 6), "bad cover_paths"),
        AsInt(GetInt(p, "demand_paths", 6), "bad demand_paths"));
  }
  if (family == "rects") {
    const int d = AsInt(GetInt(p, "dimension", 1), "bad dimension");
    pcover::GeneratedInstance g = pcover::ReduceRectangleStabbing(
        pcover::GenerateRandomRectangles(
            GetSeed(p, "seed", 1), d,
            AsInt(GetInt(p, "boxes", 8), "bad boxes"),
            AsInt(GetInt(p, "lines", 5), "bad lines")));
    g.metadata["seed"] = GetSeed(p, "seed", 1);
    return g;
  }
  throw pcover::Error(ErrorCode::kInvalidArgument,
                      "unknown family '" + family + "'");
}

json Witness(const pcover::GammaWitness& w) {
  return {{"row1", w.row1}, {"row2", w.row2}, {"col1", w.col1}, {"col2", w.col2}};
}

}  // namespace

extern "C" {

const char* pcover_version(void) { return "1.0.0"; }

const char* pcover_last_error(void) { return last_error.c_str(); }

const char* pcover_status_name(pcover_status status) {
  switch (status) {
    case PCOVER_OK:
      return "ok";
    case PCOVER_INVALID_ARGUMENT:
      return "invalid argument";
    case PCOVER_PARSE_ERROR:
      return "parse error";
    case PCOVER_INFEASIBLE:
      return "infeasible";
    case PCOVER_AUDIT_FAILURE:
      return "audit failure";
    case PCOVER_SIZE_GUARD:
      return "size guard";
    case PCOVER_NOT_TOTALLY_BALANCED:
      return "not totally balanced";
    case PCOVER_INTERNAL:
      return "internal error";
    case PCOVER_CHECK_FAILED:
      return "check failed";
  }
  return "unknown status";
}

void pcover_string_free(char* s) { std::free(s); }

pcover_status pcover_instance_parse(const char* text, pcover_instance** out) {
  return Guarded([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    *out = new pcover_instance{pcover::ParseInstance(text)};
    return PCOVER_OK;
  });
}

pcover_status pcover_instance_render(const pcover_instance* instance,
                                     char** out) {
  return Guarded([&] {
    Require(instance != nullptr && out != nullptr, "null argument");
    *out = Copy(pcover::RenderInstance(instance->value));
    return PCOVER_OK;
  });
}

pcover_status pcover_instance_dims(const pcover_instance* instance,
                                   int* num_elements, int* num_sets) {
  return Guarded([&] {
    Require(instance != nullptr, "null instance");
    if (num_elements != nullptr) *num_elements = instance->value.num_elements();
    if (num_sets != nullptr) *num_sets = instance->value.num_sets();
    return PCOVER_OK;
  });
}

void pcover_instance_free(pcover_instance* instance) { delete instance; }

pcover_status pcover_decomposition_parse(const char* text,
                                         const pcover_instance* instance,
                                         pcover_decomposition** out) {
  return Guarded([&] {
    Require(text != nullptr && instance != nullptr && out != nullptr,
            "null argument");
    const pcover::Instance& inst = instance->value;
    pcover::Decomposition d = pcover::ParseDecomposition(
        text, inst.num_elements(), inst.num_sets());
    pcover::ValidateDecomposition(inst.matrix(), d);
    *out = new pcover_decomposition{std::move(d)};
    return PCOVER_OK;
  });
}

pcover_status pcover_decomposition_render(
    const pcover_decomposition* decomposition, char** out) {
  return Guarded([&] {
    Require(decomposition != nullptr && out != nullptr, "null argument");
    *out = Copy(pcover::RenderDecomposition(decomposition->value));
    return PCOVER_OK;
  });
}

void pcover_decomposition_free(pcover_decomposition* decomposition) {
  delete decomposition;
}

void pcover_solve_options_init(pcover_solve_options* options) {
  if (options == nullptr) return;
  options->k = 3;
  options->k_max = 10;
  options->compute_lp = 1;
  options->certify_tb = 1;
  options->oracle = 0;
  options->absorb = 0;
  options->absorb_k = 3;
  options->absorb_alpha = "2";
}

pcover_status pcover_solve(const pcover_instance* instance,
                           const pcover_decomposition* decomposition,
                           const pcover_solve_options* options,
                           char** report_json, char** timings_json) {
  return Guarded([&] {
    Require(instance != nullptr, "null instance");
    pcover_solve_options defaults;
    pcover_solve_options_init(&defaults);
    const pcover_solve_options& o = options != nullptr ? *options : defaults;
    const pcover::Instance& inst = instance->value;
    pcover::SolveOptions so;
    so.k = o.k;
    so.k_max = o.k_max;
    so.compute_lp = o.compute_lp != 0;
    so.certify_tb = o.certify_tb != 0;

    std::optional<pcover::OracleResult> oracle;
    if (o.oracle != 0 && (inst.num_sets() <= pcover::kBruteForceSetLimit ||
                          pcover::GuardOverridden())) {
      oracle = pcover::BruteForcePartial(inst);
    }
    json report;
    json timings;
    bool passed = true;
    if (decomposition != nullptr) {
      pcover::SeparableReport r =
          pcover::SolveRhoSeparable(inst, decomposition->value, so);
      if (oracle && oracle->cost.sign() > 0) {
        r.inner.ratio_vs_oracle = r.inner.cost / oracle->cost;
      }
      report = pcover::ToJson(r);
      timings = pcover::TimingsJson(r.inner);
      passed = r.inner.AuditsPassed();
    } else {
      pcover::SolveReport r = pcover::SolvePartialTbc(inst, so);
      if (oracle && oracle->cost.sign() > 0) {
        r.ratio_vs_oracle = r.cost / oracle->cost;
      }
      report = pcover::ToJson(r);
      timings = pcover::TimingsJson(r);
      passed = r.AuditsPassed();
    }
    if (oracle) {
      report["oracle"] = {{"cost", pcover::ToJson(oracle->cost)},
                          {"cover", pcover::ToJson(oracle->cover)}};
    } else {
      report["oracle"] = json();
    }
    if (o.absorb != 0) {
      Require(o.absorb_alpha != nullptr, "absorb_alpha missing");
      const std::optional<Rational> alpha = Rational::Parse(o.absorb_alpha);
      Require(alpha.has_value(), "malformed absorb_alpha");
      int inner_failures = 0;
      pcover::SolveOptions inner = so;
      inner.k = std::max(o.absorb_k, 1);
      inner.compute_lp = false;
      const pcover::AbsorbResult a = pcover::AbsorbAdditiveError(
          inst, o.absorb_k, *alpha,
          [&](const pcover::Instance& reduced, const std::vector<int>& rows,
              const std::vector<int>& cols) {
            if (decomposition == nullptr) {
              pcover::SolveReport r = pcover::SolvePartialTbc(reduced, inner);
              if (!r.AuditsPassed()) ++inner_failures;
              return r.cover;
            }
            pcover::SeparableReport r = pcover::SolveRhoSeparable(
                reduced,
                pcover::RestrictDecomposition(decomposition->value, rows, cols),
                inner);
            if (!r.inner.AuditsPassed()) ++inner_failures;
            return r.inner.cover;
          });
      json absorb = pcover::ToJson(a);
      absorb["alpha"] = alpha->ToString();
      absorb["k"] = o.absorb_k;
      absorb["inner_audit_failures"] = inner_failures;
      absorb["ratio_vs_oracle"] =
          oracle && oracle->cost.sign() > 0 ? pcover::ToJson(a.cost / oracle->cost)
                                            : json();
      report["absorb"] = absorb;
      if (inner_failures > 0) passed = false;
    }
    Emit(report_json, pcover::Dump(report));
    Emit(timings_json, pcover::Dump(timings));
    if (!passed) {
      last_error = "one or more audits failed";
      return PCOVER_AUDIT_FAILURE;
    }
    return PCOVER_OK;
  });
}

pcover_status pcover_generate(const char* family, const char* params_json,
                              pcover_generated** out) {
  return Guarded([&] {
    Require(family != nullptr && out != nullptr, "null argument");
    *out = Wrap(Generate(family, ParseParams(params_json)));
    return PCOVER_OK;
  });
}

const pcover_instance* pcover_generated_instance(
    const pcover_generated* generated) {
  return generated == nullptr ? nullptr : &generated->instance;
}

const pcover_decomposition* pcover_generated_decomposition(
    const pcover_generated* generated) {
  return generated == nullptr ? nullptr : &generated->decomposition;
}

pcover_status pcover_generated_metadata(const pcover_generated* generated,
                                        char** out) {
  return Guarded([&] {
    Require(generated != nullptr && out != nullptr, "null argument");
    *out = Copy(pcover::Dump(generated->metadata));
    return PCOVER_OK;
  });
}

pcover_status pcover_generated_tree(const pcover_generated* generated,
                                    char** text) {
  return Guarded([&] {
    Require(generated != nullptr && text != nullptr, "null argument");
    *text = generated->tree ? Copy(pcover::RenderTree(*generated->tree))
                            : nullptr;
    return PCOVER_OK;
  });
}

void pcover_generated_free(pcover_generated* generated) { delete generated; }

pcover_status pcover_verify(const char* check, const pcover_instance* instance,
                            const char* params_json, char** report_json) {
  return Guarded([&] {
    Require(check != nullptr, "null check");
    const json p = ParseParams(params_json);
    const std::string name = check;
    json r = {{"schema", pcover::kReportSchema}, {"check", name}};
    bool passed = true;
    if (name == "equitable" && p.contains("q")) {
      const int q = AsInt(GetInt(p, "q", 2), "bad q");
      const Rational alpha = GetRational(p, "alpha").value_or(Rational(1));
      const pcover::BlackBoxFamily f = pcover::GenerateBlackBoxFamily(
          q, alpha, pcover::BlackBoxVariant::kTotallyUnimodular);
      const pcover::EquitableCheck c = pcover::EquitableColoringCheck(
          f, AsInt(GetInt(p, "samples", 64), "bad samples"),
          GetSeed(p, "seed", 1));
      passed = c.passed;
      r["method"] = "constructive";
      r["submatrices"] = c.submatrices_checked;
      r["counterexample_columns"] = c.counterexample;
    } else {
      Require(instance != nullptr, "this check needs an instance");
      const pcover::Instance& inst = instance->value;
      const pcover::BinaryMatrix& a = inst.matrix();
      if (name == "tb") {
        const auto w = pcover::FindUnbalancedSubmatrix(a);
        passed = !w.has_value();
        r["witness"] = w ? json{{"rows", w->rows}, {"cols", w->cols}} : json();
      } else if (name == "sgf") {
        const pcover::SgfResult s = pcover::StandardGreedyForm(a);
        passed = s.success;
        r["method"] = s.method;
        r["certified_by_exhaustion"] = s.certified_by_exhaustion;
        r["witness"] = s.witness ? Witness(*s.witness) : json();
        r["row_order"] = s.success ? json(s.perm.RowOrder()) : json();
        r["col_order"] = s.success ? json(s.perm.ColOrder()) : json();
      } else if (name == "lp-duality") {
        const pcover::FractionalSolution lp = pcover::SolveLp(inst);
        const pcover::DualFractional dual = pcover::SolveDual(inst);
        const bool primal_ok = pcover::IsPrimalFeasible(inst, lp);
        const bool dual_ok = pcover::IsDualFeasible(inst, dual.y, dual.lambda);
        passed = primal_ok && dual_ok && lp.value == dual.value;
        r["primal"] = pcover::ToJson(lp.value);
        r["dual"] = pcover::ToJson(dual.value);
        r["primal_feasible"] = primal_ok;
        r["dual_feasible"] = dual_ok;
      } else if (name == "equitable") {
        const pcover::EquitableCheck c = pcover::EquitableColoringCheck(
            a, AsInt(GetInt(p, "samples", 16), "bad samples"),
            GetSeed(p, "seed", 1));
        passed = c.passed;
        r["method"] = "exhaustive";
        r["submatrices"] = c.submatrices_checked;
        r["counterexample_columns"] = c.counterexample;
      } else {
        throw pcover::Error(ErrorCode::kInvalidArgument,
                            "unknown check '" + name + "'");
      }
    }
    r["passed"] = passed;
    Emit(report_json, pcover::Dump(r));
    if (!passed) {
      last_error = "check '" + name + "' failed";
      return PCOVER_CHECK_FAILED;
    }
    return PCOVER_OK;
  });
}

pcover_status pcover_experiment(const char* name, const char* params_json,
                                char** payload_json, char** timings_json) {
  return Guarded([&] {
    Require(name != nullptr, "null experiment name");
    const json p = ParseParams(params_json);
    const std::string n = name;
    pcover::ExperimentOutput out;
    if (n == "gap") {
      out = pcover::RunGapExperiment(AsInt(GetInt(p, "qmax", 2), "bad qmax"));
    } else if (n == "blackbox") {
      out = pcover::RunBlackBoxExperiment(
          AsInt(GetInt(p, "q", 3), "bad q"),
          GetRational(p, "alpha").value_or(Rational(1)),
          GetBool(p, "tu", false) ? pcover::BlackBoxVariant::kTotallyUnimodular
                                  : pcover::BlackBoxVariant::kGeneral);
    } else if (n == "corpus") {
      out = pcover::RunCorpusExperiment(
          GetSeed(p, "first", 1), GetSeed(p, "last", 200),
          AsInt(GetInt(p, "jobs", 1), "bad jobs"));
    } else {
      throw pcover::Error(ErrorCode::kInvalidArgument,
                          "unknown experiment '" + n + "'");
    }
    Emit(payload_json, pcover::Dump(out.payload));
    Emit(timings_json, pcover::Dump(out.timings));
    return PCOVER_OK;
  });
}

}  // extern "C"
