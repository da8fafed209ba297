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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcover/pcover.h"

namespace {

using nlohmann::json;

int ExitCode(pcover_status status) {
  switch (status) {
    case PCOVER_OK:
      return 0;
    case PCOVER_PARSE_ERROR:
    case PCOVER_INVALID_ARGUMENT:
    case PCOVER_NOT_TOTALLY_BALANCED:
      return 2;
    case PCOVER_INFEASIBLE:
      return 3;
    case PCOVER_AUDIT_FAILURE:
      return 4;
    case PCOVER_SIZE_GUARD:
      return 5;
    case PCOVER_INTERNAL:
    case PCOVER_CHECK_FAILED:
      return 1;
  }
  return 1;
}

struct CliFailure {
  int code;
};

int Report(pcover_status status) {
  if (status != PCOVER_OK) {
    std::cerr << "pcover: " << pcover_status_name(status) << ": "
              << pcover_last_error() << "\n";
  }
  return ExitCode(status);
}

void Check(pcover_status status) {
  if (status != PCOVER_OK) throw CliFailure{Report(status)};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "pcover: cannot read '" << path << "'\n";
    throw CliFailure{2};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Empty path or "-" means stdout.
void WriteOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "pcover: cannot write '" << path << "'\n";
    throw CliFailure{1};
  }
}

class CString {
 public:
  ~CString() { pcover_string_free(s_); }
  char** out() { return &s_; }
  std::string str() const { return s_ == nullptr ? "" : s_; }
  bool null() const { return s_ == nullptr; }

 private:
  char* s_ = nullptr;
};

struct InstanceHandle {
  pcover_instance* p = nullptr;
  ~InstanceHandle() { pcover_instance_free(p); }
};

struct DecompositionHandle {
  pcover_decomposition* p = nullptr;
  ~DecompositionHandle() { pcover_decomposition_free(p); }
};

struct GeneratedHandle {
  pcover_generated* p = nullptr;
  ~GeneratedHandle() { pcover_generated_free(p); }
};

struct SolveArgs {
  std::string input;
  std::string decomposition;
  int k = 3;
  int k_max = 10;
  bool no_lp = false;
  bool no_certify = false;
  bool oracle = false;
  std::vector<std::string> absorb;
  std::string output;
  std::string timings;
};

int RunSolve(const SolveArgs& a) {
  InstanceHandle inst;
  Check(pcover_instance_parse(ReadFile(a.input).c_str(), &inst.p));
  DecompositionHandle dec;
  if (!a.decomposition.empty()) {
    Check(pcover_decomposition_parse(ReadFile(a.decomposition).c_str(), inst.p,
                                     &dec.p));
  }
  pcover_solve_options o;
  pcover_solve_options_init(&o);
  o.k = a.k;
  o.k_max = a.k_max;
  o.compute_lp = a.no_lp ? 0 : 1;
  o.certify_tb = a.no_certify ? 0 : 1;
  o.oracle = a.oracle ? 1 : 0;
  if (!a.absorb.empty()) {
    o.absorb = 1;
    try {
      o.absorb_k = std::stoi(a.absorb[0]);
    } catch (const std::exception&) {
      std::cerr << "pcover: --absorb expects an integer k\n";
      return 2;
    }
    o.absorb_alpha = a.absorb[1].c_str();
  }
  CString report;
  CString timings;
  const pcover_status s =
      pcover_solve(inst.p, dec.p, &o, report.out(), timings.out());
  if (!report.null()) WriteOut(a.output, report.str());
  if (!a.timings.empty() && !timings.null()) WriteOut(a.timings, timings.str());
  return Report(s);
}

struct GenerateArgs {
  std::string family;
  json params = json::object();
  std::string tree_input;
  std::string output;
  std::string decomposition;
  std::string metadata;
  std::string tree_output;
};

int RunGenerate(GenerateArgs a) {
  if (!a.tree_input.empty()) a.params["tree"] = ReadFile(a.tree_input);
  GeneratedHandle g;
  Check(pcover_generate(a.family.c_str(), a.params.dump().c_str(), &g.p));
  CString text;
  Check(pcover_instance_render(pcover_generated_instance(g.p), text.out()));
  WriteOut(a.output, text.str());
  if (!a.decomposition.empty()) {
    CString dec;
    Check(pcover_decomposition_render(pcover_generated_decomposition(g.p),
                                      dec.out()));
    WriteOut(a.decomposition, dec.str());
  }
  if (!a.metadata.empty()) {
    CString meta;
    Check(pcover_generated_metadata(g.p, meta.out()));
    WriteOut(a.metadata, meta.str());
  }
  if (!a.tree_output.empty()) {
    CString tree;
    Check(pcover_generated_tree(g.p, tree.out()));
    if (tree.null()) {
      std::cerr << "pcover: family '" << a.family << "' has no tree\n";
      return 2;
    }
    WriteOut(a.tree_output, tree.str());
  }
  return 0;
}

// "A..B" or a single seed.
bool ParseSeedRange(const std::string& text, uint64_t* first, uint64_t* last) {
  try {
    const size_t dots = text.find("..");
    size_t used = 0;
    if (dots == std::string::npos) {
      *first = *last = std::stoull(text, &used);
      return used == text.size();
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    *first = std::stoull(a, &used);
    if (used != a.size()) return false;
    *last = std::stoull(b, &used);
    return used == b.size() && *first <= *last;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact partial totally balanced cover solver"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pcover_version());

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("--input", solve.input, "PCOV instance file")
      ->required();
  solve_cmd->add_option("--decomposition", solve.decomposition,
                        "PCOVDEC file; solves through the separable reduction");
  solve_cmd->add_option("--k", solve.k, "Merge parameter k")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--k-max", solve.k_max, "Bound audit range 1..k_max")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--no-lp", solve.no_lp, "Skip the exact LP");
  solve_cmd->add_flag("--no-certify", solve.no_certify,
                      "Skip the definitional total-balance check");
  solve_cmd->add_flag("--oracle", solve.oracle,
                      "Compare with brute force (at most 24 sets)");
  solve_cmd->add_option("--absorb", solve.absorb,
                        "Absorb the additive error: K ALPHA")
      ->expected(2);
  solve_cmd->add_option("--output", solve.output, "Report file (default stdout)");
  solve_cmd->add_option("--timings", solve.timings, "Timing JSON file");

  GenerateArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("generate", "Generate an instance");
  gen_cmd->add_option("family", gen.family,
                      "gap, blackbox, random, corpus, multicut, pathhit, rects")
      ->required()
      ->check(CLI::IsMember({"gap", "blackbox", "random", "corpus", "multicut",
                             "pathhit", "rects"}));
  std::optional<int> q, nodes, cover_paths, demand_paths, max_edges, max_pairs,
      dimension, boxes, lines;
  std::optional<uint64_t> seed;
  std::optional<std::string> alpha, target;
  bool tu = false;
  gen_cmd->add_option("--q", q, "Family parameter q");
  gen_cmd->add_option("--alpha", alpha, "Rational alpha (blackbox)");
  gen_cmd->add_flag("--tu", tu, "Totally unimodular black-box variant");
  gen_cmd->add_option("--seed", seed, "Seed");
  gen_cmd->add_option("--nodes", nodes, "Tree nodes");
  gen_cmd->add_option("--cover-paths", cover_paths, "Cover paths");
  gen_cmd->add_option("--demand-paths", demand_paths, "Demand paths");
  gen_cmd->add_option("--max-edges", max_edges, "Multicut edge bound");
  gen_cmd->add_option("--max-pairs", max_pairs, "Multicut pair bound");
  gen_cmd->add_option("--dimension", dimension, "Rectangle dimension");
  gen_cmd->add_option("--boxes", boxes, "Rectangles");
  gen_cmd->add_option("--lines", lines, "Lines per axis");
  gen_cmd->add_option("--target", target, "Rational target P");
  gen_cmd->add_option("--tree", gen.tree_input, "TREE file (multicut)");
  gen_cmd->add_option("--output", gen.output, "Instance file (default stdout)");
  gen_cmd->add_option("--decomposition", gen.decomposition,
                      "Write the PCOVDEC file");
  gen_cmd->add_option("--metadata", gen.metadata, "Write the metadata JSON");
  gen_cmd->add_option("--tree-output", gen.tree_output, "Write the TREE file");

  std::string verify_check;
  std::string verify_input;
  std::string verify_output;
  std::optional<int> verify_q, verify_samples;
  std::optional<uint64_t> verify_seed;
  std::optional<std::string> verify_alpha;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a check");
  verify_cmd->add_option("check", verify_check, "tb, sgf, lp-duality, equitable")
      ->required()
      ->check(CLI::IsMember({"tb", "sgf", "lp-duality", "equitable"}));
  verify_cmd->add_option("--input", verify_input, "PCOV instance file");
  verify_cmd->add_option("--q", verify_q,
                         "Check the TU black-box family of this q (equitable)");
  verify_cmd->add_option("--alpha", verify_alpha, "Rational alpha");
  verify_cmd->add_option("--samples", verify_samples, "Sampled submatrices");
  verify_cmd->add_option("--seed", verify_seed, "Sampling seed");
  verify_cmd->add_option("--output", verify_output, "Report file");

  std::string exp_name;
  std::string exp_output;
  std::string exp_timings;
  std::optional<int> exp_qmax, exp_q, exp_jobs;
  std::optional<std::string> exp_alpha;
  std::string exp_seeds = "1..200";
  bool exp_tu = false;
  CLI::App* exp_cmd = app.add_subcommand("experiment", "Canned experiments");
  exp_cmd->add_option("name", exp_name, "gap, blackbox, corpus")
      ->required()
      ->check(CLI::IsMember({"gap", "blackbox", "corpus"}));
  exp_cmd->add_option("--qmax", exp_qmax, "Largest q (gap)");
  exp_cmd->add_option("--q", exp_q, "q (blackbox)");
  exp_cmd->add_option("--alpha", exp_alpha, "Rational alpha (blackbox)");
  exp_cmd->add_flag("--tu", exp_tu, "TU variant (blackbox)");
  exp_cmd->add_option("--seeds", exp_seeds, "Seed range A..B (corpus)");
  exp_cmd->add_option("--jobs", exp_jobs, "Worker threads (corpus)")
      ->check(CLI::PositiveNumber);
  exp_cmd->add_option("--output", exp_output, "Payload file (default stdout)");
  exp_cmd->add_option("--timings", exp_timings, "Timing JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve_cmd) {
      if (!solve.absorb.empty() && solve.absorb.size() != 2) {
        std::cerr << "pcover: --absorb expects K ALPHA\n";
        return 2;
      }
      return RunSolve(solve);
    }
    if (*gen_cmd) {
      const auto put = [&](const char* key, const auto& v) {
        if (v) gen.params[key] = *v;
      };
      put("q", q);
      put("alpha", alpha);
      put("seed", seed);
      put("nodes", nodes);
      put("cover_paths", cover_paths);
      put("demand_paths", demand_paths);
      put("max_edges", max_edges);
      put("max_pairs", max_pairs);
      put("dimension", dimension);
      put("boxes", boxes);
      put("lines", lines);
      put("target", target);
      if (tu) gen.params["tu"] = true;
      return RunGenerate(gen);
    }
    if (*verify_cmd) {
      json params = json::object();
      if (verify_q) params["q"] = *verify_q;
      if (verify_alpha) params["alpha"] = *verify_alpha;
      if (verify_samples) params["samples"] = *verify_samples;
      if (verify_seed) params["seed"] = *verify_seed;
      InstanceHandle inst;
      if (!verify_input.empty()) {
        Check(pcover_instance_parse(ReadFile(verify_input).c_str(), &inst.p));
      }
      CString report;
      const pcover_status s = pcover_verify(
          verify_check.c_str(), inst.p, params.dump().c_str(), report.out());
      if (!report.null()) WriteOut(verify_output, report.str());
      return Report(s);
    }
    if (*exp_cmd) {
      json params = json::object();
      if (exp_name == "gap" && exp_qmax) params["qmax"] = *exp_qmax;
      if (exp_name == "blackbox") {
        if (exp_q) params["q"] = *exp_q;
        if (exp_alpha) params["alpha"] = *exp_alpha;
        params["tu"] = exp_tu;
      }
      if (exp_name == "corpus") {
        uint64_t first = 0;
        uint64_t last = 0;
        if (!ParseSeedRange(exp_seeds, &first, &last)) {
          std::cerr << "pcover: --seeds expects A..B\n";
          return 2;
        }
        params["first"] = first;
        params["last"] = last;
        params["jobs"] = exp_jobs.value_or(1);
      }
      CString payload;
      CString timings;
      const pcover_status s =
          pcover_experiment(exp_name.c_str(), params.dump().c_str(),
                            payload.out(), timings.out());
      if (!payload.null()) WriteOut(exp_output, payload.str());
      if (!exp_timings.empty() && !timings.null()) {
        WriteOut(exp_timings, timings.str());
      }
      return Report(s);
    }
  } catch (const CliFailure& f) {
    return f.code;
  }
  return 1;
}
