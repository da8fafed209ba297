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

#ifndef PCOVER_PCOVER_H_
#define PCOVER_PCOVER_H_

#ifdef __cplusplus
extern "C" {
#endif

#if defined(PCOVER_BUILDING_LIBRARY)
#define PCOVER_API __attribute__((visibility("default")))
#else
#define PCOVER_API
#endif

// Every call returns a status; on failure pcover_last_error() describes it.
// Strings returned through char** are owned by the caller and released with
// pcover_string_free. Handles are immutable after creation and may be shared
// across threads; the last error is per thread.
typedef enum pcover_status {
  PCOVER_OK = 0,
  PCOVER_INVALID_ARGUMENT = 1,
  PCOVER_PARSE_ERROR = 2,
  PCOVER_INFEASIBLE = 3,
  PCOVER_AUDIT_FAILURE = 4,
  PCOVER_SIZE_GUARD = 5,
  PCOVER_NOT_TOTALLY_BALANCED = 6,
  PCOVER_INTERNAL = 7,
  // A verification ran and reported a counterexample.
  PCOVER_CHECK_FAILED = 8
} pcover_status;

typedef struct pcover_instance pcover_instance;
typedef struct pcover_decomposition pcover_decomposition;
typedef struct pcover_generated pcover_generated;

PCOVER_API const char* pcover_version(void);
PCOVER_API const char* pcover_last_error(void);
PCOVER_API const char* pcover_status_name(pcover_status status);
PCOVER_API void pcover_string_free(char* s);

// Instance files ("PCOV 1").
PCOVER_API pcover_status pcover_instance_parse(const char* text,
                                               pcover_instance** out);
PCOVER_API pcover_status pcover_instance_render(const pcover_instance* instance,
                                                char** out);
PCOVER_API pcover_status pcover_instance_dims(const pcover_instance* instance,
                                              int* num_elements,
                                              int* num_sets);
PCOVER_API void pcover_instance_free(pcover_instance* instance);

// Decomposition files ("PCOVDEC 1"), checked against the instance matrix.
PCOVER_API pcover_status pcover_decomposition_parse(
    const char* text, const pcover_instance* instance,
    pcover_decomposition** out);
PCOVER_API pcover_status pcover_decomposition_render(
    const pcover_decomposition* decomposition, char** out);
PCOVER_API void pcover_decomposition_free(pcover_decomposition* decomposition);

typedef struct pcover_solve_options {
  int k;
  int k_max;
  int compute_lp;
  int certify_tb;
  // Adds brute-force comparison when the set count permits.
  int oracle;
  // Layers the additive-error absorption with absorb_k and absorb_alpha
  // (a rational string such as "56/27").
  int absorb;
  int absorb_k;
  const char* absorb_alpha;
} pcover_solve_options;

PCOVER_API void pcover_solve_options_init(pcover_solve_options* options);

// `decomposition` may be NULL. Writes the JSON report and the timing JSON
// (either output pointer may be NULL). Returns PCOVER_AUDIT_FAILURE, with
// both outputs written, when any audit failed.
PCOVER_API pcover_status pcover_solve(const pcover_instance* instance,
                                      const pcover_decomposition* decomposition,
                                      const pcover_solve_options* options,
                                      char** report_json, char** timings_json);

// Families and their JSON parameters (all optional except where noted):
//   gap       {"q"}
//   blackbox  {"q", "alpha", "tu"}
//   random    {"seed", "nodes", "cover_paths", "demand_paths", "target"}
//   corpus    {"seed"}
//   multicut  {"seed", "max_edges", "max_pairs"} or {"tree": TREE text,
//             "target"}
//   pathhit   {"seed", "nodes", "cover_paths", "demand_paths"}
//   rects     {"seed", "dimension", "boxes", "lines"}
PCOVER_API pcover_status pcover_generate(const char* family,
                                         const char* params_json,
                                         pcover_generated** out);
// Borrowed; valid until the generated handle is freed.
PCOVER_API const pcover_instance* pcover_generated_instance(
    const pcover_generated* generated);
PCOVER_API const pcover_decomposition* pcover_generated_decomposition(
    const pcover_generated* generated);
PCOVER_API pcover_status pcover_generated_metadata(
    const pcover_generated* generated, char** json);
// Writes NULL when the family has no tree.
PCOVER_API pcover_status pcover_generated_tree(
    const pcover_generated* generated, char** text);
PCOVER_API void pcover_generated_free(pcover_generated* generated);

// Checks: "tb", "sgf", "lp-duality", "equitable". Params for equitable:
// {"samples", "seed"}, or {"q", "alpha"} to check the TU black-box family
// with the constructive coloring instead of `instance` (which may then be
// NULL). Returns PCOVER_CHECK_FAILED with the counterexample in the report.
PCOVER_API pcover_status pcover_verify(const char* check,
                                       const pcover_instance* instance,
                                       const char* params_json,
                                       char** report_json);

// Experiments: "gap" {"qmax"}, "blackbox" {"q", "alpha", "tu"},
// "corpus" {"first", "last", "jobs"}.
PCOVER_API pcover_status pcover_experiment(const char* name,
                                           const char* params_json,
                                           char** payload_json,
                                           char** timings_json);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // PCOVER_PCOVER_H_
