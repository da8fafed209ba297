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

#ifndef PCOVER_EXPERIMENTS_H_
#define PCOVER_EXPERIMENTS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "pcover/instances_gen.h"
#include "pcover/rational.h"

namespace pcover {

// `payload` is deterministic; wall-clock figures go to `timings`.
struct ExperimentOutput {
  nlohmann::json payload;
  nlohmann::json timings;
};

// One row per q = 1..qmax: formula values, the LP optimum, the embedded dual
// and fractional primal, the constructed integral cover, brute force where
// the edge count allows, and the pipeline's cover.
ExperimentOutput RunGapExperiment(int qmax);

// Uses DefaultBlackBoxSchedule when `schedule` is empty.
ExperimentOutput RunBlackBoxExperiment(int q, const Rational& alpha,
                                       BlackBoxVariant variant,
                                       std::vector<Rational> schedule = {});

// Solves GenerateCorpusInstance(seed) for seeds first..last with LP and
// brute-force comparison on `jobs` worker threads. Rows are in seed order
// regardless of `jobs`.
ExperimentOutput RunCorpusExperiment(uint64_t first, uint64_t last, int jobs);

}  // namespace pcover

#endif  // PCOVER_EXPERIMENTS_H_
