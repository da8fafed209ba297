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

#ifndef PCOVER_REPORT_H_
#define PCOVER_REPORT_H_

#include <string>

#include "json.hpp"
#include "pcover/blackbox.h"
#include "pcover/instance.h"
#include "pcover/pipeline.h"
#include "pcover/rational.h"

namespace pcover {

inline constexpr const char* kReportSchema = "pcover-report/1";

// Reports keep keys sorted and rationals as canonical "a" / "a/b" strings.
nlohmann::json ToJson(const Rational& r);
nlohmann::json ToJson(const Cover& cover);
// Without timings; see TimingsJson.
nlohmann::json ToJson(const SolveReport& report);
nlohmann::json ToJson(const SeparableReport& report);
nlohmann::json ToJson(const AbsorbResult& result);
nlohmann::json ToJson(const BlackBoxTranscript& transcript);
nlohmann::json TimingsJson(const SolveReport& report);

// Two-space indented text with a trailing newline.
std::string Dump(const nlohmann::json& j);

}  // namespace pcover

#endif  // PCOVER_REPORT_H_
