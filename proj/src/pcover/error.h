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

#ifndef PCOVER_ERROR_H_
#define PCOVER_ERROR_H_

#include <stdexcept>
#include <string>

namespace pcover {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kInfeasible,
  kAuditFailure,
  kSizeGuard,
  kNotTotallyBalanced,
  kInternal,
};

// The single exception type thrown by the library. The C API translates the
// code into a status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Returns true when PCOVER_GUARD_OVERRIDE=1 is set in the environment. Lifts
// every enumeration size guard; runs may then take hours.
bool GuardOverridden();

}  // namespace pcover

#endif  // PCOVER_ERROR_H_
