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

#ifndef PCOVER_FORMATS_H_
#define PCOVER_FORMATS_H_

#include <string>
#include <string_view>

#include "pcover/decomposition.h"
#include "pcover/instance.h"
#include "pcover/instances_gen.h"

namespace pcover {

// Line-oriented text formats. Parse errors throw Error(kParse) with a
// "line L, column C: " prefix (both 1-based). A trailing newline is optional;
// carriage returns before a newline are ignored.
//
//   PCOV 1          PCOVDEC 1        TREE 1
//   n m             rho              N
//   P               <rho blocks of   parent(1) .. parent(N-1)
//   c_1 .. c_m       n rows of m     cost(edge 0) .. cost(edge N-2)
//   p_1 .. p_n       0/1 chars>      s t profit   (one line per pair)
//   <n rows of m 0/1 chars>
Instance ParseInstance(std::string_view text);
std::string RenderInstance(const Instance& instance);

Decomposition ParseDecomposition(std::string_view text, int rows, int cols);
std::string RenderDecomposition(const Decomposition& decomposition);

TreeInstance ParseTree(std::string_view text);
std::string RenderTree(const TreeInstance& tree);

}  // namespace pcover

#endif  // PCOVER_FORMATS_H_
