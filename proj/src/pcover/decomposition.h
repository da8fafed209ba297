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

#ifndef PCOVER_DECOMPOSITION_H_
#define PCOVER_DECOMPOSITION_H_

#include <vector>

#include "pcover/binary_matrix.h"

namespace pcover {

// A = parts[0] + ... + parts[rho - 1] entrywise.
struct Decomposition {
  int rho = 1;
  std::vector<BinaryMatrix> parts;

  static Decomposition Trivial(const BinaryMatrix& a) { return {1, {a}}; }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Throws Error(kInvalidArgument) unless the parts have A's shape, rho
// matches, and they sum to A without overlap.
void ValidateDecomposition(const BinaryMatrix& a, const Decomposition& d);

// Row i of the result is row i of parts[part_of_row[i]].
BinaryMatrix RowInduced(const Decomposition& d,
                        const std::vector<int>& part_of_row);

// Keeps the listed rows and columns of every part.
Decomposition RestrictDecomposition(const Decomposition& d,
                                    const std::vector<int>& rows,
                                    const std::vector<int>& cols);

}  // namespace pcover

#endif  // PCOVER_DECOMPOSITION_H_
