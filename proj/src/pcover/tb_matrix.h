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

#ifndef PCOVER_TB_MATRIX_H_
#define PCOVER_TB_MATRIX_H_

#include <optional>
#include <string>
#include <vector>

#include "pcover/binary_matrix.h"
#include "pcover/instance.h"

namespace pcover {

// Rows row1 < row2 and columns col1 < col2 inducing [[1,1],[1,0]].
struct GammaWitness {
  int row1 = 0;
  int row2 = 0;
  int col1 = 0;
  int col2 = 0;

  friend bool operator==(const GammaWitness&, const GammaWitness&) = default;
};

// Returns the lexicographically first (row1, row2, col1, col2) witness, or
// nullopt when the matrix is in standard greedy form.
std::optional<GammaWitness> FindGammaWitness(const BinaryMatrix& matrix);
inline bool IsGammaFree(const BinaryMatrix& matrix) {
  return !FindGammaWitness(matrix).has_value();
}

struct SgfOptions {
  // Exhaustive ordering search runs when min(rows, cols) is at most this.
  int exhaustive_limit = 8;
};

struct SgfResult {
  bool success = false;
  // Original -> permuted indices; meaningful on success.
  PermutationPair perm;
  BinaryMatrix permuted;
  // On failure: the Gamma left in the refined ordering.
  std::optional<GammaWitness> witness;
  // On failure: true when exhaustive search proved that no ordering exists.
  bool certified_by_exhaustion = false;
  // Which stage produced the answer: "identity", "interval", "refinement",
  // "exhaustive" or "none".
  std::string method;
};

// Reorders rows and columns into standard greedy form. Stages, in order:
// the identity if already Gamma-free; a right-endpoint row sort when every
// row is one contiguous block; doubly lexical refinement; exhaustive search
// over orderings of the smaller dimension. Every success is certified with
// FindGammaWitness before it is returned.
SgfResult StandardGreedyForm(const BinaryMatrix& matrix,
                             const SgfOptions& options = {});

// Rows and columns of a square submatrix of order >= 3 with all row and
// column sums 2 and pairwise distinct columns.
struct UnbalancedWitness {
  std::vector<int> rows;
  std::vector<int> cols;
};

inline constexpr int kTotalBalanceCertificationLimit = 12;

// Direct definitional search. Exponential; throws Error(kSizeGuard) when a
// dimension exceeds `limit` unless the guard override is set.
std::optional<UnbalancedWitness> FindUnbalancedSubmatrix(
    const BinaryMatrix& matrix, int limit = kTotalBalanceCertificationLimit);
inline bool IsTotallyBalanced(const BinaryMatrix& matrix,
                              int limit = kTotalBalanceCertificationLimit) {
  return !FindUnbalancedSubmatrix(matrix, limit).has_value();
}

// True when every row's ones form one contiguous run in column order.
bool HasConsecutiveOnesRows(const BinaryMatrix& matrix);

}  // namespace pcover

#endif  // PCOVER_TB_MATRIX_H_
