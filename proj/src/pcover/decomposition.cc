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

#include "pcover/decomposition.h"

#include <string>

#include "pcover/error.h"

namespace pcover {

void ValidateDecomposition(const BinaryMatrix& a, const Decomposition& d) {
  if (d.rho < 1 || static_cast<int>(d.parts.size()) != d.rho) {
    throw Error(ErrorCode::kInvalidArgument,
                "decomposition declares rho = " + std::to_string(d.rho) +
                    " but has " + std::to_string(d.parts.size()) + " parts");
  }
  for (int q = 0; q < d.rho; ++q) {
    if (d.parts[q].rows() != a.rows() || d.parts[q].cols() != a.cols()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "part " + std::to_string(q) + " has the wrong shape");
    }
  }
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      int sum = 0;
      for (const BinaryMatrix& part : d.parts) sum += part.at(i, j);
      if (sum != (a.at(i, j) ? 1 : 0)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "parts do not sum to the matrix at row " +
                        std::to_string(i) + ", column " + std::to_string(j));
      }
    }
  }
}

BinaryMatrix RowInduced(const Decomposition& d,
                        const std::vector<int>& part_of_row) {
  const BinaryMatrix& first = d.parts.front();
  BinaryMatrix b(first.rows(), first.cols());
  for (int i = 0; i < b.rows(); ++i) {
    const BinaryMatrix& part = d.parts.at(part_of_row.at(i));
    for (int j = 0; j < b.cols(); ++j) b.set(i, j, part.at(i, j));
  }
  return b;
}

Decomposition RestrictDecomposition(const Decomposition& d,
                                    const std::vector<int>& rows,
                                    const std::vector<int>& cols) {
  Decomposition out{d.rho, {}};
  for (const BinaryMatrix& part : d.parts) {
    out.parts.push_back(part.Submatrix(rows, cols));
  }
  return out;
}

}  // namespace pcover
