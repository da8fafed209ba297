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

#ifndef PCOVER_BINARY_MATRIX_H_
#define PCOVER_BINARY_MATRIX_H_

#include <cstdint>
#include <string>
#include <vector>

namespace pcover {

// Dense row-major 0/1 matrix. Rows are elements, columns are sets wherever
// the matrix is an incidence matrix.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  // Rows given as strings over {'0','1'}; throws on ragged or foreign input.
  static BinaryMatrix FromStrings(const std::vector<std::string>& rows);
  static BinaryMatrix FromRows(const std::vector<std::vector<int>>& rows);
  static BinaryMatrix Identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  bool at(int i, int j) const { return data_[i * cols_ + j] != 0; }
  void set(int i, int j, bool v) { data_[i * cols_ + j] = v ? 1 : 0; }

  // Sparse views: column indices of the ones in row i, row indices of the
  // ones in column j. Both ascending.
  std::vector<int> RowSupport(int i) const;
  std::vector<int> ColSupport(int j) const;

  BinaryMatrix Transposed() const;
  // Keeps the listed rows and columns, in the listed order.
  BinaryMatrix Submatrix(const std::vector<int>& rows,
                         const std::vector<int>& cols) const;
  // Row i of the result is row row_order[i]; likewise for columns.
  BinaryMatrix Reordered(const std::vector<int>& row_order,
                         const std::vector<int>& col_order) const;

  std::vector<std::string> ToStrings() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<uint8_t> data_;
};

}  // namespace pcover

#endif  // PCOVER_BINARY_MATRIX_H_
