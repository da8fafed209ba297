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

#include "pcover/binary_matrix.h"

#include "pcover/error.h"

namespace pcover {

BinaryMatrix BinaryMatrix::FromStrings(const std::vector<std::string>& rows) {
  const int n = static_cast<int>(rows.size());
  const int m = n == 0 ? 0 : static_cast<int>(rows[0].size());
  BinaryMatrix out(n, m);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != m) {
      throw Error(ErrorCode::kInvalidArgument,
                  "ragged matrix at row " + std::to_string(i));
    }
    for (int j = 0; j < m; ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') {
        throw Error(ErrorCode::kInvalidArgument,
                    "non-binary entry at row " + std::to_string(i) +
                        ", column " + std::to_string(j));
      }
      out.set(i, j, c == '1');
    }
  }
  return out;
}

BinaryMatrix BinaryMatrix::FromRows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  const int m = n == 0 ? 0 : static_cast<int>(rows[0].size());
  BinaryMatrix out(n, m);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != m) {
      throw Error(ErrorCode::kInvalidArgument,
                  "ragged matrix at row " + std::to_string(i));
    }
    for (int j = 0; j < m; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) {
        throw Error(ErrorCode::kInvalidArgument,
                    "non-binary entry at row " + std::to_string(i) +
                        ", column " + std::to_string(j));
      }
      out.set(i, j, rows[i][j] == 1);
    }
  }
  return out;
}

BinaryMatrix BinaryMatrix::Identity(int n) {
  BinaryMatrix out(n, n);
  for (int i = 0; i < n; ++i) out.set(i, i, true);
  return out;
}

std::vector<int> BinaryMatrix::RowSupport(int i) const {
  std::vector<int> out;
  for (int j = 0; j < cols_; ++j) {
    if (at(i, j)) out.push_back(j);
  }
  return out;
}

std::vector<int> BinaryMatrix::ColSupport(int j) const {
  std::vector<int> out;
  for (int i = 0; i < rows_; ++i) {
    if (at(i, j)) out.push_back(i);
  }
  return out;
}

BinaryMatrix BinaryMatrix::Transposed() const {
  BinaryMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  }
  return out;
}

BinaryMatrix BinaryMatrix::Submatrix(const std::vector<int>& rows,
                                     const std::vector<int>& cols) const {
  BinaryMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t a = 0; a < rows.size(); ++a) {
    for (size_t b = 0; b < cols.size(); ++b) {
      out.set(a, b, at(rows[a], cols[b]));
    }
  }
  return out;
}

BinaryMatrix BinaryMatrix::Reordered(const std::vector<int>& row_order,
                                     const std::vector<int>& col_order) const {
  return Submatrix(row_order, col_order);
}

std::vector<std::string> BinaryMatrix::ToStrings() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j)) out[i][j] = '1';
    }
  }
  return out;
}

}  // namespace pcover
