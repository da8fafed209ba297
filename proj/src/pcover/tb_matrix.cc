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

#include "pcover/tb_matrix.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>

#include "pcover/error.h"

namespace pcover {

std::optional<GammaWitness> FindGammaWitness(const BinaryMatrix& a) {
  const int n = a.rows();
  const int m = a.cols();
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = i1 + 1; i2 < n; ++i2) {
      for (int j1 = 0; j1 < m; ++j1) {
        if (!a.at(i1, j1) || !a.at(i2, j1)) continue;
        for (int j2 = j1 + 1; j2 < m; ++j2) {
          if (a.at(i1, j2) && !a.at(i2, j2)) {
            return GammaWitness{i1, i2, j1, j2};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool HasConsecutiveOnesRows(const BinaryMatrix& a) {
  for (int i = 0; i < a.rows(); ++i) {
    int runs = 0;
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) && (j == 0 || !a.at(i, j - 1))) ++runs;
    }
    if (runs > 1) return false;
  }
  return true;
}

namespace {

std::vector<int> Iota(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

SgfResult Success(const BinaryMatrix& a, const std::vector<int>& row_order,
                  const std::vector<int>& col_order, const char* method) {
  SgfResult r;
  r.success = true;
  r.perm = PermutationPair::FromOrders(row_order, col_order);
  r.permuted = a.Reordered(row_order, col_order);
  r.method = method;
  return r;
}

// Rows sorted by (last one, first one); empty rows first. Gamma-free for any
// matrix whose rows are contiguous blocks.
std::vector<int> IntervalRowOrder(const BinaryMatrix& a) {
  std::vector<std::pair<int, int>> ends(a.rows(), {-1, -1});
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (!a.at(i, j)) continue;
      if (ends[i].first < 0) ends[i].first = j;
      ends[i].second = j;
    }
  }
  std::vector<int> order = Iota(a.rows());
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    if (ends[x].second != ends[y].second) return ends[x].second < ends[y].second;
    return ends[x].first < ends[y].first;
  });
  return order;
}

// Lexicographic comparison of rows x, y under the column order, with 1 > 0.
bool RowGreater(const BinaryMatrix& a, int x, int y,
                const std::vector<int>& cols) {
  for (int j : cols) {
    if (a.at(x, j) != a.at(y, j)) return a.at(x, j);
  }
  return false;
}

bool ColGreater(const BinaryMatrix& a, int x, int y,
                const std::vector<int>& rows) {
  for (int i : rows) {
    if (a.at(i, x) != a.at(i, y)) return a.at(i, x);
  }
  return false;
}

// Within runs of identical rows (columns) restore ascending original index.
void OrderTiesByIndex(std::vector<int>& order,
                      const std::function<bool(int, int)>& same) {
  size_t start = 0;
  while (start < order.size()) {
    size_t end = start + 1;
    while (end < order.size() && same(order[start], order[end])) ++end;
    std::sort(order.begin() + start, order.begin() + end);
    start = end;
  }
}

// Alternating stable lexicographic sorts of rows and columns (descending)
// until a fixpoint, i.e. a doubly lexical ordering; then both orders are
// reversed so that the forbidden pattern becomes [[1,1],[1,0]].
std::pair<std::vector<int>, std::vector<int>> DoublyLexicalOrder(
    const BinaryMatrix& a) {
  std::vector<int> rows = Iota(a.rows());
  std::vector<int> cols = Iota(a.cols());
  const int max_rounds = 4 * (a.rows() + a.cols()) + 16;
  for (int round = 0; round < max_rounds; ++round) {
    std::vector<int> new_rows = rows;
    std::stable_sort(new_rows.begin(), new_rows.end(), [&](int x, int y) {
      return RowGreater(a, x, y, cols);
    });
    std::vector<int> new_cols = cols;
    std::stable_sort(new_cols.begin(), new_cols.end(), [&](int x, int y) {
      return ColGreater(a, x, y, new_rows);
    });
    const bool stable = new_rows == rows && new_cols == cols;
    rows = std::move(new_rows);
    cols = std::move(new_cols);
    if (stable) break;
  }
  std::reverse(rows.begin(), rows.end());
  std::reverse(cols.begin(), cols.end());
  OrderTiesByIndex(rows, [&](int x, int y) {
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(x, j) != a.at(y, j)) return false;
    }
    return true;
  });
  OrderTiesByIndex(cols, [&](int x, int y) {
    for (int i = 0; i < a.rows(); ++i) {
      if (a.at(i, x) != a.at(i, y)) return false;
    }
    return true;
  });
  return {rows, cols};
}

// Given a fixed row order, a Gamma only involves the relative order of two
// columns, so a valid column order exists iff the forced precedences are
// acyclic. Returns the smallest-index topological order, or nullopt.
std::optional<std::vector<int>> ColumnOrderFor(const BinaryMatrix& a,
                                               const std::vector<int>& rows) {
  const int m = a.cols();
  // must_precede[v][u]: placing u before v creates a Gamma.
  std::vector<std::vector<char>> must_precede(m, std::vector<char>(m, 0));
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      if (u == v) continue;
      bool seen_both = false;
      for (int i : rows) {
        if (seen_both && a.at(i, u) && !a.at(i, v)) {
          must_precede[v][u] = 1;
          break;
        }
        if (a.at(i, u) && a.at(i, v)) seen_both = true;
      }
    }
  }
  std::vector<int> indegree(m, 0);
  for (int v = 0; v < m; ++v) {
    for (int u = 0; u < m; ++u) {
      if (must_precede[v][u]) ++indegree[u];
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int u = 0; u < m; ++u) {
    if (indegree[u] == 0) ready.push(u);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int u = 0; u < m; ++u) {
      if (must_precede[v][u] && --indegree[u] == 0) ready.push(u);
    }
  }
  if (static_cast<int>(order.size()) != m) return std::nullopt;
  return order;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> ExhaustiveOrder(
    const BinaryMatrix& a) {
  const bool transpose = a.rows() > a.cols();
  const BinaryMatrix b = transpose ? a.Transposed() : a;
  std::vector<int> rows = Iota(b.rows());
  do {
    if (auto cols = ColumnOrderFor(b, rows)) {
      if (transpose) return std::make_pair(*cols, rows);
      return std::make_pair(rows, *cols);
    }
  } while (std::next_permutation(rows.begin(), rows.end()));
  return std::nullopt;
}

}  // namespace

SgfResult StandardGreedyForm(const BinaryMatrix& a, const SgfOptions& options) {
  if (IsGammaFree(a)) return Success(a, Iota(a.rows()), Iota(a.cols()), "identity");

  if (HasConsecutiveOnesRows(a)) {
    const std::vector<int> rows = IntervalRowOrder(a);
    if (IsGammaFree(a.Reordered(rows, Iota(a.cols())))) {
      return Success(a, rows, Iota(a.cols()), "interval");
    }
  }

  const auto [rows, cols] = DoublyLexicalOrder(a);
  const BinaryMatrix refined = a.Reordered(rows, cols);
  std::optional<GammaWitness> witness = FindGammaWitness(refined);
  if (!witness) return Success(a, rows, cols, "refinement");

  SgfResult failure;
  failure.method = "none";
  failure.witness = witness;
  if (std::min(a.rows(), a.cols()) <= options.exhaustive_limit) {
    if (auto found = ExhaustiveOrder(a)) {
      SgfResult r = Success(a, found->first, found->second, "exhaustive");
      if (IsGammaFree(r.permuted)) return r;
      throw Error(ErrorCode::kInternal, "exhaustive ordering not Gamma-free");
    }
    failure.certified_by_exhaustion = true;
  }
  return failure;
}

namespace {

// Backtracking search for a 2-regular spanning edge set on `vertices` using
// the given distinct edges (each edge is a pair of vertex positions).
bool FindTwoFactor(int k, const std::vector<std::pair<int, int>>& edges,
                   std::vector<int>& degree, std::vector<char>& used,
                   size_t next_edge) {
  int v = -1;
  for (int x = 0; x < k; ++x) {
    if (degree[x] < 2) {
      v = x;
      break;
    }
  }
  if (v < 0) return true;
  for (size_t e = 0; e < edges.size(); ++e) {
    if (used[e]) continue;
    const auto [x, y] = edges[e];
    if (x != v && y != v) continue;
    if (degree[x] >= 2 || degree[y] >= 2) continue;
    used[e] = 1;
    ++degree[x];
    ++degree[y];
    if (FindTwoFactor(k, edges, degree, used, next_edge)) return true;
    --degree[x];
    --degree[y];
    used[e] = 0;
  }
  return false;
}

}  // namespace

std::optional<UnbalancedWitness> FindUnbalancedSubmatrix(
    const BinaryMatrix& a, int limit) {
  const int n = a.rows();
  const int m = a.cols();
  if ((n > limit || m > limit) && !GuardOverridden()) {
    throw Error(ErrorCode::kSizeGuard,
                "total balancedness check is limited to " +
                    std::to_string(limit) + "x" + std::to_string(limit));
  }
  if (n >= 63) throw Error(ErrorCode::kSizeGuard, "too many rows");
  for (int k = 3; k <= std::min(n, m); ++k) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      std::vector<int> rows;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1) rows.push_back(i);
      }
      // Columns with exactly two ones inside the row subset become edges;
      // identical columns collapse to one edge.
      std::vector<std::pair<int, int>> edges;
      std::vector<int> edge_col;
      for (int j = 0; j < m; ++j) {
        int first = -1;
        int second = -1;
        int count = 0;
        for (int p = 0; p < k; ++p) {
          if (!a.at(rows[p], j)) continue;
          if (++count == 1) first = p; else second = p;
        }
        if (count != 2) continue;
        const std::pair<int, int> e(first, second);
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
        edges.push_back(e);
        edge_col.push_back(j);
      }
      if (static_cast<int>(edges.size()) < k) continue;
      std::vector<int> degree(k, 0);
      std::vector<char> used(edges.size(), 0);
      if (FindTwoFactor(k, edges, degree, used, 0)) {
        UnbalancedWitness w;
        w.rows = rows;
        for (size_t e = 0; e < edges.size(); ++e) {
          if (used[e]) w.cols.push_back(edge_col[e]);
        }
        std::sort(w.cols.begin(), w.cols.end());
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace pcover
