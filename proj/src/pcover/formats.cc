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

#include "pcover/formats.h"

#include <charconv>
#include <vector>

#include "pcover/error.h"

namespace pcover {
namespace {

struct Token {
  std::string_view text;
  int column = 1;
};

class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    size_t start = 0;
    while (start <= text.size()) {
      size_t end = text.find('\n', start);
      const bool last = end == std::string_view::npos;
      if (last) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (last && line.empty()) break;
      lines_.push_back(line);
      if (last) break;
      start = end + 1;
    }
  }

  int line_number() const { return next_; }
  bool AtEnd() const { return next_ >= static_cast<int>(lines_.size()); }

  [[noreturn]] void Fail(int line, int column, const std::string& msg) const {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) +
                                       ", column " + std::to_string(column) +
                                       ": " + msg);
  }

  std::string_view NextLine(const char* what) {
    if (AtEnd()) {
      Fail(static_cast<int>(lines_.size()) + 1, 1,
           std::string("unexpected end of input, expected ") + what);
    }
    return lines_[next_++];
  }

  std::vector<Token> NextTokens(const char* what) {
    const std::string_view line = NextLine(what);
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      const size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      tokens.push_back({line.substr(start, i - start),
                        static_cast<int>(start) + 1});
    }
    return tokens;
  }

  std::vector<Token> ExpectTokens(size_t count, const char* what) {
    std::vector<Token> tokens = NextTokens(what);
    if (tokens.size() != count) {
      const int column = tokens.size() > count ? tokens[count].column
                                               : EndColumn();
      Fail(next_, column,
           "expected " + std::to_string(count) + " " + what + ", found " +
               std::to_string(tokens.size()));
    }
    return tokens;
  }

  void ExpectHeader(std::string_view magic) {
    const std::vector<Token> t = NextTokens("header");
    if (t.empty() || t[0].text != magic) {
      Fail(next_, t.empty() ? 1 : t[0].column,
           "expected header '" + std::string(magic) + " 1'");
    }
    if (t.size() != 2 || t[1].text != "1") {
      Fail(next_, t.size() >= 2 ? t[1].column : EndColumn(),
           "unsupported or missing format version");
    }
  }

  long Integer(const Token& t, long lo, const char* what) const {
    long value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      Fail(next_, t.column, std::string("expected an integer ") + what);
    }
    if (value < lo) {
      Fail(next_, t.column,
           std::string(what) + " must be at least " + std::to_string(lo));
    }
    return value;
  }

  Rational ParseRational(const Token& t, const char* what) const {
    const std::optional<Rational> r = Rational::Parse(t.text);
    if (!r) Fail(next_, t.column, std::string("expected a rational ") + what);
    return *r;
  }

  std::vector<Rational> Rationals(size_t count, const char* what) {
    std::vector<Rational> out;
    for (const Token& t : ExpectTokens(count, what)) {
      out.push_back(ParseRational(t, what));
    }
    return out;
  }

  BinaryMatrix Matrix(int rows, int cols) {
    BinaryMatrix matrix(rows, cols);
    for (int i = 0; i < rows; ++i) {
      const std::string_view line = NextLine("a matrix row");
      for (int j = 0; j < static_cast<int>(line.size()); ++j) {
        if (j >= cols) Fail(next_, j + 1, "matrix row is too long");
        if (line[j] != '0' && line[j] != '1') {
          Fail(next_, j + 1, "expected '0' or '1'");
        }
        matrix.set(i, j, line[j] == '1');
      }
      if (static_cast<int>(line.size()) < cols) {
        Fail(next_, static_cast<int>(line.size()) + 1,
             "matrix row is too short");
      }
    }
    return matrix;
  }

  void ExpectEnd() {
    while (!AtEnd()) {
      const int line = next_ + 1;
      const std::vector<Token> t = NextTokens("");
      if (!t.empty()) Fail(line, t[0].column, "unexpected trailing content");
    }
  }

 private:
  int EndColumn() const {
    return static_cast<int>(lines_[next_ - 1].size()) + 1;
  }

  std::vector<std::string_view> lines_;
  int next_ = 0;
};

std::string JoinRationals(const std::vector<Rational>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += values[i].ToString();
  }
  return out;
}

std::string RenderMatrix(const BinaryMatrix& matrix) {
  std::string out;
  for (const std::string& row : matrix.ToStrings()) out += row + "\n";
  return out;
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  LineReader in(text);
  in.ExpectHeader("PCOV");
  const std::vector<Token> dims = in.ExpectTokens(2, "dimensions");
  const int n = static_cast<int>(in.Integer(dims[0], 0, "element count"));
  const int m = static_cast<int>(in.Integer(dims[1], 0, "set count"));
  const std::vector<Token> target = in.ExpectTokens(1, "target");
  const Rational p = in.ParseRational(target[0], "target");
  std::vector<Rational> costs = in.Rationals(m, "costs");
  std::vector<Rational> profits = in.Rationals(n, "profits");
  const int values_line = in.line_number();
  BinaryMatrix matrix = in.Matrix(n, m);
  in.ExpectEnd();
  try {
    return Instance::Make(std::move(matrix), std::move(costs),
                          std::move(profits), p);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(values_line) +
                                       ", column 1: " + e.what());
  }
}

std::string RenderInstance(const Instance& instance) {
  std::string out = "PCOV 1\n";
  out += std::to_string(instance.num_elements()) + " " +
         std::to_string(instance.num_sets()) + "\n";
  out += instance.target().ToString() + "\n";
  out += JoinRationals(instance.costs()) + "\n";
  out += JoinRationals(instance.profits()) + "\n";
  out += RenderMatrix(instance.matrix());
  return out;
}

Decomposition ParseDecomposition(std::string_view text, int rows, int cols) {
  LineReader in(text);
  in.ExpectHeader("PCOVDEC");
  const std::vector<Token> t = in.ExpectTokens(1, "rho");
  Decomposition d;
  d.rho = static_cast<int>(in.Integer(t[0], 1, "rho"));
  for (int q = 0; q < d.rho; ++q) d.parts.push_back(in.Matrix(rows, cols));
  in.ExpectEnd();
  return d;
}

std::string RenderDecomposition(const Decomposition& decomposition) {
  std::string out = "PCOVDEC 1\n" + std::to_string(decomposition.rho) + "\n";
  for (const BinaryMatrix& part : decomposition.parts) out += RenderMatrix(part);
  return out;
}

TreeInstance ParseTree(std::string_view text) {
  LineReader in(text);
  in.ExpectHeader("TREE");
  const std::vector<Token> count = in.ExpectTokens(1, "node count");
  const int nodes = static_cast<int>(in.Integer(count[0], 1, "node count"));
  TreeInstance tree;
  tree.parent.push_back(-1);
  for (const Token& t : in.ExpectTokens(nodes - 1, "parents")) {
    const long p = in.Integer(t, 0, "parent");
    if (p >= nodes) in.Fail(in.line_number(), t.column, "parent out of range");
    tree.parent.push_back(static_cast<int>(p));
  }
  const int parents_line = in.line_number();
  tree.edge_costs = in.Rationals(nodes - 1, "edge costs");
  while (!in.AtEnd()) {
    const std::vector<Token> t = in.NextTokens("a pair");
    if (t.empty()) {
      in.ExpectEnd();
      break;
    }
    if (t.size() != 3) {
      in.Fail(in.line_number(), t.size() > 3 ? t[3].column : 1,
              "expected 's t profit'");
    }
    TreeInstance::Pair pair;
    pair.s = static_cast<int>(in.Integer(t[0], 0, "node"));
    pair.t = static_cast<int>(in.Integer(t[1], 0, "node"));
    if (pair.s >= nodes || pair.t >= nodes) {
      in.Fail(in.line_number(), pair.s >= nodes ? t[0].column : t[1].column,
              "node out of range");
    }
    pair.profit = in.ParseRational(t[2], "profit");
    tree.pairs.push_back(std::move(pair));
  }
  try {
    tree.Validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(parents_line) +
                                       ", column 1: " + e.what());
  }
  return tree;
}

std::string RenderTree(const TreeInstance& tree) {
  std::string out = "TREE 1\n" + std::to_string(tree.num_nodes()) + "\n";
  for (int v = 1; v < tree.num_nodes(); ++v) {
    if (v > 1) out += ' ';
    out += std::to_string(tree.parent[v]);
  }
  out += "\n" + JoinRationals(tree.edge_costs) + "\n";
  for (const TreeInstance::Pair& p : tree.pairs) {
    out += std::to_string(p.s) + " " + std::to_string(p.t) + " " +
           p.profit.ToString() + "\n";
  }
  return out;
}

}  // namespace pcover
