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

#include "pcover/instances_gen.h"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "pcover/error.h"

namespace pcover {
namespace {

using nlohmann::json;

json CoverJson(const Cover& cover) { return json(cover.sets()); }

json RationalsJson(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(v.ToString());
  return out;
}

std::vector<int> RandomParents(Lcg& rng, int nodes) {
  std::vector<int> parent(nodes, -1);
  for (int v = 1; v < nodes; ++v) parent[v] = rng.Uniform(0, v - 1);
  return parent;
}

bool ShareEdge(const std::vector<int>& a, const std::vector<int>& b) {
  for (int e : a) {
    if (std::find(b.begin(), b.end(), e) != b.end()) return true;
  }
  return false;
}

// The s-side and t-side edge lists of the tree path between s and t.
std::pair<std::vector<int>, std::vector<int>> PathHalves(
    const TreeInstance& tree, int s, int t) {
  const int top = tree.Lca(s, t);
  return {tree.ClimbEdges(s, top), tree.ClimbEdges(t, top)};
}

Rational Half(const Rational& r) { return r / Rational(2); }

}  // namespace

int TreeInstance::Depth(int v) const {
  int d = 0;
  while (parent[v] >= 0) {
    v = parent[v];
    ++d;
  }
  return d;
}

int TreeInstance::Lca(int u, int v) const {
  int du = Depth(u);
  int dv = Depth(v);
  while (du > dv) {
    u = parent[u];
    --du;
  }
  while (dv > du) {
    v = parent[v];
    --dv;
  }
  while (u != v) {
    u = parent[u];
    v = parent[v];
  }
  return u;
}

std::vector<int> TreeInstance::ClimbEdges(int v, int top) const {
  std::vector<int> edges;
  while (v != top) {
    if (v <= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "node " + std::to_string(top) + " is not an ancestor");
    }
    edges.push_back(v - 1);
    v = parent[v];
  }
  return edges;
}

void TreeInstance::Validate() const {
  const int n = num_nodes();
  if (n < 1 || parent[0] != -1) {
    throw Error(ErrorCode::kInvalidArgument, "node 0 must be the root");
  }
  for (int v = 1; v < n; ++v) {
    if (parent[v] < 0 || parent[v] >= n || parent[v] == v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad parent for node " + std::to_string(v));
    }
  }
  for (int v = 1; v < n; ++v) {
    int u = v;
    for (int steps = 0; u != 0; ++steps) {
      if (steps >= n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "parent list has a cycle through node " +
                        std::to_string(v));
      }
      u = parent[u];
    }
  }
  if (static_cast<int>(edge_costs.size()) != n - 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(n - 1) + " edge costs");
  }
  for (const Rational& c : edge_costs) {
    if (c.sign() < 0) throw Error(ErrorCode::kInvalidArgument, "negative cost");
  }
  for (const Pair& p : pairs) {
    if (p.s < 0 || p.s >= n || p.t < 0 || p.t >= n) {
      throw Error(ErrorCode::kInvalidArgument, "pair endpoint out of range");
    }
    if (p.profit.sign() < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative profit");
    }
  }
}

GeneratedInstance ReduceMulticut(const TreeInstance& tree,
                                 std::optional<Rational> target) {
  tree.Validate();
  const int n = static_cast<int>(tree.pairs.size());
  const int m = tree.num_edges();
  BinaryMatrix a(n, m);
  Decomposition d{2, {BinaryMatrix(n, m), BinaryMatrix(n, m)}};
  std::vector<Rational> profits;
  for (int i = 0; i < n; ++i) {
    const TreeInstance::Pair& pair = tree.pairs[i];
    if (pair.s == pair.t) {
      throw Error(ErrorCode::kInvalidArgument,
                  "pair " + std::to_string(i) + " has s = t");
    }
    auto [first, second] = PathHalves(tree, pair.s, pair.t);
    if (first.empty()) std::swap(first, second);
    for (int e : first) {
      a.set(i, e, true);
      d.parts[0].set(i, e, true);
    }
    for (int e : second) {
      a.set(i, e, true);
      d.parts[1].set(i, e, true);
    }
    profits.push_back(pair.profit);
  }
  Rational total;
  for (const Rational& p : profits) total += p;
  GeneratedInstance out{
      Instance::Make(a, tree.edge_costs, profits, target.value_or(Half(total))),
      std::move(d), tree, json::object()};
  out.metadata["family"] = "multicut";
  out.metadata["rho"] = 2;
  return out;
}

GapFamily GenerateGapFamily(int q) {
  if (q < 1) throw Error(ErrorCode::kInvalidArgument, "q must be >= 1");
  if (q > 6 && !GuardOverridden()) {
    throw Error(ErrorCode::kSizeGuard, "gap family q > 6 is refused");
  }
  const int height = 2 * q;
  const int heap_nodes = (1 << (height + 1)) - 1;
  const int first_leaf = 1 << height;
  const auto node = [](int h) { return h + 1; };

  TreeInstance tree;
  tree.parent.assign(heap_nodes + 2, -1);
  tree.parent[1] = 0;
  tree.parent[node(1)] = 1;
  for (int h = 2; h <= heap_nodes; ++h) tree.parent[node(h)] = node(h / 2);
  tree.edge_costs.assign(heap_nodes + 1, Rational(3));

  Rational four_q = 1;
  for (int i = 0; i < q; ++i) four_q *= 4;
  for (int h = 1; h <= heap_nodes; ++h) {
    tree.pairs.push_back({node(h), tree.parent[tree.parent[node(h)]], four_q});
  }
  tree.pairs.push_back({1, 0, Rational(2)});
  for (int h = first_leaf; h <= heap_nodes; ++h) {
    tree.pairs.push_back({node(h), node(h / 2), Rational(2)});
  }

  Rational total;
  for (const auto& p : tree.pairs) total += p.profit;
  const Rational p_bar = Rational((1L << (height + 1)) + 4, 3);
  GapFamily out;
  out.q = q;
  out.generated = ReduceMulticut(tree, total - p_bar);

  out.dl = (Rational(10) * four_q - Rational(1)) / Rational(3);
  out.expected_ip = out.dl + Rational(2 * q - 1);
  for (int h = 1; h <= heap_nodes; ++h) out.dual_y.push_back(Rational(1));
  for (int i = heap_nodes; i < static_cast<int>(tree.pairs.size()); ++i) {
    out.dual_y.push_back(Rational(2));
  }
  out.dual_lambda = 1;

  const int m = heap_nodes + 1;
  const auto depth = [](int h) {
    int d = 0;
    while (h > 1) {
      h /= 2;
      ++d;
    }
    return d;
  };
  std::vector<int> x1;
  std::vector<int> x2;
  for (int e = 0; e < m; ++e) {
    const bool even_heap = e >= 1 && depth(e) % 2 == 0;
    (even_heap ? x1 : x2).push_back(e);
  }
  out.x1 = Cover::FromIndices(x1, m);
  out.x2 = Cover::FromIndices(x2, m);

  const Rational left_out_r = p_bar / Rational(2) - Rational(1);
  const int left_out = static_cast<int>(left_out_r.mpq().get_num().get_si());
  std::vector<char> chosen(m, 0);
  for (int h = first_leaf; h <= heap_nodes - left_out; ++h) chosen[h] = 1;
  for (int level = height - 1; level >= 0; --level) {
    for (int h = 1 << level; h < (2 << level); ++h) {
      if (!chosen[2 * h] || !chosen[2 * h + 1]) chosen[h] = 1;
    }
  }
  if (!chosen[1]) chosen[0] = 1;
  out.x_tilde = Cover::FromMask(chosen);

  const Instance& inst = out.generated.instance;
  const Rational u1 = inst.total_profit() - CoveredProfit(inst, out.x1);
  const Rational u2 = inst.total_profit() - CoveredProfit(inst, out.x2);
  out.x1_weight = (p_bar - u2) / (u1 - u2);

  json& meta = out.generated.metadata;
  meta["family"] = "gap";
  meta["q"] = q;
  meta["dl"] = out.dl.ToString();
  meta["expected_ip"] = out.expected_ip.ToString();
  meta["p_bar"] = p_bar.ToString();
  meta["dual_y"] = RationalsJson(out.dual_y);
  meta["dual_lambda"] = out.dual_lambda.ToString();
  meta["x1"] = CoverJson(out.x1);
  meta["x2"] = CoverJson(out.x2);
  meta["x_tilde"] = CoverJson(out.x_tilde);
  meta["x1_weight"] = out.x1_weight.ToString();
  meta["internal_paths"] = heap_nodes;
  meta["fringe_paths"] = static_cast<int>(tree.pairs.size()) - heap_nodes;
  return out;
}

BlackBoxFamily GenerateBlackBoxFamily(int q, const Rational& alpha,
                                      BlackBoxVariant variant) {
  if (q < 2) throw Error(ErrorCode::kInvalidArgument, "q must be >= 2");
  if (alpha < Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be >= 1");
  }
  if (q > 8 && !GuardOverridden()) {
    throw Error(ErrorCode::kSizeGuard, "black-box family q > 8 is refused");
  }
  const int block = q * q + 2;
  const int n = q * block;
  const auto left = [&](int i) { return i * block; };
  const auto right = [&](int i) { return i * block + q * q + 1; };
  const auto cluster = [&](int a, int i, int t) {
    return i * block + 1 + a * q + t;
  };

  const int m = 3 * q;
  BinaryMatrix mat(n, m);
  BlackBoxFamily out;
  out.q = q;
  out.alpha = alpha;
  out.variant = variant;
  std::vector<Rational> costs(m);
  const Rational a_cost = Rational(2) * alpha / Rational(3 * q);
  const Rational b_cost = Rational(4) * alpha / Rational(3 * q);
  const Rational o_cost = Rational(1, q);
  for (int a = 0; a < q; ++a) {
    const int col = a;
    for (int i = 0; i < q; ++i) {
      for (int t = 0; t < q; ++t) mat.set(cluster(a, i, t), col, true);
    }
    costs[col] = a_cost;
    out.kind.push_back('A');
    out.group.push_back(a);
    out.a_sets.push_back(col);
  }
  for (int i = 0; i < q; ++i) {
    const int col = q + i;
    mat.set(left(i), col, true);
    mat.set(right(i), col, true);
    for (int a = 0; a < q; ++a) {
      for (int t = 0; t < q; ++t) mat.set(cluster(a, i, t), col, true);
    }
    costs[col] = b_cost;
    out.kind.push_back('B');
    out.group.push_back(i);
    out.b_sets.push_back(col);
  }
  for (int i = 0; i < q; ++i) {
    const int col = 2 * q + i;
    const int b_col = q + i;
    if (variant == BlackBoxVariant::kGeneral) {
      mat.set(left(i), col, true);
      for (int a = 0; a < q; ++a) {
        for (int i2 = 0; i2 < q; ++i2) mat.set(cluster(a, i2, i), col, true);
      }
    } else {
      for (int r = 0; r < n; ++r) {
        if (mat.at(r, b_col) && r != right(i)) mat.set(r, col, true);
      }
    }
    costs[col] = o_cost;
    out.kind.push_back('O');
    out.group.push_back(i);
    out.o_sets.push_back(col);
  }
  out.instance = Instance::Make(std::move(mat), std::move(costs),
                                std::vector<Rational>(n, Rational(1)),
                                Rational(q * q * q + q));
  return out;
}

GeneratedInstance GenerateRandomDescendingPaths(const RandomPathsOptions& o) {
  if (o.nodes < 2) throw Error(ErrorCode::kInvalidArgument, "nodes must be >= 2");
  if (o.num_cover_paths < 0 || o.num_demand_paths < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative path count");
  }
  Lcg rng(o.seed);
  TreeInstance tree;
  tree.parent = RandomParents(rng, o.nodes);
  const auto random_path = [&]() {
    const int v = rng.Uniform(1, o.nodes - 1);
    const int len = rng.Uniform(1, tree.Depth(v));
    std::vector<int> edges;
    int u = v;
    for (int s = 0; s < len; ++s) {
      edges.push_back(u - 1);
      u = tree.parent[u];
    }
    return edges;
  };
  std::vector<std::vector<int>> cover;
  std::vector<Rational> costs;
  for (int j = 0; j < o.num_cover_paths; ++j) {
    cover.push_back(random_path());
    costs.push_back(rng.RandomRational(o.cost_num_max, o.cost_den_max));
  }
  std::vector<std::vector<int>> demand;
  std::vector<Rational> profits;
  for (int i = 0; i < o.num_demand_paths; ++i) {
    demand.push_back(random_path());
    profits.push_back(rng.RandomRational(o.profit_num_max, o.profit_den_max));
  }
  BinaryMatrix a(o.num_demand_paths, o.num_cover_paths);
  Rational coverable;
  for (int i = 0; i < o.num_demand_paths; ++i) {
    bool hit = false;
    for (int j = 0; j < o.num_cover_paths; ++j) {
      if (ShareEdge(demand[i], cover[j])) {
        a.set(i, j, true);
        hit = true;
      }
    }
    if (hit) coverable += profits[i];
  }
  const Rational target = o.target.value_or(Half(coverable));
  GeneratedInstance out{Instance::Make(a, costs, profits, target),
                        Decomposition::Trivial(a), std::nullopt,
                        json::object()};
  json& meta = out.metadata;
  meta["family"] = "descending_paths";
  meta["seed"] = o.seed;
  meta["parent"] = tree.parent;
  meta["cover_paths"] = cover;
  meta["demand_paths"] = demand;
  return out;
}

GeneratedInstance GenerateCorpusInstance(uint64_t seed) {
  for (int attempt = 0;; ++attempt) {
    Lcg shape(seed * 0x9E3779B97F4A7C15ULL + static_cast<uint64_t>(attempt));
    RandomPathsOptions o;
    o.seed = shape.Next() | (static_cast<uint64_t>(shape.Next()) << 32);
    o.nodes = shape.Uniform(4, 12);
    o.num_demand_paths = shape.Uniform(2, 10);
    o.num_cover_paths = shape.Uniform(2, 10);
    o.target = Rational(0);
    GeneratedInstance g = GenerateRandomDescendingPaths(o);
    const Rational target = Half(g.instance.total_profit());
    if (target > g.instance.coverable_profit()) continue;
    g.instance = g.instance.WithTarget(target);
    g.metadata["family"] = "corpus";
    g.metadata["corpus_seed"] = seed;
    g.metadata["attempt"] = attempt;
    return g;
  }
}

TreeInstance GenerateRandomTreeInstance(uint64_t seed, int nodes, int pairs) {
  if (nodes < 2) throw Error(ErrorCode::kInvalidArgument, "nodes must be >= 2");
  Lcg rng(seed);
  TreeInstance tree;
  tree.parent = RandomParents(rng, nodes);
  for (int e = 0; e < nodes - 1; ++e) {
    tree.edge_costs.push_back(rng.RandomRational(20, 4));
  }
  for (int i = 0; i < pairs; ++i) {
    const int s = rng.Uniform(0, nodes - 1);
    int t = rng.Uniform(0, nodes - 2);
    if (t >= s) ++t;
    tree.pairs.push_back({s, t, rng.RandomRational(20, 4)});
  }
  return tree;
}

GeneratedInstance GenerateRandomMulticut(uint64_t seed, int max_edges,
                                         int max_pairs) {
  if (max_edges < 2 || max_pairs < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least 2 edges and pairs");
  }
  Lcg shape(seed ^ 0xD1B54A32D192ED03ULL);
  const int edges = shape.Uniform(2, max_edges);
  const int pairs = shape.Uniform(2, max_pairs);
  GeneratedInstance g =
      ReduceMulticut(GenerateRandomTreeInstance(seed, edges + 1, pairs));
  g.metadata["seed"] = seed;
  return g;
}

GeneratedInstance ReducePathHitting(const std::vector<int>& parent,
                                    const std::vector<TreePath>& cover_paths,
                                    const std::vector<TreePath>& demand_paths,
                                    std::optional<Rational> target) {
  TreeInstance tree;
  tree.parent = parent;
  tree.edge_costs.assign(parent.size() - 1, Rational(0));
  for (const TreePath& p : cover_paths) tree.pairs.push_back({p.s, p.t, 0});
  for (const TreePath& p : demand_paths) tree.pairs.push_back({p.s, p.t, 0});
  tree.Validate();

  std::vector<std::vector<int>> halves;
  std::vector<int> owner;
  std::vector<Rational> costs;
  bool all_descending = true;
  for (int j = 0; j < static_cast<int>(cover_paths.size()); ++j) {
    const TreePath& p = cover_paths[j];
    if (p.s == p.t) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cover path " + std::to_string(j) + " has s = t");
    }
    if (p.weight.sign() < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative cover path cost");
    }
    auto [first, second] = PathHalves(tree, p.s, p.t);
    if (!first.empty() && !second.empty()) all_descending = false;
    for (auto* half : {&first, &second}) {
      if (half->empty()) continue;
      halves.push_back(*half);
      owner.push_back(j);
      costs.push_back(p.weight);
    }
  }
  const int n = static_cast<int>(demand_paths.size());
  const int m = static_cast<int>(halves.size());
  BinaryMatrix a(n, m);
  Decomposition d{2, {BinaryMatrix(n, m), BinaryMatrix(n, m)}};
  std::vector<Rational> profits;
  Rational coverable;
  for (int i = 0; i < n; ++i) {
    const TreePath& p = demand_paths[i];
    if (p.s == p.t) {
      throw Error(ErrorCode::kInvalidArgument,
                  "demand path " + std::to_string(i) + " has s = t");
    }
    auto [first, second] = PathHalves(tree, p.s, p.t);
    if (first.empty()) std::swap(first, second);
    bool hit = false;
    for (int h = 0; h < m; ++h) {
      const bool in_first = ShareEdge(halves[h], first);
      const bool in_second = ShareEdge(halves[h], second);
      if (!in_first && !in_second) continue;
      hit = true;
      a.set(i, h, true);
      d.parts[in_first ? 0 : 1].set(i, h, true);
    }
    profits.push_back(p.weight);
    if (hit) coverable += p.weight;
  }
  GeneratedInstance out{
      Instance::Make(a, costs, profits, target.value_or(Half(coverable))),
      std::move(d), std::nullopt, json::object()};
  json& meta = out.metadata;
  meta["family"] = "path_hitting";
  meta["rho"] = 2;
  meta["half_owner"] = owner;
  meta["num_cover_paths"] = static_cast<int>(cover_paths.size());
  meta["guarantee_factor"] = all_descending ? 2 : 4;
  return out;
}

Cover MapHalvesToPaths(const std::vector<int>& half_owner, const Cover& halves,
                       int num_paths) {
  std::vector<int> paths;
  for (int h : halves.sets()) paths.push_back(half_owner.at(h));
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  return Cover::FromIndices(paths, num_paths);
}

GeneratedInstance GenerateRandomPathHitting(uint64_t seed, int nodes,
                                            int num_cover_paths,
                                            int num_demand_paths) {
  if (nodes < 2) throw Error(ErrorCode::kInvalidArgument, "nodes must be >= 2");
  Lcg rng(seed);
  const std::vector<int> parent = RandomParents(rng, nodes);
  const auto random_path = [&](TreePath& p) {
    p.s = rng.Uniform(0, nodes - 1);
    p.t = rng.Uniform(0, nodes - 2);
    if (p.t >= p.s) ++p.t;
    p.weight = rng.RandomRational(20, 4);
  };
  std::vector<TreePath> cover(num_cover_paths);
  std::vector<TreePath> demand(num_demand_paths);
  for (TreePath& p : cover) random_path(p);
  for (TreePath& p : demand) random_path(p);
  GeneratedInstance g = ReducePathHitting(parent, cover, demand);
  g.metadata["seed"] = seed;
  g.metadata["parent"] = parent;
  return g;
}

GeneratedInstance ReduceRectangleStabbing(const RectangleInstance& r,
                                          std::optional<Rational> target) {
  const int d = r.dimension;
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  std::vector<int> order(r.lines.size());
  for (int j = 0; j < static_cast<int>(order.size()); ++j) {
    const auto& line = r.lines[j];
    if (line.axis < 0 || line.axis >= d) {
      throw Error(ErrorCode::kInvalidArgument,
                  "line " + std::to_string(j) + " has a bad axis");
    }
    if (line.cost.sign() < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative line cost");
    }
    order[j] = j;
  }
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    const auto& a = r.lines[x];
    const auto& b = r.lines[y];
    return std::pair(a.axis, a.coord) < std::pair(b.axis, b.coord);
  });
  const int n = static_cast<int>(r.boxes.size());
  const int m = static_cast<int>(order.size());
  BinaryMatrix a(n, m);
  Decomposition dec{d, std::vector<BinaryMatrix>(d, BinaryMatrix(n, m))};
  std::vector<Rational> costs;
  for (int j : order) costs.push_back(r.lines[j].cost);
  std::vector<Rational> profits;
  for (int i = 0; i < n; ++i) {
    const auto& box = r.boxes[i];
    if (static_cast<int>(box.lo.size()) != d ||
        static_cast<int>(box.hi.size()) != d) {
      throw Error(ErrorCode::kInvalidArgument,
                  "rectangle " + std::to_string(i) + " has the wrong dimension");
    }
    bool hit = false;
    for (int col = 0; col < m; ++col) {
      const auto& line = r.lines[order[col]];
      if (box.lo[line.axis] <= line.coord && line.coord <= box.hi[line.axis]) {
        a.set(i, col, true);
        dec.parts[line.axis].set(i, col, true);
        hit = true;
      }
    }
    if (!hit) {
      throw Error(ErrorCode::kInvalidArgument,
                  "rectangle " + std::to_string(i) + " is hit by no line");
    }
    profits.push_back(box.profit);
  }
  Rational total;
  for (const Rational& p : profits) total += p;
  GeneratedInstance out{
      Instance::Make(a, costs, profits, target.value_or(Half(total))),
      std::move(dec), std::nullopt, json::object()};
  out.metadata["family"] = "rectangles";
  out.metadata["rho"] = d;
  out.metadata["interval"] = d == 1;
  out.metadata["line_order"] = order;
  return out;
}

RectangleInstance GenerateRandomRectangles(uint64_t seed, int dimension,
                                           int num_boxes, int lines_per_axis) {
  if (dimension < 1 || lines_per_axis < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "need dimension >= 1 and at least one line per axis");
  }
  Lcg rng(seed);
  const int span = 3 * lines_per_axis;
  RectangleInstance r;
  r.dimension = dimension;
  std::vector<std::vector<int>> coords(dimension);
  for (int axis = 0; axis < dimension; ++axis) {
    for (int l = 0; l < lines_per_axis; ++l) {
      const int c = rng.Uniform(0, span);
      coords[axis].push_back(c);
      r.lines.push_back({axis, c, rng.RandomRational(20, 4)});
    }
  }
  for (int b = 0; b < num_boxes; ++b) {
    RectangleInstance::Box box;
    const int anchor_axis = rng.Uniform(0, dimension - 1);
    for (int axis = 0; axis < dimension; ++axis) {
      int lo = rng.Uniform(0, span);
      int hi = std::min(span, lo + rng.Uniform(0, span / 2));
      if (axis == anchor_axis) {
        const int c = coords[axis][rng.Uniform(0, lines_per_axis - 1)];
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      box.lo.push_back(lo);
      box.hi.push_back(hi);
    }
    box.profit = rng.RandomRational(20, 4);
    r.boxes.push_back(std::move(box));
  }
  return r;
}

}  // namespace pcover
