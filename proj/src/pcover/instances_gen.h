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

#ifndef PCOVER_INSTANCES_GEN_H_
#define PCOVER_INSTANCES_GEN_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "pcover/decomposition.h"
#include "pcover/instance.h"
#include "pcover/rational.h"

namespace pcover {

// Portable generator: x <- 6364136223846793005 x + 1442695040888963407
// (mod 2^64), seeded with x = seed and advanced once; each draw returns the
// high 32 bits of the new state. Uniform(lo, hi) is lo + draw mod (hi-lo+1).
class Lcg {
 public:
  explicit Lcg(uint64_t seed) : state_(seed) { Next(); }

  uint32_t Next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<uint32_t>(state_ >> 32);
  }
  int Uniform(int lo, int hi) {
    return lo + static_cast<int>(Next() % static_cast<uint32_t>(hi - lo + 1));
  }
  // a/b with a in [1, num_max] and b in [1, den_max].
  Rational RandomRational(int num_max, int den_max) {
    const int a = Uniform(1, num_max);
    const int b = Uniform(1, den_max);
    return Rational(a, b);
  }

 private:
  uint64_t state_;
};

// Node 0 is the root; edge e joins node e + 1 to its parent.
struct TreeInstance {
  struct Pair {
    int s = 0;
    int t = 0;
    Rational profit;

    friend bool operator==(const Pair&, const Pair&) = default;
  };

  std::vector<int> parent;  // parent[0] == -1
  std::vector<Rational> edge_costs;
  std::vector<Pair> pairs;

  int num_nodes() const { return static_cast<int>(parent.size()); }
  int num_edges() const { return num_nodes() - 1; }
  int Depth(int v) const;
  int Lca(int u, int v) const;
  // Edges from v up to (excluding) its ancestor `top`, bottom first.
  std::vector<int> ClimbEdges(int v, int top) const;

  // Throws Error(kInvalidArgument) unless parent encodes a tree rooted at 0
  // with matching cost and pair data.
  void Validate() const;

  friend bool operator==(const TreeInstance&, const TreeInstance&) = default;
};

struct GeneratedInstance {
  Instance instance;
  Decomposition decomposition;
  std::optional<TreeInstance> tree;
  // Sorted keys; rationals as strings.
  nlohmann::json metadata = nlohmann::json::object();
};

// Integrality-gap family: a complete binary tree of height 2q under a 2-path
// to the root, unit-3 edge costs, internal paths of length two (profit 4^q)
// and fringe paths of length one (profit 2). Nodes: 0 root, 1 the middle of
// the 2-path, heap node h of the binary tree is node h + 1.
struct GapFamily {
  GeneratedInstance generated;
  int q = 0;
  Rational dl;           // (10 * 4^q - 1) / 3
  Rational expected_ip;  // the closed form DL + 2q - 1
  // Dual with y = 1 on internal paths, 2 on fringe paths, lambda = 1.
  std::vector<Rational> dual_y;
  Rational dual_lambda;
  // Edges on alternate levels from the leaves, the complement, and the
  // combined cover.
  Cover x1;
  Cover x2;
  Cover x_tilde;
  // Weight of x1 in the convex combination of x1 and x2 losing exactly
  // p(U) - P profit.
  Rational x1_weight;
};
GapFamily GenerateGapFamily(int q);

enum class BlackBoxVariant { kGeneral, kTotallyUnimodular };

// q^2 clusters of q unit-profit elements; A_a covers row a of clusters, B_i
// column i of clusters plus two private elements, O_i one element of every
// cluster plus B_i's first private element (general) or B_i without its last
// private element (TU). Costs A 2 alpha/(3q), B 4 alpha/(3q), O 1/q; target
// q^3 + q. Columns: A_0..A_{q-1}, B_0.., O_0...
struct BlackBoxFamily {
  Instance instance;
  int q = 0;
  Rational alpha;
  BlackBoxVariant variant = BlackBoxVariant::kGeneral;
  // Per column: 'A', 'B' or 'O', and the index within the family.
  std::vector<char> kind;
  std::vector<int> group;
  std::vector<int> a_sets;
  std::vector<int> b_sets;
  std::vector<int> o_sets;
};
BlackBoxFamily GenerateBlackBoxFamily(int q, const Rational& alpha,
                                      BlackBoxVariant variant);

struct RandomPathsOptions {
  uint64_t seed = 0;
  int nodes = 10;
  int num_cover_paths = 6;
  int num_demand_paths = 6;
  int cost_num_max = 20;
  int cost_den_max = 4;
  int profit_num_max = 20;
  int profit_den_max = 4;
  // Defaults to half the total profit.
  std::optional<Rational> target;
};

// Random tree (parent of v uniform in [0, v)); every path climbs from a
// uniform non-root node a uniform number of edges. Rows are demand paths,
// columns cover paths, incidence = sharing an edge.
GeneratedInstance GenerateRandomDescendingPaths(const RandomPathsOptions& o);

// The shared randomized corpus: 4..12 nodes, 2..10 demand and cover paths,
// costs and profits a/b with a in 1..20 and b in 1..4, P = p(U)/2. Redraws
// from a derived seed until P is attainable.
GeneratedInstance GenerateCorpusInstance(uint64_t seed);

// Elements are the pairs, sets the edges. Each pair's path is cut at the
// LCA; the part from s goes to A_1 and the part from t to A_2, except that a
// path with one empty side keeps its only side in A_1.
GeneratedInstance ReduceMulticut(const TreeInstance& tree,
                                 std::optional<Rational> target = {});

TreeInstance GenerateRandomTreeInstance(uint64_t seed, int nodes, int pairs);

// Up to max_edges edges and max_pairs pairs, both at least 2.
GeneratedInstance GenerateRandomMulticut(uint64_t seed, int max_edges = 15,
                                         int max_pairs = 10);

struct TreePath {
  int s = 0;
  int t = 0;
  Rational weight;  // cost for cover paths, profit for demand paths
};

// Sets are the LCA halves of the cover paths, each at its path's full cost;
// metadata["half_owner"][h] names the cover path of set h.
GeneratedInstance ReducePathHitting(const std::vector<int>& parent,
                                    const std::vector<TreePath>& cover_paths,
                                    const std::vector<TreePath>& demand_paths,
                                    std::optional<Rational> target = {});
// A cover path is chosen when any of its halves is.
Cover MapHalvesToPaths(const std::vector<int>& half_owner, const Cover& halves,
                       int num_paths);
GeneratedInstance GenerateRandomPathHitting(uint64_t seed, int nodes,
                                            int num_cover_paths,
                                            int num_demand_paths);

struct RectangleInstance {
  struct Box {
    std::vector<int> lo;
    std::vector<int> hi;
    Rational profit;
  };
  struct Line {
    int axis = 0;
    int coord = 0;
    Rational cost;
  };
  int dimension = 1;
  std::vector<Box> boxes;
  std::vector<Line> lines;
};

// Elements are boxes, sets are lines sorted by (axis, coordinate); a line
// stabs a box when its coordinate lies in the box's range on its axis. Part q
// carries axis q. metadata["interval"] is true for d = 1.
GeneratedInstance ReduceRectangleStabbing(const RectangleInstance& r,
                                          std::optional<Rational> target = {});
RectangleInstance GenerateRandomRectangles(uint64_t seed, int dimension,
                                           int num_boxes, int lines_per_axis);

}  // namespace pcover

#endif  // PCOVER_INSTANCES_GEN_H_
