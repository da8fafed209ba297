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

#ifndef PCOVER_MERGER_H_
#define PCOVER_MERGER_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pcover/instance.h"
#include "pcover/kolen.h"
#include "pcover/rational.h"

namespace pcover {

// Forest over the symmetric difference of two pruned covers. "lower" is the
// side whose profit is below the target, "upper" the side at or above it.
struct MergerGraph {
  enum Side : int8_t { kNone = -1, kLower = 0, kUpper = 1 };

  int num_sets = 0;
  // Ascending set indices.
  std::vector<int> vertices;
  // Indexed by set; kNone for sets outside the graph.
  std::vector<Side> side;
  // Lexicographically sorted (from, to) pairs.
  std::vector<std::pair<int, int>> edges;
  // Indexed by set; -1 for roots and non-vertices.
  std::vector<int> parent;
  // Indexed by set; ascending.
  std::vector<std::vector<int>> children;
  // Ordered by the smallest set index in each root's subtree.
  std::vector<int> roots;

  bool Contains(int j) const { return side[j] != kNone; }
  bool HasEdge(int from, int to) const;
  // Vertices of the out-branching rooted at j, ascending.
  std::vector<int> Subtree(int j) const;
};

// Edges go from a lower-only set to an upper-only set it dominates in the
// lower dual, and from an upper-only set to a lower-only set it dominates in
// the upper dual. Throws Error(kInternal) when a vertex gets two parents.
MergerGraph BuildMergerGraph(const Instance& instance, const Cover& lower,
                             const Cover& upper, const DualSolution& lower_dual,
                             const DualSolution& upper_dual);

// Violations of acyclicity, in-degree <= 1, side crossing and from > to.
std::vector<std::string> CheckMergerGraph(const MergerGraph& graph);

// b_j for members of `union_cover` (zero elsewhere): profit of elements lying
// in j and in no other member.
std::vector<Rational> AbsoluteBenefits(const Instance& instance,
                                       const Cover& union_cover);

// Sum of b over T_j outside D minus sum of b over T_j inside D.
Rational RelativeBenefit(const MergerGraph& graph, int j,
                         const std::vector<char>& d,
                         const std::vector<Rational>& benefits);

struct MergeCall {
  std::string procedure;  // "increase" or "decrease"
  int vertex = -1;
  Cover d;
  Rational profit;
  Rational subtree_benefit;
};

struct MergeSplit {
  std::string procedure;
  int vertex = -1;
  Cover d_before;
  // Profit below P and at least P after the children loop.
  Cover d_infeasible;
  Cover d_feasible;
  int children_flipped = 0;
};

struct MergeTrace {
  std::vector<MergeCall> calls;
  std::vector<MergeSplit> splits;
  int root_flips = 0;
  // "lower-feasible", "root-flip-exact" or "increase".
  std::string exit;
  Cover final_cover;
  // Broken contract checks (preconditions, alternation, coverage identity,
  // one-third shrink). Empty on a clean run.
  std::vector<std::string> violations;
};

// Starts from `lower` and flips root subtrees while the profit stays below
// the target, then hands over to increase/decrease. A profit equal to the
// target counts as feasible throughout. Throws Error(kInvalidArgument) when
// `upper` is below the target.
Cover Merge(const Instance& instance, const MergerGraph& graph,
            const Cover& lower, const Cover& upper, const Rational& target,
            MergeTrace* trace);

// Elements with y_i < lambda p_i lacking sets j' in `upper`, j'' in `lower`
// (both containing i) that coincide or are joined by an edge.
std::vector<int> FindUncoveredWhiteElements(const Instance& instance,
                                            const MergerGraph& graph,
                                            const Cover& lower,
                                            const Cover& upper,
                                            const DualSolution& dual_at,
                                            const Rational& lambda);

struct BoundAudit {
  bool passed = true;
  // k with the smallest bound; the first failing k when !passed.
  int tightest_k = 0;
  // bounds[k - 1] = (1 + 3^(1-k)) DL + k c_max.
  std::vector<Rational> bounds;
};

BoundAudit AuditMergeBound(const Rational& cost, const Rational& dl,
                           const Rational& max_cost, int k_max);

}  // namespace pcover

#endif  // PCOVER_MERGER_H_
