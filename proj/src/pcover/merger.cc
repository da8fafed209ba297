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

#include "pcover/merger.h"

#include <algorithm>
#include <set>

#include "pcover/error.h"

namespace pcover {

bool MergerGraph::HasEdge(int from, int to) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(from, to));
}

std::vector<int> MergerGraph::Subtree(int j) const {
  std::vector<int> out;
  std::vector<int> stack = {j};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (int c : children[v]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool Dominates(const Instance& instance, int j1, int j2,
               const DualSolution& dual) {
  if (j1 <= j2) return false;
  for (int i : instance.elements_of(j1)) {
    if (instance.matrix().at(i, j2) && dual.y[i].is_positive()) return true;
  }
  return false;
}

std::vector<char> Mask(const Cover& cover, int m) { return cover.ToMask(m); }

}  // namespace

MergerGraph BuildMergerGraph(const Instance& instance, const Cover& lower,
                             const Cover& upper, const DualSolution& lower_dual,
                             const DualSolution& upper_dual) {
  const int m = instance.num_sets();
  MergerGraph g;
  g.num_sets = m;
  g.side.assign(m, MergerGraph::kNone);
  g.parent.assign(m, -1);
  g.children.assign(m, {});
  const std::vector<char> in_lower = Mask(lower, m);
  const std::vector<char> in_upper = Mask(upper, m);
  for (int j = 0; j < m; ++j) {
    if (in_lower[j] == in_upper[j]) continue;
    g.side[j] = in_lower[j] ? MergerGraph::kLower : MergerGraph::kUpper;
    g.vertices.push_back(j);
  }
  for (int from : g.vertices) {
    for (int to : g.vertices) {
      if (g.side[from] == g.side[to]) continue;
      const DualSolution& dual =
          g.side[from] == MergerGraph::kLower ? lower_dual : upper_dual;
      if (!Dominates(instance, from, to, dual)) continue;
      if (g.parent[to] >= 0) {
        throw Error(ErrorCode::kInternal,
                    "merger graph vertex " + std::to_string(to) +
                        " has two parents (" + std::to_string(g.parent[to]) +
                        ", " + std::to_string(from) + ")");
      }
      g.parent[to] = from;
      g.children[from].push_back(to);
      g.edges.emplace_back(from, to);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (auto& c : g.children) std::sort(c.begin(), c.end());

  std::vector<std::pair<int, int>> keyed;
  for (int v : g.vertices) {
    if (g.parent[v] < 0) keyed.emplace_back(g.Subtree(v).front(), v);
  }
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [key, root] : keyed) g.roots.push_back(root);
  return g;
}

std::vector<std::string> CheckMergerGraph(const MergerGraph& g) {
  std::vector<std::string> violations;
  std::vector<int> indegree(g.num_sets, 0);
  for (const auto& [from, to] : g.edges) {
    const std::string name =
        "edge (" + std::to_string(from) + ", " + std::to_string(to) + ")";
    if (!g.Contains(from) || !g.Contains(to)) {
      violations.push_back(name + " leaves the vertex set");
      continue;
    }
    if (from <= to) violations.push_back(name + " does not descend");
    if (g.side[from] == g.side[to]) {
      violations.push_back(name + " joins two sets of one side");
    }
    ++indegree[to];
  }
  for (int v = 0; v < g.num_sets; ++v) {
    if (indegree[v] > 1) {
      violations.push_back("vertex " + std::to_string(v) + " has in-degree " +
                           std::to_string(indegree[v]));
    }
  }
  // Walk up from every vertex; a path longer than the vertex count is a cycle.
  for (int v : g.vertices) {
    int steps = 0;
    for (int u = v; u >= 0 && steps <= static_cast<int>(g.vertices.size());
         u = g.parent[u]) {
      ++steps;
    }
    if (steps > static_cast<int>(g.vertices.size())) {
      violations.push_back("cycle through vertex " + std::to_string(v));
      break;
    }
  }
  return violations;
}

std::vector<Rational> AbsoluteBenefits(const Instance& instance,
                                       const Cover& union_cover) {
  const int m = instance.num_sets();
  std::vector<Rational> b(m);
  const std::vector<char> member = union_cover.ToMask(m);
  for (int i = 0; i < instance.num_elements(); ++i) {
    int owner = -1;
    int count = 0;
    for (int j : instance.sets_of(i)) {
      if (member[j]) {
        owner = j;
        ++count;
      }
    }
    if (count == 1) b[owner] += instance.profit(i);
  }
  return b;
}

Rational RelativeBenefit(const MergerGraph& graph, int j,
                         const std::vector<char>& d,
                         const std::vector<Rational>& benefits) {
  Rational total;
  for (int v : graph.Subtree(j)) {
    if (d[v]) {
      total -= benefits[v];
    } else {
      total += benefits[v];
    }
  }
  return total;
}

namespace {

using Membership = std::vector<char>;

class Merger {
 public:
  Merger(const Instance& instance, const MergerGraph& graph,
         const Rational& target, const std::vector<Rational>& benefits,
         MergeTrace* trace)
      : instance_(instance),
        graph_(graph),
        target_(target),
        benefits_(benefits),
        trace_(trace) {}

  Rational Profit(const Membership& d) const { return CoveredProfit(instance_, d); }
  Rational Cost(const Membership& d) const {
    return CoverCost(instance_, Cover::FromMask(d));
  }
  Rational Benefit(int j, const Membership& d) const {
    return RelativeBenefit(graph_, j, d, benefits_);
  }
  Membership Flipped(Membership d, int j) const {
    for (int v : graph_.Subtree(j)) d[v] = !d[v];
    return d;
  }
  void Violation(std::string what) {
    trace_->violations.push_back(std::move(what));
  }

  Membership Increase(int j, Membership d) {
    const Rational p = Profit(d);
    const Rational benefit = Benefit(j, d);
    Enter("increase", j, d, p, benefit);
    if (!(p <= target_ && target_ < p + benefit)) {
      Violation("increase(" + std::to_string(j) + ") precondition: p(D) = " +
                p.ToString() + ", benefit = " + benefit.ToString());
    }
    Membership with_j = d;
    with_j[j] = 1;
    if (Profit(with_j) >= target_) return with_j;
    for (int c : graph_.children[j]) {
      if (p + Benefit(c, d) > target_) return Increase(c, std::move(d));
    }

    MergeSplit split{"increase", j, Cover::FromMask(d), {}, {}, 0};
    const Rational before = Profit(d);
    d[j] = 1;
    split_.insert(j);
    std::set<int> flipped;
    int last = -1;
    while (Profit(d) < target_) {
      last = PickChild(j, d, flipped, /*maximize=*/true);
      flipped.insert(last);
      d = Flipped(std::move(d), last);
    }
    const Membership other = Flipped(d, last);
    split.d_infeasible = Cover::FromMask(other);
    split.d_feasible = Cover::FromMask(d);
    split.children_flipped = static_cast<int>(flipped.size());
    RecordSplit(split, before, Profit(other), Profit(d));

    const Membership next = target_ - Profit(other) < Profit(d) - target_
                            ? Increase(last, other)
                            : Decrease(last, d);
    return Cost(d) <= Cost(next) ? d : next;
  }

  Membership Decrease(int j, Membership d) {
    const Rational p = Profit(d);
    const Rational benefit = Benefit(j, d);
    Enter("decrease", j, d, p, benefit);
    if (!(p >= target_ && target_ > p + benefit)) {
      Violation("decrease(" + std::to_string(j) + ") precondition: p(D) = " +
                p.ToString() + ", benefit = " + benefit.ToString());
    }
    Membership flipped_with_j = Flipped(d, j);
    flipped_with_j[j] = 1;
    if (Profit(flipped_with_j) >= target_) return flipped_with_j;
    for (int c : graph_.children[j]) {
      if (p + Benefit(c, d) < target_) return Decrease(c, std::move(d));
    }

    MergeSplit split{"decrease", j, Cover::FromMask(d), {}, {}, 0};
    const Rational before = Profit(d);
    d[j] = 1;
    split_.insert(j);
    std::set<int> flipped;
    int last = -1;
    while (Profit(d) >= target_) {
      last = PickChild(j, d, flipped, /*maximize=*/false);
      flipped.insert(last);
      d = Flipped(std::move(d), last);
    }
    const Membership other = Flipped(d, last);
    split.d_infeasible = Cover::FromMask(d);
    split.d_feasible = Cover::FromMask(other);
    split.children_flipped = static_cast<int>(flipped.size());
    RecordSplit(split, before, Profit(d), Profit(other));

    // Landing exactly on the target leaves nothing for increase to do.
    if (Profit(other) == target_) return other;
    const Membership next = Profit(other) - target_ < target_ - Profit(d)
                            ? Increase(last, d)
                            : Decrease(last, other);
    return Cost(other) <= Cost(next) ? other : next;
  }

 private:
  void Enter(const char* procedure, int j, const Membership& d, const Rational& p,
             const Rational& benefit) {
    trace_->calls.push_back({procedure, j, Cover::FromMask(d), p, benefit});
    for (const auto& [a, b] : graph_.edges) {
      if (!d[a] && !d[b]) {
        Violation(std::string(procedure) + "(" + std::to_string(j) +
                  "): edge (" + std::to_string(a) + ", " + std::to_string(b) +
                  ") has no endpoint in D");
      } else if (d[a] && d[b] && !split_.contains(a) && !split_.contains(b)) {
        Violation(std::string(procedure) + "(" + std::to_string(j) +
                  "): edge (" + std::to_string(a) + ", " + std::to_string(b) +
                  ") has both endpoints in D without a split");
      }
    }
  }

  int PickChild(int j, const Membership& d, const std::set<int>& flipped,
                bool maximize) {
    int best = -1;
    Rational best_value;
    for (int c : graph_.children[j]) {
      if (flipped.contains(c)) continue;
      Rational value = Benefit(c, d);
      if (best < 0 || (maximize ? value > best_value : value < best_value)) {
        best = c;
        best_value = std::move(value);
      }
    }
    if (best < 0) {
      Violation("split of " + std::to_string(j) + " ran out of children");
      throw Error(ErrorCode::kInternal,
                  "merge: split of set " + std::to_string(j) +
                      " exhausted its children");
    }
    return best;
  }

  void RecordSplit(const MergeSplit& split, const Rational& before,
                   const Rational& infeasible, const Rational& feasible) {
    if (split.children_flipped >= 2) {
      const Rational offset = (before - target_).Abs();
      const Rational closest =
          Min((infeasible - target_).Abs(), (feasible - target_).Abs());
      if (offset < closest * 3) {
        Violation("split of " + std::to_string(split.vertex) +
                  " shrank the offset from " + offset.ToString() + " only to " +
                  closest.ToString());
      }
    }
    trace_->splits.push_back(split);
  }

  const Instance& instance_;
  const MergerGraph& graph_;
  const Rational& target_;
  const std::vector<Rational>& benefits_;
  MergeTrace* trace_;
  std::set<int> split_;
};

}  // namespace

Cover Merge(const Instance& instance, const MergerGraph& graph,
            const Cover& lower, const Cover& upper, const Rational& target,
            MergeTrace* trace) {
  MergeTrace local;
  if (trace == nullptr) trace = &local;
  const int m = instance.num_sets();
  if (CoveredProfit(instance, upper) < target) {
    throw Error(ErrorCode::kInvalidArgument,
                "merge: the upper cover does not reach the target");
  }
  Membership d = lower.ToMask(m);
  if (CoveredProfit(instance, d) >= target) {
    trace->exit = "lower-feasible";
    trace->final_cover = lower;
    return lower;
  }
  std::vector<int> union_sets;
  for (int j = 0; j < m; ++j) {
    if (lower.Contains(j) || upper.Contains(j)) union_sets.push_back(j);
  }
  const std::vector<Rational> benefits =
      AbsoluteBenefits(instance, Cover::FromIndices(union_sets, m));
  Merger merger(instance, graph, target, benefits, trace);

  for (int r : graph.roots) {
    const Membership flipped = merger.Flipped(d, r);
    const Rational p_before = merger.Profit(d);
    const Rational p_after = merger.Profit(flipped);
    const Rational benefit = merger.Benefit(r, d);
    if (p_after - p_before != benefit) {
      merger.Violation("flipping root " + std::to_string(r) + " changed p by " +
                       (p_after - p_before).ToString() + " but benefit is " +
                       benefit.ToString());
    }
    if (p_after < target) {
      d = flipped;
      ++trace->root_flips;
      continue;
    }
    if (p_after == target) {
      trace->exit = "root-flip-exact";
      trace->final_cover = Cover::FromMask(flipped);
      return trace->final_cover;
    }
    trace->exit = "increase";
    trace->final_cover = Cover::FromMask(merger.Increase(r, d));
    return trace->final_cover;
  }
  throw Error(ErrorCode::kInternal,
              "merge: every root was flipped without reaching the target");
}

std::vector<int> FindUncoveredWhiteElements(const Instance& instance,
                                            const MergerGraph& graph,
                                            const Cover& lower,
                                            const Cover& upper,
                                            const DualSolution& dual_at,
                                            const Rational& lambda) {
  std::vector<int> failures;
  for (int i = 0; i < instance.num_elements(); ++i) {
    if (!(dual_at.y[i].value() < lambda * instance.profit(i))) continue;
    bool found = false;
    for (int a : instance.sets_of(i)) {
      if (!upper.Contains(a)) continue;
      for (int b : instance.sets_of(i)) {
        if (!lower.Contains(b)) continue;
        if (a == b || graph.HasEdge(a, b) || graph.HasEdge(b, a)) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) failures.push_back(i);
  }
  return failures;
}

BoundAudit AuditMergeBound(const Rational& cost, const Rational& dl,
                           const Rational& max_cost, int k_max) {
  BoundAudit audit;
  for (int k = 1; k <= k_max; ++k) {
    Rational bound = (Rational(1) + PowerOfThree(1 - k)) * dl + max_cost * k;
    if (audit.passed && cost > bound) {
      audit.passed = false;
      audit.tightest_k = k;
    }
    if (audit.passed &&
        (audit.tightest_k == 0 || bound < audit.bounds[audit.tightest_k - 1])) {
      audit.tightest_k = k;
    }
    audit.bounds.push_back(std::move(bound));
  }
  return audit;
}

}  // namespace pcover
