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


#include <cstdint>
#include <vector>

#include "gtest/gtest.h"
#include "pcover/error.h"
#include "pcover/instance.h"
#include "pcover/instances_gen.h"
#include "pcover/kolen.h"
#include "pcover/merger.h"
#include "pcover/pipeline.h"
#include "pcover/tb_matrix.h"
#include "pcover/threshold_search.h"
#include "test_util.h"

namespace pcover {
namespace {

using ::pcover::testing::MakeInstance;
using ::pcover::testing::R;

DualSolution Duals(const std::vector<Rational>& y) {
  DualSolution d;
  for (const Rational& v : y) d.y.emplace_back(v);
  return d;
}

std::vector<char> Mask(const std::vector<int>& sets, int m) {
  return Cover::FromIndices(sets, m).ToMask(m);
}

struct ThresholdFixture {
  Instance instance;
  ThresholdResult threshold;
};

ThresholdFixture ThresholdRun(const Instance& raw) {
  const SgfResult sgf = StandardGreedyForm(raw.matrix());
  EXPECT_TRUE(sgf.success);
  Instance inst = ApplyPermutation(raw, sgf.perm);
  ThresholdResult t = FindThreshold(inst, inst.target());
  return {std::move(inst), std::move(t)};
}

TEST(MergerGraphTest, EqualCoversGiveEmptyGraph) {
  const Instance inst =
      MakeInstance({{1, 1}, {0, 1}}, {R(2), R(3)}, {R(1), R(1)}, R(1));
  const Cover c = Cover::FromIndices({1}, 2);
  const DualSolution d = Duals({R(1), R(1)});
  const MergerGraph g = BuildMergerGraph(inst, c, c, d, d);
  EXPECT_TRUE(g.vertices.empty());
  EXPECT_TRUE(g.edges.empty());
  EXPECT_TRUE(g.roots.empty());
}

TEST(MergerGraphTest, SingleSetThresholdRun) {
  const ThresholdFixture run = ThresholdRun(
      MakeInstance({{1}, {1}}, {R(1)}, {R(1), R(1)}, R(1)));
  const ThresholdResult& t = run.threshold;
  ASSERT_TRUE(t.below && t.at_or_above);
  EXPECT_TRUE(t.below->pruned.empty());
  EXPECT_EQ(t.at_or_above->pruned.sets(), (std::vector<int>{0}));
  const MergerGraph g =
      BuildMergerGraph(run.instance, t.below->pruned, t.at_or_above->pruned,
                       t.below->dual, t.at_or_above->dual);
  EXPECT_EQ(g.vertices, (std::vector<int>{0}));
  EXPECT_TRUE(g.edges.empty());
  EXPECT_EQ(g.roots, (std::vector<int>{0}));
  EXPECT_EQ(g.side[0], MergerGraph::kUpper);
}

TEST(MergerGraphTest, LowerSetDominatingTwoUpperSets) {
  // s3 (index 2) shares a positive-dual element with s1 and with s2.
  const Instance inst = MakeInstance({{1, 0, 1}, {0, 1, 1}},
                                     {R(1), R(1), R(2)}, {R(1), R(1)}, R(2));
  const Cover lower = Cover::FromIndices({2}, 3);
  const Cover upper = Cover::FromIndices({0, 1}, 3);
  const MergerGraph g = BuildMergerGraph(inst, lower, upper,
                                         Duals({R(1), R(1)}),
                                         Duals({R(0), R(0)}));
  EXPECT_EQ(g.edges, (std::vector<std::pair<int, int>>{{2, 0}, {2, 1}}));
  EXPECT_EQ(g.roots, (std::vector<int>{2}));
  EXPECT_EQ(g.children[2], (std::vector<int>{0, 1}));
  EXPECT_EQ(g.parent[0], 2);
  EXPECT_EQ(g.Subtree(2), (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(g.HasEdge(2, 0));
  EXPECT_FALSE(g.HasEdge(0, 2));
  EXPECT_TRUE(CheckMergerGraph(g).empty());
}

TEST(MergerGraphTest, ZeroDualMeansNoDomination) {
  const Instance inst = MakeInstance({{1, 0, 1}, {0, 1, 1}},
                                     {R(1), R(1), R(2)}, {R(1), R(1)}, R(2));
  const MergerGraph g = BuildMergerGraph(
      inst, Cover::FromIndices({2}, 3), Cover::FromIndices({0, 1}, 3),
      Duals({R(0), R(1)}), Duals({R(0), R(0)}));
  EXPECT_EQ(g.edges, (std::vector<std::pair<int, int>>{{2, 1}}));
  EXPECT_EQ(g.roots, (std::vector<int>{0, 2}));
}

TEST(MergerGraphTest, CheckFlagsBrokenGraphs) {
  MergerGraph g;
  g.num_sets = 2;
  g.vertices = {0, 1};
  g.side = {MergerGraph::kLower, MergerGraph::kLower};
  g.edges = {{0, 1}};
  g.parent = {-1, 0};
  g.children = {{1}, {}};
  g.roots = {0};
  EXPECT_FALSE(CheckMergerGraph(g).empty());
}

TEST(BenefitTest, Examples) {
  const Instance disjoint = MakeInstance({{1, 0}, {0, 1}}, {R(1), R(1)},
                                         {R(3), R(5)}, R(1));
  EXPECT_EQ(AbsoluteBenefits(disjoint, Cover::FromIndices({0, 1}, 2)),
            (std::vector<Rational>{R(3), R(5)}));
  const Instance twins = MakeInstance({{1, 1}, {1, 1}}, {R(1), R(1)},
                                      {R(3), R(5)}, R(1));
  EXPECT_EQ(AbsoluteBenefits(twins, Cover::FromIndices({0, 1}, 2)),
            (std::vector<Rational>{R(0), R(0)}));
  const Instance nested = MakeInstance({{1, 1}, {0, 1}}, {R(1), R(1)},
                                       {R(1), R(1)}, R(1));
  EXPECT_EQ(AbsoluteBenefits(nested, Cover::FromIndices({0, 1}, 2)),
            (std::vector<Rational>{R(0), R(1)}));
  EXPECT_EQ(AbsoluteBenefits(nested, Cover::FromIndices({0}, 2)),
            (std::vector<Rational>{R(1), R(0)}));
}

TEST(BenefitTest, RelativeBenefit) {
  const Instance inst = MakeInstance({{1, 0, 1}, {0, 1, 1}},
                                     {R(1), R(1), R(2)}, {R(1), R(1)}, R(2));
  const MergerGraph g = BuildMergerGraph(
      inst, Cover::FromIndices({2}, 3), Cover::FromIndices({0, 1}, 3),
      Duals({R(1), R(1)}), Duals({R(0), R(0)}));
  const std::vector<Rational> b = {R(2), R(3), R(7)};
  EXPECT_EQ(RelativeBenefit(g, 0, Mask({}, 3), b), R(2));
  EXPECT_EQ(RelativeBenefit(g, 0, Mask({0}, 3), b), R(-2));
  EXPECT_EQ(RelativeBenefit(g, 2, Mask({0}, 3), b), R(7) + R(3) - R(2));
  EXPECT_EQ(RelativeBenefit(g, 2, Mask({2}, 3), b), R(2) + R(3) - R(7));
}

TEST(MergeTest, SingleSetFixtureIncreasesAtTheRoot) {
  const ThresholdFixture run = ThresholdRun(
      MakeInstance({{1}, {1}}, {R(1)}, {R(1), R(1)}, R(1)));
  const ThresholdResult& t = run.threshold;
  const MergerGraph g =
      BuildMergerGraph(run.instance, t.below->pruned, t.at_or_above->pruned,
                       t.below->dual, t.at_or_above->dual);
  MergeTrace trace;
  const Cover d = Merge(run.instance, g, t.below->pruned,
                        t.at_or_above->pruned, R(1), &trace);
  EXPECT_EQ(d.sets(), (std::vector<int>{0}));
  EXPECT_EQ(trace.exit, "increase");
  ASSERT_FALSE(trace.calls.empty());
  EXPECT_EQ(trace.calls[0].procedure, "increase");
  EXPECT_EQ(trace.calls[0].vertex, 0);
  EXPECT_TRUE(trace.splits.empty());
  EXPECT_TRUE(trace.violations.empty());
}

TEST(MergeTest, ExactRootFlip) {
  // Flipping the only root reaches P exactly.
  const Instance inst = MakeInstance({{1, 0}, {0, 1}}, {R(1), R(1)},
                                     {R(1), R(1)}, R(2));
  const Cover lower = Cover::FromIndices({0}, 2);
  const Cover upper = Cover::FromIndices({0, 1}, 2);
  const MergerGraph g = BuildMergerGraph(inst, lower, upper,
                                         Duals({R(1), R(1)}),
                                         Duals({R(1), R(1)}));
  MergeTrace trace;
  const Cover d = Merge(inst, g, lower, upper, R(2), &trace);
  EXPECT_EQ(d.sets(), (std::vector<int>{0, 1}));
  EXPECT_EQ(CoveredProfit(inst, d), R(2));
  EXPECT_TRUE(trace.violations.empty());
}

TEST(MergeTest, FeasibleLowerIsReturnedAsIs) {
  const Instance inst = MakeInstance({{1, 0}, {0, 1}}, {R(1), R(1)},
                                     {R(1), R(1)}, R(1));
  const Cover lower = Cover::FromIndices({0}, 2);
  const Cover upper = Cover::FromIndices({1}, 2);
  const MergerGraph g = BuildMergerGraph(inst, lower, upper,
                                         Duals({R(1), R(1)}),
                                         Duals({R(1), R(1)}));
  MergeTrace trace;
  EXPECT_EQ(Merge(inst, g, lower, upper, R(1), &trace).sets(),
            (std::vector<int>{0}));
  EXPECT_EQ(trace.exit, "lower-feasible");
}

TEST(MergeTest, RejectsInfeasibleUpper) {
  const Instance inst = MakeInstance({{1, 0}, {0, 1}}, {R(1), R(1)},
                                     {R(1), R(1)}, R(2));
  const Cover lower = Cover::FromIndices({}, 2);
  const Cover upper = Cover::FromIndices({1}, 2);
  const MergerGraph g = BuildMergerGraph(inst, lower, upper,
                                         Duals({R(1), R(1)}),
                                         Duals({R(1), R(1)}));
  EXPECT_THROW(Merge(inst, g, lower, upper, R(2), nullptr), Error);
}

TEST(MergeTest, InvariantsOnRandomThresholdRuns) {
  int runs = 0;
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    const ThresholdFixture run = ThresholdRun(testing::RandomTbInstance(seed, 10));
    const ThresholdResult& t = run.threshold;
    if (t.exact_hit) continue;
    const Instance& inst = run.instance;
    const Rational target = inst.target();
    const bool at_overshoots = CoveredProfit(inst, t.at->pruned) > target;
    const KolenResult& lo = at_overshoots ? *t.below : *t.at;
    const KolenResult& hi = at_overshoots ? *t.at : *t.at_or_above;
    if (CoveredProfit(inst, lo.pruned) >= target) continue;
    ++runs;
    const MergerGraph g =
        BuildMergerGraph(inst, lo.pruned, hi.pruned, lo.dual, hi.dual);
    EXPECT_TRUE(CheckMergerGraph(g).empty()) << "seed " << seed;
    for (const auto& [from, to] : g.edges) {
      EXPECT_GT(from, to);
      EXPECT_NE(g.side[from], g.side[to]);
    }
    MergeTrace trace;
    const Cover d = Merge(inst, g, lo.pruned, hi.pruned, target, &trace);
    EXPECT_GE(CoveredProfit(inst, d), target) << "seed " << seed;
    for (int j : d.sets()) {
      EXPECT_TRUE(lo.pruned.Contains(j) || hi.pruned.Contains(j));
    }
    EXPECT_TRUE(trace.violations.empty()) << "seed " << seed;
  }
  EXPECT_GT(runs, 50);
}

TEST(MergeTest, GapFamilySplitsShrinkTheOffset) {
  for (int q = 1; q <= 2; ++q) {
    const GapFamily g = GenerateGapFamily(q);
    SolveOptions options;
    options.certify_tb = false;
    const SolveReport r = SolvePartialTbc(g.generated.instance, options);
    EXPECT_GE(r.splits, 1) << "q " << q;
    EXPECT_TRUE(r.trace.violations.empty());
    const Rational target = g.generated.instance.target();
    // The trace is in the solver's greedy-form indexing.
    const Instance permuted = ApplyPermutation(
        g.generated.instance,
        StandardGreedyForm(g.generated.instance.matrix()).perm);
    for (const MergeSplit& s : r.trace.splits) {
      const Rational infeasible = CoveredProfit(permuted, s.d_infeasible);
      const Rational feasible = CoveredProfit(permuted, s.d_feasible);
      EXPECT_LT(infeasible, target);
      EXPECT_GE(feasible, target);
      if (s.children_flipped < 2) continue;
      const Rational before = (CoveredProfit(permuted, s.d_before) - target).Abs();
      EXPECT_GE(before, R(3) * Min(target - infeasible, feasible - target));
    }
    EXPECT_TRUE(r.AuditsPassed()) << r.FirstFailure();
    EXPECT_GE(r.covered, target);
  }
}

TEST(WhiteElementTest, ThresholdRunsHaveWitnesses) {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const ThresholdFixture run = ThresholdRun(testing::RandomTbInstance(seed, 10));
    const ThresholdResult& t = run.threshold;
    if (t.exact_hit) continue;
    const MergerGraph g =
        BuildMergerGraph(run.instance, t.below->pruned, t.at_or_above->pruned,
                         t.below->dual, t.at_or_above->dual);
    EXPECT_TRUE(FindUncoveredWhiteElements(run.instance, g, t.below->pruned,
                                           t.at_or_above->pruned, t.at->dual,
                                           t.lambda_star)
                    .empty())
        << "seed " << seed;
  }
}

TEST(BoundAuditTest, SingleSetFixture) {
  const BoundAudit a = AuditMergeBound(R(1), R(1, 2), R(1), 3);
  EXPECT_TRUE(a.passed);
  ASSERT_EQ(a.bounds.size(), 3u);
  EXPECT_EQ(a.bounds[0], R(2));
  EXPECT_EQ(a.bounds[1], R(4, 3) * R(1, 2) + R(2));
  EXPECT_EQ(a.tightest_k, 1);
}

TEST(BoundAuditTest, ExpensiveCoverFailsAtSmallK) {
  const BoundAudit a = AuditMergeBound(R(100), R(1, 2), R(1), 10);
  EXPECT_FALSE(a.passed);
  EXPECT_EQ(a.tightest_k, 1);
}

TEST(BoundAuditTest, TightestKMinimizesTheBound) {
  const BoundAudit a = AuditMergeBound(R(10), R(90), R(1), 10);
  ASSERT_TRUE(a.passed);
  for (const Rational& b : a.bounds) EXPECT_LE(a.bounds[a.tightest_k - 1], b);
}

}  // namespace
}  // namespace pcover
