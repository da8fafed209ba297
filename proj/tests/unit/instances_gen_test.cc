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
#include "pcover/decomposition.h"
#include "pcover/error.h"
#include "pcover/formats.h"
#include "pcover/instances_gen.h"
#include "pcover/lp_exact.h"
#include "pcover/tb_matrix.h"
#include "test_util.h"

namespace pcover {
namespace {

using ::pcover::testing::R;

BinaryMatrix Sum(const Decomposition& d) {
  std::vector<std::vector<int>> rows(d.parts[0].rows(),
                                     std::vector<int>(d.parts[0].cols(), 0));
  for (const BinaryMatrix& p : d.parts) {
    for (int i = 0; i < p.rows(); ++i) {
      for (int j = 0; j < p.cols(); ++j) rows[i][j] += p.at(i, j);
    }
  }
  return BinaryMatrix::FromRows(rows);
}

// Every choice of part per row, or `limit` pseudorandom ones when there are
// more.
void ExpectRowInducedBalanced(const Decomposition& d, uint64_t seed,
                              int limit = 64) {
  const int n = d.parts[0].rows();
  Lcg rng(seed);
  for (int t = 0; t < limit; ++t) {
    std::vector<int> part(n);
    for (int& p : part) p = rng.Uniform(0, d.rho - 1);
    const BinaryMatrix b = RowInduced(d, part);
    EXPECT_TRUE(testing::DefinitionallyTotallyBalanced(b));
  }
}

TEST(LcgTest, FollowsTheDocumentedRecurrence) {
  uint64_t state = 5;
  const auto step = [&state] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<uint32_t>(state >> 32);
  };
  step();
  Lcg rng(5);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(rng.Next(), step());
}

TEST(LcgTest, UniformStaysInRange) {
  Lcg rng(1);
  for (int i = 0; i < 1000; ++i) {
    const int v = rng.Uniform(-3, 4);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 4);
  }
  for (int i = 0; i < 100; ++i) {
    const Rational r = rng.RandomRational(20, 4);
    EXPECT_GT(r, R(0));
    EXPECT_LE(r, R(20));
    EXPECT_GE(r, R(1, 4));
  }
}

TEST(GapFamilyTest, SizesAndFormulas) {
  const struct {
    int q, nodes, internal, fringe;
    Rational dl, ip;
  } cases[] = {{1, 9, 7, 5, R(13), R(14)}, {2, 33, 31, 17, R(53), R(56)}};
  for (const auto& c : cases) {
    const GapFamily g = GenerateGapFamily(c.q);
    const Instance& inst = g.generated.instance;
    ASSERT_TRUE(g.generated.tree.has_value());
    EXPECT_EQ(g.generated.tree->num_nodes(), c.nodes);
    EXPECT_EQ(inst.num_sets(), c.nodes - 1);
    EXPECT_EQ(inst.num_elements(), c.internal + c.fringe);
    EXPECT_EQ(g.generated.metadata["internal_paths"], c.internal);
    EXPECT_EQ(g.generated.metadata["fringe_paths"], c.fringe);
    EXPECT_EQ(g.dl, c.dl);
    EXPECT_EQ(g.expected_ip, c.ip);
    const int four_q = 1 << (2 * c.q);
    int internal = 0;
    int fringe = 0;
    for (int i = 0; i < inst.num_elements(); ++i) {
      if (inst.profit(i) == R(four_q)) {
        ++internal;
      } else {
        EXPECT_EQ(inst.profit(i), R(2));
        ++fringe;
      }
    }
    EXPECT_EQ(internal, c.internal);
    EXPECT_EQ(fringe, c.fringe);
    for (int j = 0; j < inst.num_sets(); ++j) EXPECT_EQ(inst.cost(j), R(3));
    // p(U) - P = (2^(2q+1) + 4) / 3.
    EXPECT_EQ(inst.total_profit() - inst.target(),
              R((1 << (2 * c.q + 1)) + 4, 3));
  }
}

TEST(GapFamilyTest, PathLengths) {
  for (int q = 1; q <= 3; ++q) {
    const GapFamily g = GenerateGapFamily(q);
    const Instance& inst = g.generated.instance;
    for (int i = 0; i < inst.num_elements(); ++i) {
      const size_t len = inst.sets_of(i).size();
      EXPECT_EQ(len, inst.profit(i) == R(2) ? 1u : 2u);
    }
  }
}

TEST(GapFamilyTest, EmbeddedDualAndCombination) {
  for (int q = 1; q <= 3; ++q) {
    const GapFamily g = GenerateGapFamily(q);
    const Instance& inst = g.generated.instance;
    EXPECT_TRUE(IsDualFeasible(inst, g.dual_y, g.dual_lambda));
    EXPECT_EQ(DualObjective(inst, g.dual_y, g.dual_lambda),
              R(10 * (1 << (2 * q)) - 1, 3));
    // Uncovered profit of the two alternating covers.
    EXPECT_EQ(inst.total_profit() - CoveredProfit(inst, g.x1), R(2));
    EXPECT_EQ(inst.total_profit() - CoveredProfit(inst, g.x2),
              R(1 << (2 * q + 1)));
    const Rational w = g.x1_weight;
    EXPECT_EQ(w * R(2) + (R(1) - w) * R(1 << (2 * q + 1)),
              inst.total_profit() - inst.target());
    EXPECT_EQ(g.x1.size() + g.x2.size(), inst.num_sets());
    for (int j : g.x1.sets()) EXPECT_FALSE(g.x2.Contains(j));
  }
}

TEST(GapFamilyTest, ConstructedIntegralCover) {
  for (int q = 1; q <= 3; ++q) {
    const GapFamily g = GenerateGapFamily(q);
    const Instance& inst = g.generated.instance;
    EXPECT_TRUE(IsFeasible(inst, g.x_tilde));
    // Integral covers cost a multiple of 3.
    EXPECT_TRUE((CoverCost(inst, g.x_tilde) / R(3)).is_integer());
  }
  const GapFamily g1 = GenerateGapFamily(1);
  EXPECT_EQ(CoverCost(g1.generated.instance, g1.x_tilde),
            *testing::EnumeratePartial(g1.generated.instance));
}

TEST(GapFamilyTest, RejectsOutOfRangeQ) {
  EXPECT_THROW(GenerateGapFamily(0), Error);
  EXPECT_THROW(GenerateGapFamily(7), Error);
}

TEST(DescendingPathsTest, NoDemandPathsMeansEmptyMatrix) {
  RandomPathsOptions o;
  o.num_demand_paths = 0;
  const GeneratedInstance g = GenerateRandomDescendingPaths(o);
  EXPECT_EQ(g.instance.num_elements(), 0);
  EXPECT_EQ(g.instance.target(), R(0));
}

TEST(DescendingPathsTest, BalancedAndInGreedyFormReach) {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    RandomPathsOptions o;
    o.seed = seed;
    o.nodes = 8;
    o.num_cover_paths = 6;
    o.num_demand_paths = 6;
    const BinaryMatrix m = GenerateRandomDescendingPaths(o).instance.matrix();
    EXPECT_TRUE(testing::DefinitionallyTotallyBalanced(m)) << "seed " << seed;
    EXPECT_TRUE(StandardGreedyForm(m).success) << "seed " << seed;
  }
}

TEST(DescendingPathsTest, Deterministic) {
  RandomPathsOptions o;
  o.seed = 42;
  o.nodes = 10;
  o.num_cover_paths = 6;
  o.num_demand_paths = 6;
  EXPECT_EQ(RenderInstance(GenerateRandomDescendingPaths(o).instance),
            RenderInstance(GenerateRandomDescendingPaths(o).instance));
  o.seed = 43;
  const std::string other = RenderInstance(GenerateRandomDescendingPaths(o).instance);
  o.seed = 42;
  EXPECT_NE(RenderInstance(GenerateRandomDescendingPaths(o).instance), other);
}

TEST(CorpusTest, ShapeAndAttainableTarget) {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance inst = GenerateCorpusInstance(seed).instance;
    EXPECT_GE(inst.num_elements(), 2);
    EXPECT_LE(inst.num_elements(), 10);
    EXPECT_GE(inst.num_sets(), 2);
    EXPECT_LE(inst.num_sets(), 10);
    EXPECT_EQ(inst.target(), inst.total_profit() / R(2));
    EXPECT_LE(inst.target(), inst.coverable_profit());
    for (const Rational& c : inst.costs()) {
      EXPECT_GE(c, R(1, 4));
      EXPECT_LE(c, R(20));
    }
    EXPECT_EQ(RenderInstance(inst), RenderInstance(GenerateCorpusInstance(seed).instance));
  }
}

TEST(MulticutTest, DescendingPairsLeaveTheSecondPartEmpty) {
  TreeInstance t;
  t.parent = {-1, 0, 1, 2};
  t.edge_costs = {R(1), R(2), R(3)};
  t.pairs = {{3, 0, R(1)}, {1, 2, R(2)}, {0, 2, R(3)}};
  const GeneratedInstance g = ReduceMulticut(t);
  ASSERT_EQ(g.decomposition.rho, 2);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_FALSE(g.decomposition.parts[1].at(i, j));
  }
  EXPECT_EQ(Sum(g.decomposition), g.instance.matrix());
  // Pair (3, 0) uses all three edges.
  EXPECT_EQ(g.instance.elements_of(0).size() + g.instance.elements_of(1).size() +
                g.instance.elements_of(2).size(),
            6u);
}

TEST(MulticutTest, PathThroughTheRootIsSplit) {
  TreeInstance t;
  t.parent = {-1, 0, 0};
  t.edge_costs = {R(1), R(1)};
  t.pairs = {{1, 2, R(1)}};
  const GeneratedInstance g = ReduceMulticut(t);
  EXPECT_TRUE(g.decomposition.parts[0].at(0, 0));
  EXPECT_FALSE(g.decomposition.parts[0].at(0, 1));
  EXPECT_TRUE(g.decomposition.parts[1].at(0, 1));
  EXPECT_FALSE(g.decomposition.parts[1].at(0, 0));
}

TEST(MulticutTest, RejectsDegeneratePairs) {
  TreeInstance t;
  t.parent = {-1, 0};
  t.edge_costs = {R(1)};
  t.pairs = {{1, 1, R(1)}};
  EXPECT_THROW(ReduceMulticut(t), Error);
  t.parent = {-1, 2, 1};
  t.edge_costs = {R(1), R(1)};
  t.pairs = {{1, 0, R(1)}};
  EXPECT_THROW(t.Validate(), Error);
}

TEST(MulticutTest, RandomDecompositionsAreValidAndRowInducedBalanced) {
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    const GeneratedInstance g = GenerateRandomMulticut(seed);
    EXPECT_NO_THROW(ValidateDecomposition(g.instance.matrix(), g.decomposition));
    EXPECT_EQ(Sum(g.decomposition), g.instance.matrix());
    EXPECT_LE(g.instance.num_sets(), 15);
    EXPECT_LE(g.instance.num_elements(), 10);
    for (const BinaryMatrix& p : g.decomposition.parts) {
      EXPECT_TRUE(testing::DefinitionallyTotallyBalanced(p));
    }
    ExpectRowInducedBalanced(g.decomposition, seed, 16);
  }
}

TEST(MulticutTest, TreeHelpers) {
  TreeInstance t;
  t.parent = {-1, 0, 0, 1, 1, 2};
  t.edge_costs = std::vector<Rational>(5, R(1));
  EXPECT_EQ(t.Depth(0), 0);
  EXPECT_EQ(t.Depth(4), 2);
  EXPECT_EQ(t.Lca(3, 4), 1);
  EXPECT_EQ(t.Lca(3, 5), 0);
  EXPECT_EQ(t.Lca(1, 3), 1);
  EXPECT_EQ(t.ClimbEdges(3, 0), (std::vector<int>{2, 0}));
  EXPECT_TRUE(t.ClimbEdges(1, 1).empty());
}

TEST(PathHittingTest, VShapedCoverPathBecomesTwoHalves) {
  const std::vector<int> parent = {-1, 0, 0, 1, 2};
  const std::vector<TreePath> cover = {{3, 4, R(5)}};
  const std::vector<TreePath> demand = {{3, 1, R(1)}, {4, 2, R(1)}};
  const GeneratedInstance g = ReducePathHitting(parent, cover, demand);
  ASSERT_EQ(g.instance.num_sets(), 2);
  EXPECT_EQ(g.instance.cost(0), R(5));
  EXPECT_EQ(g.instance.cost(1), R(5));
  EXPECT_EQ(g.metadata["half_owner"], (std::vector<int>{0, 0}));
  EXPECT_EQ(g.metadata["guarantee_factor"], 4);
  const Cover both = Cover::FromIndices({0, 1}, 2);
  EXPECT_EQ(MapHalvesToPaths({0, 0}, both, 1).sets(), (std::vector<int>{0}));
}

TEST(PathHittingTest, DescendingCoverPathsKeepTheirCost) {
  const std::vector<int> parent = {-1, 0, 1, 2};
  const std::vector<TreePath> cover = {{3, 1, R(4)}, {1, 0, R(2)}};
  const std::vector<TreePath> demand = {{3, 2, R(1)}, {2, 0, R(1)}};
  const GeneratedInstance g = ReducePathHitting(parent, cover, demand);
  EXPECT_EQ(g.instance.num_sets(), 2);
  EXPECT_EQ(g.metadata["guarantee_factor"], 2);
}

TEST(PathHittingTest, MappedSolutionCostsAtMostTwiceTheHalves) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const GeneratedInstance g = GenerateRandomPathHitting(seed, 10, 6, 6);
    const std::vector<int> owner = g.metadata["half_owner"].get<std::vector<int>>();
    const int paths = g.metadata["num_cover_paths"].get<int>();
    const int m = g.instance.num_sets();
    for (uint32_t mask = 0; mask < (1u << std::min(m, 10)); ++mask) {
      std::vector<int> sets;
      for (int j = 0; j < m && j < 10; ++j) {
        if (mask >> j & 1u) sets.push_back(j);
      }
      const Cover halves = Cover::FromIndices(sets, m);
      const Cover mapped = MapHalvesToPaths(owner, halves, paths);
      // Each path costs what each of its halves costs.
      Rational path_cost;
      for (int p : mapped.sets()) {
        for (int j = 0; j < m; ++j) {
          if (owner[j] == p) {
            path_cost += g.instance.cost(j);
            break;
          }
        }
      }
      EXPECT_LE(path_cost, CoverCost(g.instance, halves));
      EXPECT_LE(CoverCost(g.instance, halves), R(2) * path_cost);
    }
    EXPECT_EQ(Sum(g.decomposition), g.instance.matrix());
  }
}

TEST(RectangleTest, IntervalsGiveAnIntervalMatrix) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const GeneratedInstance g =
        ReduceRectangleStabbing(GenerateRandomRectangles(seed, 1, 8, 6));
    EXPECT_TRUE(HasConsecutiveOnesRows(g.instance.matrix()));
    EXPECT_TRUE(testing::DefinitionallyTotallyBalanced(g.instance.matrix()));
    EXPECT_EQ(g.metadata["interval"], true);
    EXPECT_EQ(g.decomposition.rho, 1);
  }
}

TEST(RectangleTest, UnitSquaresUseTwoParts) {
  RectangleInstance r;
  r.dimension = 2;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) r.boxes.push_back({{x, y}, {x + 1, y + 1}, R(1)});
  }
  for (int axis = 0; axis < 2; ++axis) {
    for (int c = 0; c <= 2; ++c) r.lines.push_back({axis, c, R(1)});
  }
  const GeneratedInstance g = ReduceRectangleStabbing(r);
  EXPECT_EQ(g.decomposition.rho, 2);
  EXPECT_EQ(g.instance.num_sets(), 6);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(g.instance.sets_of(i).size(), 4u);
    for (const BinaryMatrix& p : g.decomposition.parts) {
      int ones = 0;
      for (int j = 0; j < 6; ++j) ones += p.at(i, j);
      EXPECT_EQ(ones, 2);
    }
  }
  EXPECT_EQ(Sum(g.decomposition), g.instance.matrix());
  for (const BinaryMatrix& p : g.decomposition.parts) {
    EXPECT_TRUE(HasConsecutiveOnesRows(p));
  }
}

TEST(RectangleTest, UnstabbedBoxIsRejected) {
  RectangleInstance r;
  r.dimension = 1;
  r.boxes.push_back({{0}, {1}, R(1)});
  r.lines.push_back({0, 5, R(1)});
  EXPECT_THROW(ReduceRectangleStabbing(r), Error);
}

TEST(RectangleTest, RandomPlanarDecompositionsAreRowInducedBalanced) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const GeneratedInstance g =
        ReduceRectangleStabbing(GenerateRandomRectangles(seed, 2, 8, 4));
    EXPECT_NO_THROW(ValidateDecomposition(g.instance.matrix(), g.decomposition));
    ExpectRowInducedBalanced(g.decomposition, seed, 16);
  }
}

}  // namespace
}  // namespace pcover
