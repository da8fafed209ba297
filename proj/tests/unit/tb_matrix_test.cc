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
#include "pcover/binary_matrix.h"
#include "pcover/error.h"
#include "pcover/instances_gen.h"
#include "pcover/tb_matrix.h"
#include "test_util.h"

namespace pcover {
namespace {

const BinaryMatrix kOddCycle =
    BinaryMatrix::FromRows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});

BinaryMatrix RandomMatrix(Lcg& rng, int rows, int cols, int density) {
  std::vector<std::vector<int>> data(rows, std::vector<int>(cols));
  for (auto& row : data) {
    for (int& v : row) v = rng.Uniform(1, 100) <= density ? 1 : 0;
  }
  return BinaryMatrix::FromRows(data);
}

TEST(GammaTest, IdentityIsGammaFree) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(IsGammaFree(BinaryMatrix::Identity(n)));
}

TEST(GammaTest, GammaPatternWitness) {
  const auto w = FindGammaWitness(BinaryMatrix::FromRows({{1, 1}, {1, 0}}));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (GammaWitness{0, 1, 0, 1}));
}

TEST(GammaTest, ZeroInOtherPositionIsNotGamma) {
  EXPECT_TRUE(IsGammaFree(BinaryMatrix::FromRows({{1, 1}, {0, 1}})));
  EXPECT_TRUE(IsGammaFree(BinaryMatrix::FromRows({{0, 1}, {1, 1}})));
}

TEST(GammaTest, AgreesWithDirectSearch) {
  Lcg rng(11);
  for (int t = 0; t < 300; ++t) {
    const BinaryMatrix m =
        RandomMatrix(rng, rng.Uniform(1, 6), rng.Uniform(1, 6), 50);
    const auto w = FindGammaWitness(m);
    EXPECT_EQ(w.has_value(), testing::HasGamma(m));
    if (w) {
      EXPECT_TRUE(m.at(w->row1, w->col1) && m.at(w->row1, w->col2) &&
                  m.at(w->row2, w->col1) && !m.at(w->row2, w->col2));
      EXPECT_LT(w->row1, w->row2);
      EXPECT_LT(w->col1, w->col2);
    }
  }
}

TEST(SgfTest, AlreadyInFormSucceeds) {
  const BinaryMatrix m = BinaryMatrix::FromRows({{1, 1}, {0, 1}});
  const SgfResult r = StandardGreedyForm(m);
  ASSERT_TRUE(r.success);
  EXPECT_TRUE(IsGammaFree(r.permuted));
}

TEST(SgfTest, GammaMatrixGetsReordered) {
  const BinaryMatrix m = BinaryMatrix::FromRows({{1, 1}, {1, 0}});
  const SgfResult r = StandardGreedyForm(m);
  ASSERT_TRUE(r.success);
  EXPECT_TRUE(IsGammaFree(r.permuted));
  EXPECT_EQ(ApplyPermutation(m, r.perm), r.permuted);
  // Only the identity ordering of this matrix contains the pattern.
  int free_orderings = 0;
  for (const auto& rows : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
    for (const auto& cols : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
      free_orderings += IsGammaFree(m.Reordered(rows, cols));
    }
  }
  EXPECT_EQ(free_orderings, 3);
  EXPECT_TRUE(IsGammaFree(m.Reordered({0, 1}, {1, 0})));
}

TEST(SgfTest, OddCycleFails) {
  EXPECT_FALSE(testing::SomeOrderingIsGammaFree(kOddCycle));
  const SgfResult r = StandardGreedyForm(kOddCycle);
  EXPECT_FALSE(r.success);
  EXPECT_TRUE(r.certified_by_exhaustion);
  EXPECT_TRUE(r.witness.has_value());
}

TEST(SgfTest, SuccessMatchesOrderingSearchOnSmallMatrices) {
  Lcg rng(5);
  for (int t = 0; t < 200; ++t) {
    const BinaryMatrix m =
        RandomMatrix(rng, rng.Uniform(1, 4), rng.Uniform(1, 4), 55);
    const SgfResult r = StandardGreedyForm(m);
    EXPECT_EQ(r.success, testing::SomeOrderingIsGammaFree(m));
    if (r.success) {
      EXPECT_TRUE(r.perm.IsValid());
      EXPECT_EQ(ApplyPermutation(m, r.perm), r.permuted);
      EXPECT_FALSE(testing::HasGamma(r.permuted));
    }
  }
}

TEST(SgfTest, SuccessIffTotallyBalancedOnRandomMatrices) {
  Lcg rng(23);
  for (int t = 0; t < 400; ++t) {
    const BinaryMatrix m =
        RandomMatrix(rng, rng.Uniform(2, 7), rng.Uniform(2, 7), 45);
    const SgfResult r = StandardGreedyForm(m);
    EXPECT_EQ(r.success, testing::DefinitionallyTotallyBalanced(m));
    if (r.success) EXPECT_FALSE(testing::HasGamma(r.permuted));
  }
}

TEST(SgfTest, IntervalMatricesUseTheSortStage) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    const GeneratedInstance g =
        ReduceRectangleStabbing(GenerateRandomRectangles(seed, 1, 9, 7));
    const SgfResult r = StandardGreedyForm(g.instance.matrix());
    ASSERT_TRUE(r.success);
    EXPECT_TRUE(r.method == "interval" || r.method == "identity") << r.method;
    EXPECT_FALSE(testing::HasGamma(r.permuted));
  }
}

TEST(SgfTest, DescendingPathMatricesSucceedBeyondExhaustiveRange) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    RandomPathsOptions o;
    o.seed = seed;
    o.nodes = 30;
    o.num_cover_paths = 20;
    o.num_demand_paths = 20;
    const BinaryMatrix m = GenerateRandomDescendingPaths(o).instance.matrix();
    const SgfResult r = StandardGreedyForm(m);
    ASSERT_TRUE(r.success) << "seed " << seed;
    EXPECT_FALSE(testing::HasGamma(r.permuted));
  }
}

TEST(TotalBalanceTest, Examples) {
  EXPECT_FALSE(IsTotallyBalanced(kOddCycle));
  EXPECT_TRUE(IsTotallyBalanced(BinaryMatrix::FromRows({{1}})));
  EXPECT_TRUE(IsTotallyBalanced(
      BinaryMatrix::FromRows({{1, 1, 0, 0}, {0, 1, 1, 1}, {0, 0, 1, 0}})));
  const auto w = FindUnbalancedSubmatrix(kOddCycle);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->rows.size(), 3u);
  EXPECT_EQ(w->cols.size(), 3u);
}

TEST(TotalBalanceTest, AgreesWithDefinition) {
  Lcg rng(77);
  for (int t = 0; t < 300; ++t) {
    const BinaryMatrix m =
        RandomMatrix(rng, rng.Uniform(1, 6), rng.Uniform(1, 6), 50);
    EXPECT_EQ(IsTotallyBalanced(m), testing::DefinitionallyTotallyBalanced(m));
  }
}

TEST(TotalBalanceTest, WitnessIsACycleSubmatrix) {
  Lcg rng(3);
  for (int t = 0; t < 300; ++t) {
    const BinaryMatrix m =
        RandomMatrix(rng, rng.Uniform(3, 6), rng.Uniform(3, 6), 50);
    const auto w = FindUnbalancedSubmatrix(m);
    if (!w) continue;
    const BinaryMatrix sub = m.Submatrix(w->rows, w->cols);
    EXPECT_FALSE(testing::DefinitionallyTotallyBalanced(sub));
  }
}

TEST(TotalBalanceTest, SizeGuard) {
  const BinaryMatrix big = BinaryMatrix::Identity(13);
  EXPECT_THROW(FindUnbalancedSubmatrix(big), Error);
  EXPECT_NO_THROW(FindUnbalancedSubmatrix(big, 13));
}

TEST(ConsecutiveOnesTest, Examples) {
  EXPECT_TRUE(HasConsecutiveOnesRows(BinaryMatrix::FromRows({{0, 1, 1}, {1, 0, 0}})));
  EXPECT_FALSE(HasConsecutiveOnesRows(BinaryMatrix::FromRows({{1, 0, 1}})));
  EXPECT_TRUE(HasConsecutiveOnesRows(BinaryMatrix::FromRows({{0, 0, 0}})));
}

}  // namespace
}  // namespace pcover
