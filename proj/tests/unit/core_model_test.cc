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


#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "pcover/binary_matrix.h"
#include "pcover/decomposition.h"
#include "pcover/delta_rational.h"
#include "pcover/error.h"
#include "pcover/instance.h"
#include "pcover/instances_gen.h"
#include "pcover/rational.h"
#include "test_util.h"

namespace pcover {
namespace {

using ::pcover::testing::MakeInstance;
using ::pcover::testing::R;

TEST(RationalTest, CanonicalFormAndParsing) {
  EXPECT_EQ(R(2, 4).ToString(), "1/2");
  EXPECT_EQ(R(-3, -6).ToString(), "1/2");
  EXPECT_EQ(R(6, 3).ToString(), "2");
  EXPECT_EQ(*Rational::Parse("-7/21"), R(-1, 3));
  EXPECT_EQ(*Rational::Parse("12"), R(12));
  EXPECT_FALSE(Rational::Parse("1/0").has_value());
  EXPECT_FALSE(Rational::Parse("1/-2").has_value());
  EXPECT_FALSE(Rational::Parse("abc").has_value());
  EXPECT_FALSE(Rational::Parse("").has_value());
}

TEST(RationalTest, CeilFloorAndPowers) {
  EXPECT_EQ(R(7, 2).Ceil(), R(4));
  EXPECT_EQ(R(7, 2).Floor(), R(3));
  EXPECT_EQ(R(-7, 2).Ceil(), R(-3));
  EXPECT_EQ(R(-7, 2).Floor(), R(-4));
  EXPECT_EQ(R(5).Ceil(), R(5));
  EXPECT_EQ(PowerOfThree(3), R(27));
  EXPECT_EQ(PowerOfThree(-2), R(1, 9));
  EXPECT_EQ(PowerOfThree(0), R(1));
}

TEST(RationalTest, ResultsStayInLowestTerms) {
  Lcg rng(4);
  Rational acc(1);
  for (int i = 0; i < 200; ++i) {
    const Rational r(rng.Uniform(-30, 30), rng.Uniform(1, 12));
    switch (rng.Uniform(0, 3)) {
      case 0: acc += r; break;
      case 1: acc -= r; break;
      case 2: acc *= r; break;
      default:
        if (!r.is_zero()) acc /= r;
    }
    const mpz_class num = acc.mpq().get_num();
    const mpz_class den = acc.mpq().get_den();
    EXPECT_GT(den, 0);
    EXPECT_EQ(gcd(num, den), 1);
    EXPECT_EQ(*Rational::Parse(acc.ToString()), acc);
  }
}

TEST(RationalTest, DivisionByZeroThrows) {
  EXPECT_THROW(R(1) / R(0), Error);
}

TEST(DeltaRationalTest, Ordering) {
  EXPECT_EQ(DeltaCompare(DeltaRational(R(1), R(0)), DeltaRational(R(1), R(0))), 0);
  EXPECT_EQ(DeltaCompare(DeltaRational(R(1), R(-5)), DeltaRational(R(1), R(0))), -1);
  EXPECT_EQ(DeltaCompare(DeltaRational(R(2), R(-100)), DeltaRational(R(1), R(100))), 1);
}

TEST(DeltaRationalTest, OrderAgreesWithSmallConcreteDelta) {
  const std::vector<DeltaRational> values = {
      {R(0), R(1)}, {R(0), R(-1)}, {R(1, 2), R(3)}, {R(1, 2), R(0)},
      {R(-1), R(7, 3)}, {R(1, 2), R(-1, 5)}};
  const Rational d(1, 1000000);
  for (const auto& a : values) {
    for (const auto& b : values) {
      const Rational ca = a.EvaluateAt(d);
      const Rational cb = b.EvaluateAt(d);
      EXPECT_EQ(DeltaCompare(a, b), ca < cb ? -1 : (cb < ca ? 1 : 0));
    }
  }
}

TEST(DeltaRationalTest, ArithmeticAndFormatting) {
  const DeltaRational a(R(1, 2), R(1));
  const DeltaRational b(R(1), R(-2));
  EXPECT_EQ(a + b, DeltaRational(R(3, 2), R(-1)));
  EXPECT_EQ((a - b) * R(2), DeltaRational(R(-1), R(6)));
  EXPECT_EQ(DeltaRational(R(3)).ToString(), "3");
  EXPECT_EQ(a.ToString(), "1/2+1d");
  EXPECT_TRUE(DeltaRational(R(0), R(1)).is_positive());
  EXPECT_TRUE(DeltaRational(R(0), R(-1)).is_negative());
}

TEST(InstanceTest, MinimalIdentityInstance) {
  const Instance inst = MakeInstance({{1, 0}, {0, 1}}, {R(1), R(1)},
                                     {R(1), R(1)}, R(1));
  EXPECT_EQ(inst.num_elements(), 2);
  EXPECT_EQ(inst.num_sets(), 2);
  EXPECT_EQ(inst.total_profit(), R(2));
}

TEST(InstanceTest, RejectsNonBinaryEntry) {
  try {
    BinaryMatrix::FromRows({{1, 2}, {0, 1}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("non-binary entry"), std::string::npos);
  }
}

TEST(InstanceTest, RejectsTargetAboveTotalProfit) {
  try {
    MakeInstance({{1, 0}, {0, 1}}, {R(1), R(1)}, {R(1), R(1)}, R(3));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("infeasible target"), std::string::npos);
  }
}

TEST(InstanceTest, RejectsShapeAndSignErrors) {
  EXPECT_THROW(MakeInstance({{1, 0}}, {R(1)}, {R(1)}, R(0)), Error);
  EXPECT_THROW(MakeInstance({{1, 0}}, {R(1), R(-1)}, {R(1)}, R(0)), Error);
  EXPECT_THROW(MakeInstance({{1, 0}}, {R(1), R(1)}, {R(-1)}, R(0)), Error);
  EXPECT_THROW(MakeInstance({{1, 0}}, {R(1), R(1)}, {R(1)}, R(-1)), Error);
}

TEST(CoveredProfitTest, Examples) {
  const Instance inst = MakeInstance({{1, 1}, {0, 1}}, {R(2), R(3)},
                                     {R(1), R(1)}, R(1));
  EXPECT_EQ(CoveredProfit(inst, Cover()), R(0));
  EXPECT_EQ(CoveredProfit(inst, Cover::FromIndices({0, 1}, 2)),
            inst.total_profit());
  EXPECT_EQ(CoveredProfit(inst, Cover::FromIndices({1}, 2)), R(2));
  EXPECT_EQ(CoveredProfit(inst, Cover::FromIndices({0}, 2)), R(1));
  EXPECT_EQ(CoverCost(inst, Cover::FromIndices({0, 1}, 2)), R(5));
}

TEST(CoverTest, MaskRoundTrip) {
  const Cover c = Cover::FromIndices({4, 1}, 6);
  EXPECT_EQ(c.sets(), (std::vector<int>{1, 4}));
  EXPECT_TRUE(c.Contains(4));
  EXPECT_FALSE(c.Contains(0));
  EXPECT_EQ(Cover::FromMask(c.ToMask(6)).sets(), c.sets());
  EXPECT_THROW(Cover::FromIndices({6}, 6), Error);
  EXPECT_THROW(Cover::FromIndices({1, 1}, 6), Error);
}

TEST(CoverTest, CoveredProfitMatchesEnumeration) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = testing::RandomTbInstance(seed);
    for (uint32_t mask = 0; mask < (1u << inst.num_sets()); ++mask) {
      std::vector<int> sets;
      for (int j = 0; j < inst.num_sets(); ++j) {
        if (mask >> j & 1u) sets.push_back(j);
      }
      EXPECT_EQ(CoveredProfit(inst, Cover::FromIndices(sets, inst.num_sets())),
                testing::MaskProfit(inst, mask));
    }
  }
}

TEST(PermutationTest, ApplyAndMapBack) {
  const Instance inst = MakeInstance({{1, 0, 1}, {0, 1, 1}},
                                     {R(1), R(2), R(3)}, {R(5), R(7)}, R(6));
  const PermutationPair perm =
      PermutationPair::FromOrders({1, 0}, {2, 0, 1});
  ASSERT_TRUE(perm.IsValid());
  const Instance permuted = ApplyPermutation(inst, perm);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(permuted.matrix().at(perm.row_perm[i], perm.col_perm[j]),
                inst.matrix().at(i, j));
    }
    EXPECT_EQ(permuted.profit(perm.row_perm[i]), inst.profit(i));
  }
  for (int j = 0; j < 3; ++j) {
    EXPECT_EQ(permuted.cost(perm.col_perm[j]), inst.cost(j));
  }
  EXPECT_EQ(perm.RowOrder(), (std::vector<int>{1, 0}));
  EXPECT_EQ(perm.ColOrder(), (std::vector<int>{2, 0, 1}));
  const Cover c = Cover::FromIndices({0, 2}, 3);
  const Cover back = MapCoverToOriginal(c, perm);
  EXPECT_EQ(CoveredProfit(inst, back), CoveredProfit(permuted, c));
  EXPECT_EQ(CoverCost(inst, back), CoverCost(permuted, c));
  EXPECT_EQ(perm.Inverse().Inverse(), perm);
}

TEST(PermutationTest, RejectsInvalidOrders) {
  PermutationPair p = PermutationPair::Identity(2, 2);
  p.col_perm = {0, 0};
  EXPECT_FALSE(p.IsValid());
}

TEST(DecompositionTest, Validation) {
  const BinaryMatrix a = BinaryMatrix::FromRows({{1, 1}, {0, 1}});
  const Decomposition good{2, {BinaryMatrix::FromRows({{1, 0}, {0, 1}}),
                               BinaryMatrix::FromRows({{0, 1}, {0, 0}})}};
  EXPECT_NO_THROW(ValidateDecomposition(a, good));
  EXPECT_EQ(RowInduced(good, {0, 0}),
            BinaryMatrix::FromRows({{1, 0}, {0, 1}}));
  EXPECT_EQ(RowInduced(good, {1, 0}),
            BinaryMatrix::FromRows({{0, 1}, {0, 1}}));
  const Decomposition overlap{2, {a, BinaryMatrix::FromRows({{1, 0}, {0, 0}})}};
  EXPECT_THROW(ValidateDecomposition(a, overlap), Error);
  const Decomposition missing{1, {BinaryMatrix::FromRows({{1, 0}, {0, 1}})}};
  EXPECT_THROW(ValidateDecomposition(a, missing), Error);
  const Decomposition wrong_rho{3, good.parts};
  EXPECT_THROW(ValidateDecomposition(a, wrong_rho), Error);
  const Decomposition kept = RestrictDecomposition(good, {0}, {1});
  EXPECT_EQ(kept.parts[1], BinaryMatrix::FromRows({{1}}));
}

}  // namespace
}  // namespace pcover
