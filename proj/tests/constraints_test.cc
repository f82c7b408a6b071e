// Copyright 2026 The bpmax Authors.
//
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

#include "bpmax/constraints.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"

namespace bpmax {
namespace {

using Axiom = AxiomViolation::Axiom;

TEST(CardinalityTest, LimitsSize) {
  const Constraint c = Constraint::Cardinality(6, 3);
  EXPECT_TRUE(c.IsIndependent(ElementSet{0, 1, 2}));
  EXPECT_FALSE(c.IsIndependent(ElementSet{0, 1, 2, 3}));
  EXPECT_EQ(c.p(), 1);
  EXPECT_EQ(c.cardinality_limit(), 3);
  EXPECT_THROW(Constraint::Cardinality(6, -1), std::invalid_argument);
}

TEST(PartitionMatroidTest, RespectsCapacities) {
  const Constraint c = Constraint::PartitionMatroid(
      4, {ElementSet{0, 1}, ElementSet{2, 3}}, {1, 1});
  EXPECT_TRUE(c.IsIndependent(ElementSet{0, 2}));
  EXPECT_FALSE(c.IsIndependent(ElementSet{0, 1}));
  EXPECT_TRUE(c.is_matroid());
  EXPECT_FALSE(VerifyMatroidAxioms(c).has_value());
}

TEST(PartitionMatroidTest, RejectsBadBlocks) {
  EXPECT_THROW(Constraint::PartitionMatroid(
                   4, {ElementSet{0, 1}, ElementSet{1, 2}}, {1, 1}),
               std::invalid_argument);
  EXPECT_THROW(Constraint::PartitionMatroid(4, {ElementSet{0, 1}}, {-1}),
               std::invalid_argument);
  EXPECT_THROW(Constraint::PartitionMatroid(4, {ElementSet{0, 1}}, {1, 1}),
               std::invalid_argument);
}

TEST(IntersectionTest, BipartiteMatchingOnTwoByTwoGrid) {
  // Edge (r, c) has id 2r + c.
  const Constraint rows = Constraint::PartitionMatroid(
      4, {ElementSet{0, 1}, ElementSet{2, 3}}, {1, 1});
  const Constraint cols = Constraint::PartitionMatroid(
      4, {ElementSet{0, 2}, ElementSet{1, 3}}, {1, 1});
  const Constraint matching = Constraint::Intersection({rows, cols});
  EXPECT_EQ(matching.p(), 2);
  EXPECT_FALSE(matching.is_matroid());
  for (uint64_t bits = 0; bits < 16; ++bits) {
    const ElementSet x = ElementSet::FromBits(bits);
    bool shares = false;
    for (int a : x.Ids()) {
      for (int b : x.Ids()) {
        if (a < b && (a / 2 == b / 2 || a % 2 == b % 2)) shares = true;
      }
    }
    EXPECT_EQ(matching.IsIndependent(x), !shares) << x.ToString();
  }
  EXPECT_THROW(VerifyMatroidAxioms(matching), std::invalid_argument);
}

TEST(IntersectionTest, FlattensNestingAndCountsMatroids) {
  const Constraint a = Constraint::UniformMatroid(5, 3);
  const Constraint b = Constraint::Cardinality(5, 2);
  const Constraint nested =
      Constraint::Intersection({Constraint::Intersection({a, b}), a});
  EXPECT_EQ(nested.p(), 3);
  EXPECT_TRUE(nested.IsIndependent(ElementSet{0, 1}));
  EXPECT_FALSE(nested.IsIndependent(ElementSet{0, 1, 2}));
  EXPECT_THROW(Constraint::Intersection({}), std::invalid_argument);
  EXPECT_THROW(Constraint::Intersection({a, Constraint::Cardinality(6, 2)}),
               std::invalid_argument);
}

TEST(ExplicitMatroidTest, AcceptsUniformRankTwo) {
  const Constraint c = Constraint::ExplicitMatroid(
      3, {ElementSet{}, ElementSet{0}, ElementSet{1}, ElementSet{2},
          ElementSet{0, 1}, ElementSet{0, 2}, ElementSet{1, 2}});
  EXPECT_FALSE(c.IsIndependent(ElementSet{0, 1, 2}));
  EXPECT_TRUE(c.IsIndependent(ElementSet{1, 2}));
}

TEST(ExplicitMatroidTest, RejectsMissingSubsetWithWitness) {
  try {
    Constraint::ExplicitMatroid(
        3, {ElementSet{}, ElementSet{0}, ElementSet{0, 1}});
    FAIL() << "expected rejection";
  } catch (const MatroidAxiomError& e) {
    EXPECT_EQ(e.violation().axiom, Axiom::kDownwardClosure);
    EXPECT_EQ(e.violation().second, ElementSet{1});
  }
}

TEST(ExplicitMatroidTest, RejectsExchangeFailureWithWitness) {
  try {
    Constraint::ExplicitMatroid(3, {ElementSet{}, ElementSet{0}, ElementSet{1},
                                    ElementSet{0, 1}, ElementSet{2}});
    FAIL() << "expected rejection";
  } catch (const MatroidAxiomError& e) {
    EXPECT_EQ(e.violation().axiom, Axiom::kExchange);
    EXPECT_EQ(e.violation().first, (ElementSet{0, 1}));
    EXPECT_EQ(e.violation().second, ElementSet{2});
  }
}

TEST(ExplicitMatroidTest, RejectsMissingEmptySet) {
  const auto v = VerifyMatroidAxioms(2, {ElementSet{0}});
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->axiom, Axiom::kEmptySet);
}

TEST(ExplicitMatroidTest, GatedAtSixteen) {
  EXPECT_THROW(Constraint::ExplicitMatroid(17, {ElementSet{}}),
               ScaleLimitError);
}

// Every maximal independent set of a matroid has the same size.
TEST(MatroidPropertyTest, BasesHaveEqualSize) {
  std::mt19937_64 rng(11);
  std::vector<Constraint> matroids;
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= n; k += 2) {
      matroids.push_back(Constraint::UniformMatroid(n, k));
      matroids.push_back(Constraint::Cardinality(n, k));
    }
  }
  for (int n = 2; n <= 10; ++n) {
    std::uniform_int_distribution<int> block_of(0, 2);
    std::uniform_int_distribution<int> cap(0, 3);
    std::vector<ElementSet> blocks(3);
    for (int v = 0; v < n; ++v) {
      const int b = block_of(rng);
      blocks[b] = blocks[b].With(v);
    }
    std::vector<ElementSet> used;
    std::vector<int> caps;
    for (ElementSet b : blocks) {
      if (b.empty()) continue;
      used.push_back(b);
      caps.push_back(cap(rng));
    }
    matroids.push_back(Constraint::PartitionMatroid(n, used, caps));
  }
  for (const Constraint& c : matroids) {
    ASSERT_FALSE(VerifyMatroidAxioms(c).has_value()) << c.Describe();
    const std::vector<ElementSet> bases = MaximalIndependentSets(c);
    ASSERT_FALSE(bases.empty());
    for (ElementSet b : bases) {
      EXPECT_EQ(b.size(), bases.front().size()) << c.Describe();
    }
  }
}

TEST(IntersectionPropertyTest, DownwardClosedWithEmptySet) {
  const Constraint c = Constraint::Intersection(
      {Constraint::PartitionMatroid(
           6, {ElementSet{0, 1, 2}, ElementSet{3, 4, 5}}, {2, 1}),
       Constraint::PartitionMatroid(
           6, {ElementSet{0, 3}, ElementSet{1, 4}, ElementSet{2, 5}},
           {1, 1, 1})});
  EXPECT_TRUE(c.IsIndependent(ElementSet{}));
  for (uint64_t bits = 0; bits < 64; ++bits) {
    const ElementSet x = ElementSet::FromBits(bits);
    if (!c.IsIndependent(x)) continue;
    x.ForEach([&](int v) { EXPECT_TRUE(c.IsIndependent(x.Without(v))); });
  }
}

}  // namespace
}  // namespace bpmax
