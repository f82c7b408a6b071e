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

#include "bpmax/solvers.h"

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "bpmax/bounds.h"
#include "bpmax/curvature.h"
#include "bpmax/functions.h"
#include "gtest/gtest.h"
#include "testing/instances.h"
#include "testing/oracles.h"

namespace bpmax {
namespace {

using Variant = SemigradientVariant;

BpInstance ModularInstance() {
  return BpInstance(MakeModular({3, 1, 2}), MakeZero(3));
}

double RefOpt(const BpInstance& h, const Constraint& c) {
  const std::vector<double> t = testing::Table(
      [&h](testing::Mask m) { return h(ElementSet::FromBits(m)); },
      h.ground_size());
  return testing::RefMax(t, [&c](testing::Mask m) {
    return c.IsIndependent(ElementSet::FromBits(m));
  });
}

void ExpectConsistentTrace(const BpInstance& h, const Constraint& c,
                           const SolveTrace& t) {
  EXPECT_TRUE(c.IsIndependent(t.chosen_set));
  EXPECT_NEAR(t.value, h(t.chosen_set), 1e-9 * std::max(1.0, t.value));
  const double sum =
      std::accumulate(t.step_gains.begin(), t.step_gains.end(), 0.0);
  EXPECT_NEAR(sum, t.value, 1e-9 * std::max(1.0, t.value));
  EXPECT_EQ(t.order.size(), static_cast<size_t>(t.chosen_set.size()));
}

// Partition matroid intersections used by the p-matroid suites.
Constraint PartitionIntersection(int n, int p) {
  std::vector<Constraint> parts;
  const int half = n / 2;
  parts.push_back(Constraint::PartitionMatroid(
      n, {ElementSet::Full(half), ElementSet::Full(n) - ElementSet::Full(half)},
      {half / 2 + 1, half / 2}));
  if (p >= 2) {
    std::vector<ElementSet> pairs;
    for (int i = 0; i < half; ++i) pairs.push_back(ElementSet{i, i + half});
    parts.push_back(
        Constraint::PartitionMatroid(n, pairs, std::vector<int>(half, 1)));
  }
  if (p >= 3) {
    std::vector<ElementSet> residues(4);
    for (int v = 0; v < n; ++v) residues[v % 4] = residues[v % 4].With(v);
    parts.push_back(
        Constraint::PartitionMatroid(n, residues, std::vector<int>(4, 1)));
  }
  return parts.size() == 1 ? parts.front() : Constraint::Intersection(parts);
}

TEST(GreedMaxTest, ModularExample) {
  const BpInstance h = ModularInstance();
  const Constraint c = Constraint::Cardinality(3, 2);
  const SolveTrace t = GreedMax(h, c);
  EXPECT_EQ(t.chosen_set, (ElementSet{0, 2}));
  EXPECT_DOUBLE_EQ(t.value, 5.0);
  EXPECT_EQ(t.order, (std::vector<int>{0, 2}));
  EXPECT_EQ(t.step_gains, (std::vector<double>{3.0, 2.0}));
  EXPECT_EQ(t.iterations, 1);
  ExpectConsistentTrace(h, c, t);
}

TEST(GreedMaxTest, SetPackingAllKSetsEqual) {
  const BpInstance h(MakeZero(10), MakeSetPacking(10, 4, 0.5));
  const SolveTrace t = GreedMax(h, Constraint::Cardinality(10, 4));
  EXPECT_DOUBLE_EQ(t.value, 2.0);
  EXPECT_EQ(t.chosen_set, (ElementSet{0, 1, 2, 3}));
}

TEST(GreedMaxTest, TiesGoToTheSmallestId) {
  const BpInstance h(MakeModular({1, 1, 1, 1}), MakeZero(4));
  const SolveTrace t = GreedMax(h, Constraint::Cardinality(4, 2));
  EXPECT_EQ(t.order, (std::vector<int>{0, 1}));
}

TEST(GreedMaxTest, EmptyFeasibleRegion) {
  const SolveTrace t =
      GreedMax(ModularInstance(), Constraint::Cardinality(3, 0));
  EXPECT_TRUE(t.chosen_set.empty());
  EXPECT_EQ(t.value, 0.0);
}

TEST(GreedMaxTest, CountsQueriesLocally) {
  const BpInstance h = ModularInstance();
  h.ResetQueryCount();
  const SolveTrace t = GreedMax(h, Constraint::Cardinality(3, 2));
  EXPECT_EQ(t.oracle_queries, h.query_count());
}

TEST(GreedMaxTest, RejectsMismatchedConstraint) {
  EXPECT_THROW(GreedMax(ModularInstance(), Constraint::Cardinality(4, 2)),
               std::invalid_argument);
}

TEST(GreedMaxTest, Exp2MeetsTheGuarantee) {
  const BpInstance h =
      BpInstance(MakeExp2F(8, 4, 0.5), MakeExp2G(8, 4, 0.5)).Scaled(0.5, 0.5);
  const Constraint c = Constraint::Cardinality(8, 4);
  const CurvatureReport r = AnalyzeCurvature(h);
  const double opt = ExactBruteforce(h, c).opt_value;
  EXPECT_GE(GreedMax(h, c).value / opt,
            BoundCardinality(r.kappa_f, r.kappa_g) - 1e-9);
}

// Every greedy prefix S_i satisfies
// h(X*) <= kf * sum_{s_j not in X*} a_j + sum_{s_j in X*} a_j + h(X* - S_i |
// S_i).
TEST(GreedMaxTest, ChainInequality) {
  for (const auto& [name, h] : testing::FamilyGrid(8)) {
    for (int k : {2, 4, 6}) {
      const Constraint c = Constraint::Cardinality(8, k);
      const ExactResult exact = ExactBruteforce(h, c);
      const SolveTrace t = GreedMax(h, c);
      const double kf = SubmodularCurvature(h.f()).value;
      ElementSet prefix;
      double outside = 0.0;
      double inside = 0.0;
      for (size_t i = 0; i <= t.order.size(); ++i) {
        const double rest = h(exact.optimal_set | prefix) - h(prefix);
        EXPECT_LE(exact.opt_value,
                  kf * outside + inside + rest + 1e-9 * (1 + exact.opt_value))
            << name << " k=" << k << " i=" << i;
        if (i == t.order.size()) break;
        const int s = t.order[i];
        (exact.optimal_set.contains(s) ? inside : outside) += t.step_gains[i];
        prefix = prefix.With(s);
      }
    }
  }
}

class GuaranteeTest : public ::testing::TestWithParam<int> {};

TEST_P(GuaranteeTest, CardinalityAcrossTheGrid) {
  const int n = GetParam();
  for (const auto& [name, h] : testing::FamilyGrid(n)) {
    const CurvatureReport r = AnalyzeCurvature(h);
    for (int k : {1, n / 4 + 1, n / 2, n}) {
      const Constraint c = Constraint::Cardinality(n, k);
      const double opt = ExactBruteforce(h, c).opt_value;
      ASSERT_NEAR(opt, RefOpt(h, c), 1e-12 * (1 + opt));
      if (opt <= 0) continue;
      const double bound = BoundCardinalityFiniteK(r.kappa_f, r.kappa_g, k);
      const SolveTrace greedy = GreedMax(h, c);
      const SolveTrace semi = SemiGrad(h, c);
      ExpectConsistentTrace(h, c, greedy);
      EXPECT_GE(greedy.value / opt, bound - 1e-9) << name << " k=" << k;
      EXPECT_GE(semi.value / opt, bound - 1e-9) << name << " k=" << k;
      EXPECT_LT(semi.iterations, kDefaultMaxIterations) << name;
    }
  }
}

TEST_P(GuaranteeTest, MatroidIntersectionsAcrossTheGrid) {
  const int n = GetParam();
  for (int p = 1; p <= 3; ++p) {
    const Constraint c = PartitionIntersection(n, p);
    ASSERT_EQ(c.p(), p);
    for (const auto& [name, h] : testing::FamilyGrid(n)) {
      const CurvatureReport r = AnalyzeCurvature(h);
      const double opt = ExactBruteforce(h, c).opt_value;
      if (opt <= 0) continue;
      const double bound = BoundMatroids(r.kappa_f, r.kappa_g, p);
      const SolveTrace greedy = GreedMax(h, c);
      EXPECT_TRUE(c.IsIndependent(greedy.chosen_set));
      EXPECT_GE(greedy.value / opt, bound - 1e-9) << name << " p=" << p;
      for (Variant v : {Variant::kGrad1, Variant::kGrad2, Variant::kBest}) {
        const SolveTrace semi = SemiGrad(h, c, {}, v);
        EXPECT_TRUE(c.IsIndependent(semi.chosen_set));
        EXPECT_GE(semi.value / opt, bound - 1e-9)
            << name << " p=" << p << " " << VariantName(v);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(GroundSizes, GuaranteeTest, ::testing::Values(6, 8));

TEST(SemigradientTest, EmptyBaseGivesSingletonValues) {
  const SetFunction g = MakePowerSupermodular(6, 1.0);
  for (Variant v : {Variant::kGrad1, Variant::kGrad2}) {
    const ModularLowerBound m = Semigradient(g, ElementSet{}, v);
    for (int e = 0; e < 6; ++e) {
      EXPECT_DOUBLE_EQ(m.Evaluate(ElementSet{e}), g(ElementSet{e}));
    }
  }
  EXPECT_THROW(Semigradient(g, ElementSet{}, Variant::kBest),
               std::invalid_argument);
}

TEST(SemigradientTest, PowerDominanceExample) {
  const SetFunction g = MakePowerSupermodular(6, 1.0);
  const ElementSet x{0, 1};
  for (Variant v : {Variant::kGrad1, Variant::kGrad2}) {
    const ModularLowerBound m = Semigradient(g, x, v);
    EXPECT_EQ(m.Evaluate(x), g(x));
    for (uint64_t bits = 0; bits < 64; ++bits) {
      const ElementSet y = ElementSet::FromBits(bits);
      EXPECT_LE(m.Evaluate(y), g(y) + 1e-12) << y.ToString();
    }
  }
}

TEST(SemigradientTest, LowerBoundPropertiesOnRandomFamilies) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<uint64_t> pick(0, 255);
  for (int trial = 0; trial < 20; ++trial) {
    const BpInstance h = testing::RandomInstance(8, rng);
    const SetFunction& g = h.g();
    const ElementSet x = ElementSet::FromBits(pick(rng));
    const ModularLowerBound m1 = Semigradient(g, x, Variant::kGrad1);
    const ModularLowerBound m2 = Semigradient(g, x, Variant::kGrad2);
    EXPECT_EQ(m1.Evaluate(x), g(x));
    EXPECT_EQ(m2.Evaluate(x), g(x));
    for (double w : m2.weights()) EXPECT_GE(w, 0.0);
    for (uint64_t bits = 0; bits < 256; ++bits) {
      const ElementSet y = ElementSet::FromBits(bits);
      const double gy = g(y);
      const double tol = 1e-9 * std::max(1.0, gy);
      EXPECT_LE(m1.Evaluate(y), gy + tol);
      EXPECT_LE(m2.Evaluate(y), gy + tol);
      if (x.IsSubsetOf(y)) EXPECT_GE(m2.Evaluate(y), m1.Evaluate(y) - tol);
      EXPECT_NEAR(m2.ModularPart(y), m2.Evaluate(y) - m2.Evaluate({}), tol);
    }
  }
}

TEST(SemiGradTest, ModularConvergesQuickly) {
  const BpInstance h(MakeModular({3, 1, 2}), MakeModular({1, 1, 0}));
  const Constraint c = Constraint::Cardinality(3, 2);
  const SolveTrace t = SemiGrad(h, c);
  EXPECT_LE(t.iterations, 2);
  EXPECT_EQ(t.chosen_set, GreedMax(h, c).chosen_set);
  ExpectConsistentTrace(h, c, t);
}

TEST(SemiGradTest, NeverWorseThanItsStart) {
  for (const auto& [name, h] : testing::FamilyGrid(8)) {
    const Constraint c = Constraint::Cardinality(8, 3);
    const SolveTrace greedy = GreedMax(h, c);
    const SolveTrace semi = SemiGrad(h, c, greedy.chosen_set);
    EXPECT_GE(semi.value, greedy.value - 1e-12) << name;
    ExpectConsistentTrace(h, c, semi);
  }
}

TEST(SemiGradTest, RespectsTheIterationCap) {
  const BpInstance h(MakeExp2F(8, 4, 0.5), MakeExp2G(8, 4, 0.5));
  const SolveTrace t =
      SemiGrad(h, Constraint::Cardinality(8, 4), {}, Variant::kGrad2, 1);
  EXPECT_EQ(t.iterations, 1);
  EXPECT_THROW(
      SemiGrad(h, Constraint::Cardinality(8, 4), {}, Variant::kGrad2, 0),
      std::invalid_argument);
}

TEST(SemiGradTest, RejectsInfeasibleInit) {
  EXPECT_THROW(SemiGrad(ModularInstance(), Constraint::Cardinality(3, 1),
                        ElementSet{0, 1}),
               std::invalid_argument);
}

TEST(SemiGradTest, Exp1MeetsTheGuaranteeFromEmpty) {
  const BpInstance h =
      BpInstance(MakeExp1F(8, 4, 0.5), MakeExp1G(8, 4, 0.5)).Scaled(0.5, 0.5);
  const Constraint c = Constraint::Cardinality(8, 4);
  const CurvatureReport r = AnalyzeCurvature(h);
  const double opt = ExactBruteforce(h, c).opt_value;
  EXPECT_GE(SemiGrad(h, c).value / opt,
            BoundCardinality(r.kappa_f, r.kappa_g) - 1e-9);
}

TEST(VariantTest, ParseAndName) {
  EXPECT_EQ(ParseVariant("grad1"), Variant::kGrad1);
  EXPECT_EQ(ParseVariant("grad2"), Variant::kGrad2);
  EXPECT_EQ(ParseVariant("best"), Variant::kBest);
  EXPECT_EQ(VariantName(Variant::kGrad2), "grad2");
  EXPECT_THROW(ParseVariant("grad3"), std::invalid_argument);
}

TEST(ExactTest, Examples) {
  const ExactResult modular =
      ExactBruteforce(ModularInstance(), Constraint::Cardinality(3, 2));
  EXPECT_EQ(modular.optimal_set, (ElementSet{0, 2}));
  EXPECT_DOUBLE_EQ(modular.opt_value, 5.0);
  EXPECT_EQ(modular.subsets_scanned, 8);

  const BpInstance packing(MakeZero(6), MakeSetPacking(6, 2, 0.5));
  const ExactResult all =
      ExactBruteforce(packing, Constraint::Cardinality(6, 6));
  EXPECT_EQ(all.optimal_set, ElementSet::Full(6));
  EXPECT_DOUBLE_EQ(all.opt_value, 5.0);
}

TEST(ExactTest, HardnessBetaPair) {
  const HiddenPair pair =
      MakeHardnessBetaPair(12, 5, 2, 0.5, ElementSet{0, 1, 2, 3, 4});
  const Constraint c = Constraint::Cardinality(12, 5);
  const double opt =
      ExactBruteforce(BpInstance(MakeZero(12), pair.hidden), c).opt_value;
  const double opt_plain =
      ExactBruteforce(BpInstance(MakeZero(12), pair.plain), c).opt_value;
  EXPECT_NEAR(opt, 5 - 0.5 * 2, 1e-12);
  EXPECT_NEAR(opt_plain, 5 * (1 - 0.5), 1e-12);
}

TEST(ExactTest, TiesGoToTheLexicographicallySmallest) {
  const BpInstance h(MakeModular({1, 1, 1, 1}), MakeZero(4));
  EXPECT_EQ(ExactBruteforce(h, Constraint::Cardinality(4, 2)).optimal_set,
            (ElementSet{0, 1}));
}

TEST(ExactTest, QueriesEverySubsetOnce) {
  const SetFunction f = MakeModular(std::vector<double>(10, 1.0));
  const BpInstance h(f, MakeZero(10));
  f.ResetQueryCount();
  ExactBruteforce(h, Constraint::Cardinality(10, 10));
  EXPECT_EQ(f.query_count(), 1024);
}

TEST(ExactTest, Gated) {
  const BpInstance h(MakeZero(31), MakeZero(31));
  EXPECT_THROW(ExactBruteforce(h, Constraint::Cardinality(31, 2)),
               ScaleLimitError);
}

}  // namespace
}  // namespace bpmax
