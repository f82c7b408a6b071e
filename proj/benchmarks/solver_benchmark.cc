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

#include <vector>

#include "benchmark/benchmark.h"
#include "bpmax/bpmax.h"

namespace bpmax {
namespace {

BpInstance Exp2Instance(int n) {
  return BpInstance(MakeExp2F(n, n / 2, 0.5), MakeExp2G(n, n / 2, 0.5))
      .Scaled(0.5, 0.5);
}

void BM_GreedMax(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BpInstance h = Exp2Instance(n);
  const Constraint c = Constraint::Cardinality(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(GreedMax(h, c).value);
  state.SetComplexityN(n);
}
BENCHMARK(BM_GreedMax)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_SemiGrad(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BpInstance h = Exp2Instance(n);
  const Constraint c = Constraint::Cardinality(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(SemiGrad(h, c).value);
}
BENCHMARK(BM_SemiGrad)->RangeMultiplier(2)->Range(8, 64);

void BM_GreedMaxMatroidIntersection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BpInstance h = Exp2Instance(n);
  std::vector<ElementSet> pairs;
  for (int i = 0; i < n / 2; ++i) pairs.push_back(ElementSet{i, i + n / 2});
  const Constraint c = Constraint::Intersection(
      {Constraint::PartitionMatroid(
           n,
           {ElementSet::Full(n / 2),
            ElementSet::Full(n) - ElementSet::Full(n / 2)},
           {n / 4, n / 4}),
       Constraint::PartitionMatroid(n, pairs, std::vector<int>(n / 2, 1))});
  for (auto _ : state) benchmark::DoNotOptimize(GreedMax(h, c).value);
}
BENCHMARK(BM_GreedMaxMatroidIntersection)->RangeMultiplier(2)->Range(8, 64);

void BM_ExactBruteforce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BpInstance h = Exp2Instance(n);
  const Constraint c = Constraint::Cardinality(n, n / 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(ExactBruteforce(h, c).opt_value);
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(BM_ExactBruteforce)
    ->DenseRange(8, 16, 4)
    ->Unit(benchmark::kMillisecond);

void BM_Curvature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BpInstance h = Exp2Instance(n);
  for (auto _ : state) benchmark::DoNotOptimize(AnalyzeCurvature(h).kappa_f);
}
BENCHMARK(BM_Curvature)->RangeMultiplier(2)->Range(8, 64);

void BM_SubmodularityRatio(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SetFunction h = Exp2Instance(n).Sum();
  for (auto _ : state) {
    benchmark::DoNotOptimize(SubmodularityRatioBruteforce(h).value);
  }
}
BENCHMARK(BM_SubmodularityRatio)->DenseRange(6, 10, 2);

}  // namespace
}  // namespace bpmax

BENCHMARK_MAIN();
