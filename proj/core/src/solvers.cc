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

#include <iostream>
#include <stdexcept>
#include <utility>

#include "bpmax/tolerance.h"

namespace bpmax {
namespace {

struct GreedyRun {
  ElementSet chosen;
  std::vector<int> order;
  std::vector<double> gains;
  double value = 0.0;
};

// Generic greedy over an objective `value(X)`, caching value(X) across each
// scan so that every round costs one call per feasible candidate.
template <typename Value>
GreedyRun RunGreedy(int n, const Constraint& c, Value&& value) {
  GreedyRun run;
  run.value = value(run.chosen);
  while (true) {
    int best = -1;
    double best_value = 0.0;
    double best_gain = 0.0;
    for (int v = 0; v < n; ++v) {
      if (run.chosen.contains(v)) continue;
      const ElementSet candidate = run.chosen.With(v);
      if (!c.IsIndependent(candidate)) continue;
      const double candidate_value = value(candidate);
      const double gain = candidate_value - run.value;
      if (best < 0 || DefinitelyGreater(gain, best_gain)) {
        best = v;
        best_value = candidate_value;
        best_gain = gain;
      }
    }
    if (best < 0) break;
    run.chosen = run.chosen.With(best);
    run.order.push_back(best);
    run.gains.push_back(best_gain);
    run.value = best_value;
  }
  return run;
}

template <typename Eval>
ModularLowerBound BuildSemigradient(Eval&& g, int n, ElementSet x,
                                    SemigradientVariant variant) {
  const ElementSet full = ElementSet::Full(n);
  const double base_value = g(x);
  std::vector<double> weights(n, 0.0);
  switch (variant) {
    case SemigradientVariant::kGrad1: {
      const double empty_value = g(ElementSet());
      for (int j = 0; j < n; ++j) {
        weights[j] = x.contains(j) ? base_value - g(x.Without(j))
                                   : g(ElementSet{j}) - empty_value;
      }
      break;
    }
    case SemigradientVariant::kGrad2: {
      const double full_value = g(full);
      for (int j = 0; j < n; ++j) {
        weights[j] = x.contains(j) ? full_value - g(full.Without(j))
                                   : g(x.With(j)) - base_value;
      }
      break;
    }
    case SemigradientVariant::kBest:
      throw std::invalid_argument(
          "a single semigradient needs variant grad1 or grad2");
  }
  return ModularLowerBound(x, base_value, std::move(weights), variant);
}

}  // namespace

std::string_view VariantName(SemigradientVariant variant) {
  switch (variant) {
    case SemigradientVariant::kGrad1:
      return "grad1";
    case SemigradientVariant::kGrad2:
      return "grad2";
    case SemigradientVariant::kBest:
      return "best";
  }
  return "?";
}

SemigradientVariant ParseVariant(std::string_view name) {
  if (name == "grad1") return SemigradientVariant::kGrad1;
  if (name == "grad2") return SemigradientVariant::kGrad2;
  if (name == "best") return SemigradientVariant::kBest;
  throw std::invalid_argument("unknown semigradient variant '" +
                              std::string(name) + "'");
}

ModularLowerBound::ModularLowerBound(ElementSet base, double base_value,
                                     std::vector<double> weights,
                                     SemigradientVariant variant)
    : base_(base),
      base_value_(base_value),
      weights_(std::move(weights)),
      variant_(variant) {}

double ModularLowerBound::Evaluate(ElementSet y) const {
  double value = base_value_;
  (base_ - y).ForEach([&](int j) { value -= weights_[j]; });
  (y - base_).ForEach([&](int j) { value += weights_[j]; });
  return value;
}

double ModularLowerBound::ModularPart(ElementSet y) const {
  double value = 0.0;
  y.ForEach([&](int j) { value += weights_[j]; });
  return value;
}

ModularLowerBound Semigradient(const SetFunction& g, ElementSet x,
                               SemigradientVariant variant) {
  return BuildSemigradient(g, g.ground_size(), x, variant);
}

SolveTrace GreedMax(const BpInstance& h, const Constraint& c) {
  if (c.ground_size() != h.ground_size()) {
    throw std::invalid_argument("constraint and instance differ in n");
  }
  int64_t queries = 0;
  GreedyRun run = RunGreedy(h.ground_size(), c, [&](ElementSet x) {
    queries += 2;
    return h(x);
  });
  SolveTrace trace;
  trace.algorithm = "greedy";
  trace.chosen_set = run.chosen;
  trace.value = run.value;
  trace.order = std::move(run.order);
  trace.step_gains = std::move(run.gains);
  trace.oracle_queries = queries;
  trace.iterations = 1;
  return trace;
}

SolveTrace SemiGrad(const BpInstance& h, const Constraint& c, ElementSet init,
                    SemigradientVariant variant, int max_iterations) {
  const int n = h.ground_size();
  if (c.ground_size() != n) {
    throw std::invalid_argument("constraint and instance differ in n");
  }
  if (max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }
  if (!c.IsIndependent(init)) {
    throw std::invalid_argument("initial set " + init.ToString() +
                                " is infeasible for " + c.Describe());
  }
  int64_t queries = 0;
  auto eval_h = [&](ElementSet x) {
    queries += 2;
    return h(x);
  };
  auto eval_f = [&](ElementSet x) {
    ++queries;
    return h.f()(x);
  };
  auto eval_g = [&](ElementSet x) {
    ++queries;
    return h.g()(x);
  };

  std::vector<SemigradientVariant> variants;
  if (variant == SemigradientVariant::kBest) {
    variants = {SemigradientVariant::kGrad1, SemigradientVariant::kGrad2};
  } else {
    variants = {variant};
  }

  ElementSet current = init;
  std::vector<int> order = init.Ids();
  double current_value = eval_h(current);
  int iterations = 0;
  while (iterations < max_iterations) {
    ++iterations;
    bool have_candidate = false;
    GreedyRun best_run;
    double best_value = 0.0;
    for (SemigradientVariant v : variants) {
      const ModularLowerBound bound = BuildSemigradient(eval_g, n, current, v);
      GreedyRun run = RunGreedy(
          n, c, [&](ElementSet y) { return eval_f(y) + bound.ModularPart(y); });
      const double value = eval_h(run.chosen);
      if (!have_candidate || value > best_value) {
        best_run = std::move(run);
        best_value = value;
        have_candidate = true;
      }
    }
    // Move only on strict improvement; otherwise the current set is a fixpoint.
    if (!DefinitelyGreater(best_value, current_value)) break;
    current = best_run.chosen;
    current_value = best_value;
    order = std::move(best_run.order);
  }

  SolveTrace trace;
  trace.algorithm = "semigrad";
  trace.chosen_set = current;
  trace.value = current_value;
  trace.order = order;
  ElementSet prefix;
  double prefix_value = eval_h(prefix);
  for (int v : order) {
    prefix = prefix.With(v);
    const double next = eval_h(prefix);
    trace.step_gains.push_back(next - prefix_value);
    prefix_value = next;
  }
  trace.oracle_queries = queries;
  trace.iterations = iterations;
  return trace;
}

ExactResult ExactBruteforce(const BpInstance& h, const Constraint& c) {
  const int n = h.ground_size();
  if (c.ground_size() != n) {
    throw std::invalid_argument("constraint and instance differ in n");
  }
  RequireExhaustive(n, kMaxExhaustiveSize, "ExactBruteforce");
  if (n > kExactWarnSize) {
    std::cerr << "warning: exhaustive search over 2^" << n
              << " subsets may take a long time\n";
  }
  ExactResult result;
  bool found = false;
  const uint64_t count = uint64_t{1} << n;
  for (uint64_t bits = 0; bits < count; ++bits) {
    const ElementSet x = ElementSet::FromBits(bits);
    if (!c.IsIndependent(x)) continue;
    const double value = h(x);
    if (!found || value > result.opt_value ||
        (value == result.opt_value && LexLess(x, result.optimal_set))) {
      result.optimal_set = x;
      result.opt_value = value;
      found = true;
    }
  }
  result.subsets_scanned = static_cast<int64_t>(count);
  return result;
}

}  // namespace bpmax
