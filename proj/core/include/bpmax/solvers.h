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

#ifndef BPMAX_SOLVERS_H_
#define BPMAX_SOLVERS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bpmax/constraints.h"
#include "bpmax/element_set.h"
#include "bpmax/set_function.h"

namespace bpmax {

struct SolveTrace {
  std::string algorithm;
  ElementSet chosen_set;
  double value = 0.0;
  // Elements of chosen_set in insertion order.
  std::vector<int> order;
  // step_gains[i] = h(order[i] | order[0..i-1]); they sum to value.
  std::vector<double> step_gains;
  // Evaluator calls made by this run; an h query counts once for f and once
  // for g.
  int64_t oracle_queries = 0;
  // Outer loops (1 for greedy).
  int iterations = 1;
};

// Greedy: starting from the empty set, repeatedly add the feasible element
// with the largest gain h(v | X) until no feasible element remains. Equal
// gains (within tolerance) go to the smallest id. Gains are not required to
// be positive.
SolveTrace GreedMax(const BpInstance& h, const Constraint& c);

enum class SemigradientVariant {
  kGrad1,  // removals priced at g(j | X - j), additions at g(j)
  kGrad2,  // removals priced at g(j | V - j), additions at g(j | X)
  kBest,   // SemiGrad only: try both each round, keep the better
};

std::string_view VariantName(SemigradientVariant variant);
// "grad1" | "grad2" | "best"; throws std::invalid_argument otherwise.
SemigradientVariant ParseVariant(std::string_view name);

// Tight modular lower bound of a supermodular g at a base set X:
//   m(Y) = g(X) - sum_{j in X - Y} weight_j + sum_{j in Y - X} weight_j
// where weight_j is the removal price for j in X and the addition price for
// j outside X. m(X) = g(X) and m <= g everywhere.
class ModularLowerBound {
 public:
  ModularLowerBound(ElementSet base, double base_value,
                    std::vector<double> weights, SemigradientVariant variant);

  ElementSet base() const { return base_; }
  double base_value() const { return base_value_; }
  SemigradientVariant variant() const { return variant_; }
  const std::vector<double>& weights() const { return weights_; }

  double Evaluate(ElementSet y) const;
  // m(Y) - m(empty) = sum of weights over Y: the normalized modular part.
  double ModularPart(ElementSet y) const;

 private:
  ElementSet base_;
  double base_value_;
  std::vector<double> weights_;
  SemigradientVariant variant_;
};

// Builds the grad1 or grad2 bound of g at x. kBest is rejected.
ModularLowerBound Semigradient(const SetFunction& g, ElementSet x,
                               SemigradientVariant variant);

inline constexpr int kDefaultMaxIterations = 100;

// SemiGrad: from `init`, replace g by a modular lower bound at the current
// set, greedily maximize f + (modular part), and move to the result only if it
// strictly improves h. Stops at a fixpoint or after max_iterations rounds.
// Throws std::invalid_argument if init is infeasible or max_iterations < 1.
SolveTrace SemiGrad(const BpInstance& h, const Constraint& c,
                    ElementSet init = {},
                    SemigradientVariant variant = SemigradientVariant::kGrad2,
                    int max_iterations = kDefaultMaxIterations);

struct ExactResult {
  ElementSet optimal_set;
  double opt_value = 0.0;
  int64_t subsets_scanned = 0;
};

// Above this size ExactBruteforce logs a runtime warning to stderr.
inline constexpr int kExactWarnSize = 24;

// Scans all 2^n subsets and evaluates h on the feasible ones. Ties go to the
// lexicographically smallest set. n <= 30.
ExactResult ExactBruteforce(const BpInstance& h, const Constraint& c);

}  // namespace bpmax

#endif  // BPMAX_SOLVERS_H_
