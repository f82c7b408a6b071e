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

#ifndef BPMAX_CONSTRAINTS_H_
#define BPMAX_CONSTRAINTS_H_

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpmax/element_set.h"

namespace bpmax {

// Exhaustive matroid-axiom checks are gated at this ground-set size.
inline constexpr int kMaxMatroidVerifySize = 16;

// A failed matroid axiom. For kEmptySet both sets are empty; for
// kDownwardClosure `first` is independent and its subset `second` is not; for
// kExchange |first| > |second|, both independent, and no element of
// first - second extends `second`.
struct AxiomViolation {
  enum class Axiom { kEmptySet, kDownwardClosure, kExchange };
  Axiom axiom;
  ElementSet first;
  ElementSet second;

  std::string Describe() const;
};

class MatroidAxiomError : public std::invalid_argument {
 public:
  explicit MatroidAxiomError(AxiomViolation violation);
  const AxiomViolation& violation() const { return violation_; }

 private:
  AxiomViolation violation_;
};

// An independence system given by a feasibility oracle. Immutable; copies
// share state.
class Constraint {
 public:
  enum class Kind {
    kCardinality,
    kUniformMatroid,
    kPartitionMatroid,
    kExplicitMatroid,
    kIntersection,
  };

  // |X| <= k.
  static Constraint Cardinality(int n, int k);
  static Constraint UniformMatroid(int n, int k);
  // |X & block_i| <= capacity_i. Blocks must be disjoint; elements in no
  // block are unconstrained.
  static Constraint PartitionMatroid(int n, std::vector<ElementSet> blocks,
                                     std::vector<int> capacities);
  // The independent family listed explicitly. Validated against the matroid
  // axioms on construction (n <= 16); throws MatroidAxiomError.
  static Constraint ExplicitMatroid(int n, std::vector<ElementSet> family);
  // Feasible iff feasible for every constituent. Nested intersections are
  // flattened.
  static Constraint Intersection(std::vector<Constraint> constraints);

  Kind kind() const;
  int ground_size() const;
  // Number of matroids intersected; 1 for every non-intersection kind.
  int p() const;
  bool is_matroid() const { return kind() != Kind::kIntersection; }
  // Cardinality bound for kCardinality / kUniformMatroid, else nullopt.
  std::optional<int> cardinality_limit() const;
  const std::vector<Constraint>& constituents() const;

  bool IsIndependent(ElementSet x) const;

  std::string Describe() const;

 private:
  struct State;
  explicit Constraint(std::shared_ptr<const State> state);
  std::shared_ptr<const State> state_;
};

// Checks empty-set membership, downward closure and exchange by enumeration.
// Returns the first violation, or nullopt when all three hold. Throws
// ScaleLimitError for n > 16 and std::invalid_argument for intersections,
// which need not satisfy exchange.
std::optional<AxiomViolation> VerifyMatroidAxioms(const Constraint& c);

// Same check applied to an explicit family of independent sets.
std::optional<AxiomViolation> VerifyMatroidAxioms(
    int n, const std::vector<ElementSet>& family);

// Inclusion-maximal independent sets, by enumeration (n <= 30).
std::vector<ElementSet> MaximalIndependentSets(const Constraint& c);

}  // namespace bpmax

#endif  // BPMAX_CONSTRAINTS_H_
