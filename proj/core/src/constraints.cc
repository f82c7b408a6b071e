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

#include <algorithm>
#include <sstream>
#include <utility>

namespace bpmax {

struct Constraint::State {
  Kind kind;
  int n = 0;
  int k = 0;
  std::vector<ElementSet> blocks;
  std::vector<int> capacities;
  std::vector<bool> independent;  // explicit: indexed by subset bits
  std::vector<Constraint> constituents;
};

namespace {

std::string AxiomName(AxiomViolation::Axiom axiom) {
  switch (axiom) {
    case AxiomViolation::Axiom::kEmptySet:
      return "empty set";
    case AxiomViolation::Axiom::kDownwardClosure:
      return "downward closure";
    case AxiomViolation::Axiom::kExchange:
      return "exchange";
  }
  return "?";
}

void RequireSize(int n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw std::invalid_argument("ground set size must be in [1, 64]");
  }
}

}  // namespace

std::string AxiomViolation::Describe() const {
  switch (axiom) {
    case Axiom::kEmptySet:
      return "empty set is not independent";
    case Axiom::kDownwardClosure:
      return "downward closure fails: " + first.ToString() +
             " is independent but " + second.ToString() + " is missing";
    case Axiom::kExchange:
      return "exchange fails for X=" + first.ToString() +
             ", Y=" + second.ToString();
  }
  return AxiomName(axiom);
}

MatroidAxiomError::MatroidAxiomError(AxiomViolation violation)
    : std::invalid_argument("not a matroid: " + violation.Describe()),
      violation_(violation) {}

Constraint::Constraint(std::shared_ptr<const State> state)
    : state_(std::move(state)) {}

Constraint Constraint::Cardinality(int n, int k) {
  RequireSize(n);
  if (k < 0) throw std::invalid_argument("cardinality k must be >= 0");
  auto s = std::make_shared<State>();
  s->kind = Kind::kCardinality;
  s->n = n;
  s->k = k;
  return Constraint(std::move(s));
}

Constraint Constraint::UniformMatroid(int n, int k) {
  Constraint c = Cardinality(n, k);
  auto s = std::make_shared<State>(*c.state_);
  s->kind = Kind::kUniformMatroid;
  return Constraint(std::move(s));
}

Constraint Constraint::PartitionMatroid(int n, std::vector<ElementSet> blocks,
                                        std::vector<int> capacities) {
  RequireSize(n);
  if (blocks.size() != capacities.size()) {
    throw std::invalid_argument(
        "partition matroid: " + std::to_string(blocks.size()) + " blocks but " +
        std::to_string(capacities.size()) + " capacities");
  }
  ElementSet seen;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (capacities[i] < 0) {
      throw std::invalid_argument("partition matroid capacities must be >= 0");
    }
    if (blocks[i].extent() > n) {
      throw std::invalid_argument("partition block " + blocks[i].ToString() +
                                  " leaves the ground set");
    }
    if (!(seen & blocks[i]).empty()) {
      throw std::invalid_argument("partition blocks must be disjoint");
    }
    seen = seen | blocks[i];
  }
  auto s = std::make_shared<State>();
  s->kind = Kind::kPartitionMatroid;
  s->n = n;
  s->blocks = std::move(blocks);
  s->capacities = std::move(capacities);
  return Constraint(std::move(s));
}

Constraint Constraint::ExplicitMatroid(int n, std::vector<ElementSet> family) {
  RequireSize(n);
  RequireExhaustive(n, kMaxMatroidVerifySize, "ExplicitMatroid");
  for (ElementSet x : family) {
    if (x.extent() > n) {
      throw std::invalid_argument("family member " + x.ToString() +
                                  " leaves the ground set");
    }
  }
  if (auto violation = VerifyMatroidAxioms(n, family)) {
    throw MatroidAxiomError(*violation);
  }
  auto s = std::make_shared<State>();
  s->kind = Kind::kExplicitMatroid;
  s->n = n;
  s->independent.assign(size_t{1} << n, false);
  for (ElementSet x : family) s->independent[x.bits()] = true;
  return Constraint(std::move(s));
}

Constraint Constraint::Intersection(std::vector<Constraint> constraints) {
  if (constraints.empty()) {
    throw std::invalid_argument("intersection of zero constraints");
  }
  auto s = std::make_shared<State>();
  s->kind = Kind::kIntersection;
  s->n = constraints.front().ground_size();
  for (Constraint& c : constraints) {
    if (c.ground_size() != s->n) {
      throw std::invalid_argument("intersected constraints differ in n");
    }
    if (c.kind() == Kind::kIntersection) {
      for (const Constraint& inner : c.constituents()) {
        s->constituents.push_back(inner);
      }
    } else {
      s->constituents.push_back(std::move(c));
    }
  }
  return Constraint(std::move(s));
}

Constraint::Kind Constraint::kind() const { return state_->kind; }
int Constraint::ground_size() const { return state_->n; }

int Constraint::p() const {
  return state_->kind == Kind::kIntersection
             ? static_cast<int>(state_->constituents.size())
             : 1;
}

std::optional<int> Constraint::cardinality_limit() const {
  if (state_->kind == Kind::kCardinality ||
      state_->kind == Kind::kUniformMatroid) {
    return state_->k;
  }
  return std::nullopt;
}

const std::vector<Constraint>& Constraint::constituents() const {
  return state_->constituents;
}

bool Constraint::IsIndependent(ElementSet x) const {
  const State& s = *state_;
  if (x.extent() > s.n) return false;
  switch (s.kind) {
    case Kind::kCardinality:
    case Kind::kUniformMatroid:
      return x.size() <= s.k;
    case Kind::kPartitionMatroid:
      for (size_t i = 0; i < s.blocks.size(); ++i) {
        if ((x & s.blocks[i]).size() > s.capacities[i]) return false;
      }
      return true;
    case Kind::kExplicitMatroid:
      return s.independent[x.bits()];
    case Kind::kIntersection:
      return std::all_of(
          s.constituents.begin(), s.constituents.end(),
          [x](const Constraint& c) { return c.IsIndependent(x); });
  }
  return false;
}

std::string Constraint::Describe() const {
  const State& s = *state_;
  std::ostringstream out;
  switch (s.kind) {
    case Kind::kCardinality:
      out << "cardinality(k=" << s.k << ")";
      break;
    case Kind::kUniformMatroid:
      out << "uniform(k=" << s.k << ")";
      break;
    case Kind::kPartitionMatroid:
      out << "partition(";
      for (size_t i = 0; i < s.blocks.size(); ++i) {
        if (i > 0) out << ',';
        out << s.blocks[i].ToString() << ':' << s.capacities[i];
      }
      out << ')';
      break;
    case Kind::kExplicitMatroid:
      out << "explicit("
          << std::count(s.independent.begin(), s.independent.end(), true)
          << " sets)";
      break;
    case Kind::kIntersection:
      out << "intersection(";
      for (size_t i = 0; i < s.constituents.size(); ++i) {
        if (i > 0) out << " & ";
        out << s.constituents[i].Describe();
      }
      out << ')';
      break;
  }
  return out.str();
}

std::optional<AxiomViolation> VerifyMatroidAxioms(
    int n, const std::vector<ElementSet>& family) {
  RequireExhaustive(n, kMaxMatroidVerifySize, "VerifyMatroidAxioms");
  std::vector<bool> independent(size_t{1} << n, false);
  for (ElementSet x : family) {
    if (x.extent() > n) {
      throw std::invalid_argument("family member " + x.ToString() +
                                  " leaves the ground set");
    }
    independent[x.bits()] = true;
  }
  using Axiom = AxiomViolation::Axiom;
  if (!independent[0]) return AxiomViolation{Axiom::kEmptySet, {}, {}};

  std::vector<ElementSet> members;
  for (uint64_t bits = 0; bits < independent.size(); ++bits) {
    if (independent[bits]) members.push_back(ElementSet::FromBits(bits));
  }
  for (ElementSet x : members) {
    std::optional<AxiomViolation> found;
    x.ForEach([&](int v) {
      if (!found && !independent[x.Without(v).bits()]) {
        found = AxiomViolation{Axiom::kDownwardClosure, x, x.Without(v)};
      }
    });
    if (found) return found;
  }
  // With downward closure in place, exchange between sizes differing by one
  // implies the general exchange axiom.
  for (ElementSet x : members) {
    for (ElementSet y : members) {
      if (x.size() != y.size() + 1) continue;
      bool extendable = false;
      (x - y).ForEach([&](int v) {
        extendable = extendable || independent[y.With(v).bits()];
      });
      if (!extendable) return AxiomViolation{Axiom::kExchange, x, y};
    }
  }
  return std::nullopt;
}

std::optional<AxiomViolation> VerifyMatroidAxioms(const Constraint& c) {
  if (c.kind() == Constraint::Kind::kIntersection) {
    throw std::invalid_argument(
        "matroid axioms do not apply to an intersection of matroids");
  }
  const int n = c.ground_size();
  RequireExhaustive(n, kMaxMatroidVerifySize, "VerifyMatroidAxioms");
  std::vector<ElementSet> family;
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    const ElementSet x = ElementSet::FromBits(bits);
    if (c.IsIndependent(x)) family.push_back(x);
  }
  return VerifyMatroidAxioms(n, family);
}

std::vector<ElementSet> MaximalIndependentSets(const Constraint& c) {
  const int n = c.ground_size();
  RequireExhaustive(n, kMaxExhaustiveSize, "MaximalIndependentSets");
  std::vector<ElementSet> result;
  const ElementSet full = ElementSet::Full(n);
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    const ElementSet x = ElementSet::FromBits(bits);
    if (!c.IsIndependent(x)) continue;
    bool maximal = true;
    (full - x).ForEach(
        [&](int v) { maximal = maximal && !c.IsIndependent(x.With(v)); });
    if (maximal) result.push_back(x);
  }
  return result;
}

}  // namespace bpmax
