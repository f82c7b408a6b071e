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

#include "bpmax/set_function.h"

#include <stdexcept>
#include <utility>

#include "bpmax/functions.h"

namespace bpmax {

std::string_view RoleName(Role role) {
  switch (role) {
    case Role::kSubmodular:
      return "submodular";
    case Role::kSupermodular:
      return "supermodular";
    case Role::kModular:
      return "modular";
    case Role::kUnknown:
      break;
  }
  return "unknown";
}

SetFunction::SetFunction(std::string name, int n, Role role,
                         Evaluator evaluator) {
  if (n < 1 || n > kMaxGroundSize) {
    throw std::invalid_argument("ground set size must be in [1, 64], got " +
                                std::to_string(n));
  }
  if (!evaluator) throw std::invalid_argument("empty evaluator");
  auto state = std::make_shared<State>();
  state->name = std::move(name);
  state->n = n;
  state->role = role;
  state->evaluator = std::move(evaluator);
  state_ = std::move(state);
}

double SetFunction::Evaluate(ElementSet x) const {
  if (x.extent() > state_->n) {
    throw std::out_of_range("set " + x.ToString() + " is not a subset of a " +
                            std::to_string(state_->n) + "-element ground set");
  }
  state_->queries.fetch_add(1, std::memory_order_relaxed);
  return state_->evaluator(x);
}

double SetFunction::MarginalGain(int v, ElementSet x) const {
  if (x.contains(v)) {
    throw std::invalid_argument("element " + std::to_string(v) +
                                " already in " + x.ToString());
  }
  if (v < 0 || v >= ground_size()) {
    throw std::out_of_range("element id " + std::to_string(v) +
                            " out of range");
  }
  return Evaluate(x.With(v)) - Evaluate(x);
}

std::vector<double> Tabulate(const SetFunction& f) {
  const int n = f.ground_size();
  RequireExhaustive(n, kMaxExhaustiveSize, "Tabulate");
  std::vector<double> table(size_t{1} << n);
  for (uint64_t bits = 0; bits < table.size(); ++bits) {
    table[bits] = f.Evaluate(ElementSet::FromBits(bits));
  }
  return table;
}

BpInstance::BpInstance(SetFunction f, SetFunction g)
    : f_(std::move(f)), g_(std::move(g)) {
  if (f_.ground_size() != g_.ground_size()) {
    throw std::invalid_argument("f and g have different ground sets");
  }
}

double BpInstance::MarginalGain(int v, ElementSet x) const {
  return f_.MarginalGain(v, x) + g_.MarginalGain(v, x);
}

BpInstance BpInstance::Scaled(double f_scale, double g_scale) const {
  return BpInstance(MakeScaled(f_, f_scale), MakeScaled(g_, g_scale));
}

SetFunction BpInstance::Sum() const {
  return SetFunction("h", ground_size(), Role::kUnknown,
                     [f = f_, g = g_](ElementSet x) { return f(x) + g(x); });
}

}  // namespace bpmax
