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

#ifndef BPMAX_SET_FUNCTION_H_
#define BPMAX_SET_FUNCTION_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bpmax/element_set.h"

namespace bpmax {

enum class Role { kSubmodular, kSupermodular, kModular, kUnknown };

std::string_view RoleName(Role role);

// Value oracle for a set function over {0, ..., n-1}.
//
// A SetFunction is a cheap handle: copies share the evaluator and the query
// counter. The evaluator is immutable after construction and may be called
// from several threads; the counter is atomic.
class SetFunction {
 public:
  using Evaluator = std::function<double(ElementSet)>;

  SetFunction(std::string name, int n, Role role, Evaluator evaluator);

  const std::string& name() const { return state_->name; }
  int ground_size() const { return state_->n; }
  Role role() const { return state_->role; }

  // Throws std::out_of_range if `x` has members >= ground_size().
  double Evaluate(ElementSet x) const;
  double operator()(ElementSet x) const { return Evaluate(x); }

  // f(v | x) = f(x + v) - f(x). Two queries. Throws std::invalid_argument if
  // v is already in x.
  double MarginalGain(int v, ElementSet x) const;

  int64_t query_count() const {
    return state_->queries.load(std::memory_order_relaxed);
  }
  void ResetQueryCount() const {
    state_->queries.store(0, std::memory_order_relaxed);
  }

 private:
  struct State {
    std::string name;
    int n;
    Role role;
    Evaluator evaluator;
    mutable std::atomic<int64_t> queries{0};
  };
  std::shared_ptr<const State> state_;
};

// All 2^n values indexed by subset bits. Costs 2^n queries; n <= 30.
std::vector<double> Tabulate(const SetFunction& f);

// The pair (f, g) with h = f + g.
class BpInstance {
 public:
  BpInstance(SetFunction f, SetFunction g);

  const SetFunction& f() const { return f_; }
  const SetFunction& g() const { return g_; }
  int ground_size() const { return f_.ground_size(); }

  // h(x); one f query plus one g query.
  double Evaluate(ElementSet x) const {
    return f_.Evaluate(x) + g_.Evaluate(x);
  }
  double operator()(ElementSet x) const { return Evaluate(x); }
  double MarginalGain(int v, ElementSet x) const;

  // Combined f and g query count.
  int64_t query_count() const { return f_.query_count() + g_.query_count(); }
  void ResetQueryCount() const {
    f_.ResetQueryCount();
    g_.ResetQueryCount();
  }

  // Instance with f scaled by f_scale and g scaled by g_scale.
  BpInstance Scaled(double f_scale, double g_scale) const;

  // h as a standalone oracle (role unknown). Each query forwards to f and g.
  SetFunction Sum() const;

 private:
  SetFunction f_;
  SetFunction g_;
};

}  // namespace bpmax

#endif  // BPMAX_SET_FUNCTION_H_
