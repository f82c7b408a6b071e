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

#include "bpmax/functions.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace bpmax {
namespace {

void Require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

void RequireUnit(double x, const char* name) {
  Require(x >= 0.0 && x <= 1.0 && std::isfinite(x),
          std::string(name) + " must lie in [0, 1]");
}

void RequireBeta(double beta) {
  Require(beta >= 0.0 && beta < 1.0 && std::isfinite(beta),
          "beta must lie in [0, 1); beta = 1 makes the family undefined");
}

void RequireHalves(int n, int k) {
  Require(k >= 1, "k must be positive");
  Require(n == 2 * k, "family requires n = 2k");
  Require(n <= kMaxGroundSize, "ground set too large");
}

void RequireHidden(int n, ElementSet hidden, int size) {
  Require(hidden.extent() <= n, "hidden set has ids outside the ground set");
  Require(hidden.size() == size, "hidden set must have size " +
                                     std::to_string(size) + ", got " +
                                     std::to_string(hidden.size()));
}

std::string Label(const char* family, std::initializer_list<double> params) {
  std::ostringstream out;
  out << family << '(';
  bool first = true;
  for (double p : params) {
    if (!first) out << ',';
    out << p;
    first = false;
  }
  out << ')';
  return out.str();
}

void RequireWeights(const std::vector<double>& weights) {
  Require(!weights.empty(), "need at least one weight");
  for (double w : weights) {
    Require(w >= 0.0 && std::isfinite(w), "weights must be >= 0");
  }
}

}  // namespace

SetFunction MakeModular(std::vector<double> weights) {
  RequireWeights(weights);
  const int n = static_cast<int>(weights.size());
  return SetFunction("modular", n, Role::kModular,
                     [w = std::move(weights)](ElementSet x) {
                       double sum = 0.0;
                       x.ForEach([&](int v) { sum += w[v]; });
                       return sum;
                     });
}

SetFunction MakeZero(int n) {
  return SetFunction("zero", n, Role::kModular, [](ElementSet) { return 0.0; });
}

SetFunction MakeScaled(const SetFunction& f, double scale) {
  Require(scale >= 0.0 && std::isfinite(scale), "scale must be >= 0");
  return SetFunction(f.name(), f.ground_size(), f.role(),
                     [f, scale](ElementSet x) { return scale * f(x); });
}

SetFunction MakeDual(const SetFunction& f) {
  Role role = f.role();
  if (role == Role::kSubmodular) {
    role = Role::kSupermodular;
  } else if (role == Role::kSupermodular) {
    role = Role::kSubmodular;
  }
  const ElementSet full = ElementSet::Full(f.ground_size());
  const double full_value = f(full);
  return SetFunction(
      "dual(" + f.name() + ")", f.ground_size(), role,
      [f, full, full_value](ElementSet x) { return full_value - f(full - x); });
}

std::vector<double> Exp1Weights(int k, double alpha) {
  Require(k >= 1, "k must be positive");
  RequireUnit(alpha, "alpha");
  std::vector<double> w(k);
  if (alpha == 0.0) {
    // Analytic limit of the formula as alpha -> 0.
    std::fill(w.begin(), w.end(), 1.0 / k);
    return w;
  }
  const double r = 1.0 - alpha / k;
  for (int i = 1; i <= k; ++i) {
    w[i - 1] = (std::pow(r, i) - std::pow(r, i + 1)) / alpha;
  }
  return w;
}

SetFunction MakeExp1F(int n, int k, double alpha) {
  RequireHalves(n, k);
  std::vector<double> w = Exp1Weights(k, alpha);
  const ElementSet v1 = ElementSet::Full(k);
  const ElementSet v2 = ElementSet::Full(n) - v1;
  return SetFunction(Label("exp1_f", {double(n), double(k), alpha}), n,
                     Role::kSubmodular, [=, w = std::move(w)](ElementSet x) {
                       const int c2 = (x & v2).size();
                       double weight_sum = 0.0;
                       (x & v1).ForEach([&](int v) { weight_sum += w[v]; });
                       return (k - alpha * c2) / k * weight_sum +
                              static_cast<double>(c2) / k;
                     });
}

SetFunction MakeExp1G(int n, int k, double beta, double epsilon) {
  RequireHalves(n, k);
  RequireBeta(beta);
  Require(epsilon > 0.0 && std::isfinite(epsilon), "epsilon must be > 0");
  const ElementSet v1 = ElementSet::Full(k);
  const ElementSet v2 = ElementSet::Full(n) - v1;
  const double slope = beta / (1.0 - beta);
  return SetFunction(
      Label("exp1_g", {double(n), double(k), beta, epsilon}), n,
      Role::kSupermodular, [=](ElementSet x) {
        const double size = x.size();
        const double c1 = (x & v1).size();
        const double c2 = (x & v2).size();
        const double capped = std::min({1.0 + c1, size, double(k)});
        const double tail = std::max(size, size + slope * (c2 - k + 1));
        return size - beta * capped + epsilon * tail;
      });
}

SetFunction MakeExp2F(int n, int k, double alpha) {
  RequireHalves(n, k);
  RequireUnit(alpha, "alpha");
  const ElementSet v1 = ElementSet::Full(k);
  return SetFunction(Label("exp2_f", {double(n), double(k), alpha}), n,
                     Role::kSubmodular, [=](ElementSet x) {
                       const int c1 = (x & v1).size();
                       return c1 == 0 ? 0.0 : std::pow(double(c1), alpha);
                     });
}

SetFunction MakeExp2G(int n, int k, double beta) {
  RequireHalves(n, k);
  RequireBeta(beta);
  const ElementSet v2 = ElementSet::Full(n) - ElementSet::Full(k);
  return SetFunction(Label("exp2_g", {double(n), double(k), beta}), n,
                     Role::kSupermodular, [=](ElementSet x) {
                       const double c2 = (x & v2).size();
                       return std::max(0.0, (c2 - beta) / (1.0 - beta));
                     });
}

SetFunction MakePowerSupermodular(int n, double alpha) {
  Require(alpha >= 0.0 && std::isfinite(alpha), "alpha must be >= 0");
  return SetFunction(Label("power", {double(n), alpha}), n,
                     alpha == 0.0 ? Role::kModular : Role::kSupermodular,
                     [alpha](ElementSet x) {
                       return std::pow(double(x.size()), 1.0 + alpha);
                     });
}

ConvexShape ConvexShape::Power(double p) {
  ConvexShape shape;
  shape.kind = Kind::kPower;
  shape.power = p;
  return shape;
}

ConvexShape ConvexShape::PiecewiseLinear(
    std::vector<std::pair<double, double>> k) {
  ConvexShape shape;
  shape.kind = Kind::kPiecewiseLinear;
  shape.knots = std::move(k);
  return shape;
}

void ConvexShape::Validate() const {
  if (kind == Kind::kPower) {
    Require(std::isfinite(power) && power >= 1.0,
            "power shape needs exponent >= 1 to be convex");
    return;
  }
  Require(knots.size() >= 2, "piecewise-linear shape needs >= 2 knots");
  Require(knots.front().first == 0.0 && knots.front().second == 0.0,
          "piecewise-linear shape must start at (0, 0)");
  double previous_slope = 0.0;
  for (size_t i = 1; i < knots.size(); ++i) {
    const double dt = knots[i].first - knots[i - 1].first;
    Require(dt > 0.0, "knot abscissae must be strictly increasing");
    const double slope = (knots[i].second - knots[i - 1].second) / dt;
    Require(slope >= 0.0, "shape must be nondecreasing");
    Require(slope >= previous_slope - 1e-12, "shape is not convex");
    previous_slope = slope;
  }
}

double ConvexShape::operator()(double t) const {
  if (kind == Kind::kPower) return std::pow(t, power);
  size_t i = 1;
  while (i + 1 < knots.size() && t > knots[i].first) ++i;
  const auto& [t0, y0] = knots[i - 1];
  const auto& [t1, y1] = knots[i];
  return y0 + (y1 - y0) / (t1 - t0) * (t - t0);
}

SetFunction MakeConvexOfModular(std::vector<double> weights,
                                ConvexShape shape) {
  shape.Validate();
  RequireWeights(weights);
  const int n = static_cast<int>(weights.size());
  return SetFunction(
      "convex_of_modular", n, Role::kSupermodular,
      [w = std::move(weights), shape = std::move(shape)](ElementSet x) {
        double sum = 0.0;
        x.ForEach([&](int v) { sum += w[v]; });
        return shape(sum);
      });
}

HiddenPair MakeHardnessCardinalityPair(int n, ElementSet hidden) {
  Require(n >= 2 && n % 2 == 0, "n must be even");
  const int k = n / 2;
  RequireHidden(n, hidden, k);
  auto plain = [k](ElementSet x) { return std::max(x.size() - k, 0) * 1.0; };
  return {
      SetFunction("hardness_card", n, Role::kSupermodular,
                  [=](ElementSet x) { return x == hidden ? 0.5 : plain(x); }),
      SetFunction("hardness_card_plain", n, Role::kSupermodular, plain)};
}

HiddenPair MakeHardnessBetaPair(int n, int alpha, int gamma, double beta,
                                ElementSet hidden) {
  Require(gamma >= 1 && gamma < alpha, "need 1 <= gamma < alpha");
  Require(2 * alpha <= n - 2, "need alpha <= n/2 - 1");
  RequireUnit(beta, "beta");
  RequireHidden(n, hidden, alpha);
  return {SetFunction("hardness_beta", n, Role::kSupermodular,
                      [=](ElementSet x) {
                        const int size = x.size();
                        const int outside = (x - hidden).size();
                        return size -
                               beta * std::min({gamma + outside, size, alpha});
                      }),
          SetFunction("hardness_beta_plain", n, Role::kSupermodular,
                      [=](ElementSet x) {
                        const int size = x.size();
                        return size - beta * std::min(size, alpha);
                      })};
}

SetFunction MakeSetPacking(int n, int k, double beta) {
  RequireUnit(beta, "beta");
  Require(k >= 1 && k <= n, "need 1 <= k <= n");
  return SetFunction(Label("setpacking", {double(n), double(k), beta}), n,
                     Role::kSupermodular, [=](ElementSet x) {
                       const int size = x.size();
                       return (1.0 - beta) * size +
                              beta * std::max(size - k, 0);
                     });
}

SetFunction MakeNonBp(int n) {
  Require(n >= 4, "non-BP example needs n >= 4");
  return SetFunction("non_bp", n, Role::kUnknown, [](ElementSet x) {
    return std::min(std::max(x.size(), 1), 3) - 1.0;
  });
}

SetFunction MakeRatioCounterexample(int n, int a, double epsilon) {
  Require(a >= 0 && a < n, "distinguished element out of range");
  Require(epsilon > 0.0 && std::isfinite(epsilon), "epsilon must be > 0");
  return SetFunction(
      Label("ratio_counterexample", {double(n), double(a), epsilon}), n,
      Role::kSupermodular, [=](ElementSet x) {
        const double others = x.Without(a).size();
        const double has_a = x.contains(a) ? 1.0 : 0.0;
        return others + epsilon * others * has_a;
      });
}

HiddenPair MakeHiddenDip(int n, ElementSet hidden) {
  Require(n >= 2 && n % 2 == 0, "n must be even");
  RequireHidden(n, hidden, n / 2);
  auto cardinality = [](ElementSet x) { return double(x.size()); };
  const double dip = n / 2 - 1.0;
  return {SetFunction(
              "hidden_dip", n, Role::kUnknown,
              [=](ElementSet x) { return x == hidden ? dip : cardinality(x); }),
          SetFunction("hidden_dip_plain", n, Role::kModular, cardinality)};
}

ElementSet SampleHiddenSet(int n, int size, std::mt19937_64& rng) {
  Require(size >= 0 && size <= n, "sample size out of range");
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(size);
  return ElementSet::FromIds(ids);
}

}  // namespace bpmax
