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

#ifndef BPMAX_FUNCTIONS_H_
#define BPMAX_FUNCTIONS_H_

#include <random>
#include <span>
#include <utility>
#include <vector>

#include "bpmax/element_set.h"
#include "bpmax/set_function.h"

namespace bpmax {

// Constructors for the set-function families. Every family is normalized
// (value 0 at the empty set) and monotone nondecreasing unless noted.
// Invalid parameters raise std::invalid_argument.

inline constexpr double kDefaultEpsilon = 1e-5;

// Two oracles that agree everywhere except on a hidden set.
struct HiddenPair {
  SetFunction hidden;  // differs at the hidden set
  SetFunction plain;   // the reference function
};

// f(X) = sum of weights over X.
SetFunction MakeModular(std::vector<double> weights);

// f(X) = 0.
SetFunction MakeZero(int n);

// x -> scale * f(x), same role. scale >= 0.
SetFunction MakeScaled(const SetFunction& f, double scale);

// Dual f'(X) = f(V) - f(V \ X). Submodular and supermodular swap roles.
SetFunction MakeDual(const SetFunction& f);

// First experiment family on n = 2k elements, V1 = {0..k-1}, V2 = {k..2k-1}.
// f(X) = [(k - alpha |X & V2|) / k] * sum_{v_i in X & V1} w_i + |X & V2| / k
// with w_i = ((1 - alpha/k)^i - (1 - alpha/k)^(i+1)) / alpha for the i-th
// element of V1 (1-based), and w_i = 1/k at alpha = 0.
SetFunction MakeExp1F(int n, int k, double alpha);
// g(X) = |X| - beta min(1 + |X & V1|, |X|, k)
//        + eps max(|X|, |X| + beta/(1-beta) (|X & V2| - k + 1)),
// 0 <= beta < 1.
SetFunction MakeExp1G(int n, int k, double beta,
                      double epsilon = kDefaultEpsilon);
// The per-element weights w_1..w_k used by MakeExp1F.
std::vector<double> Exp1Weights(int k, double alpha);

// Second experiment family: f(X) = |X & V1|^alpha (0 at the empty
// intersection), g(X) = max(0, (|X & V2| - beta) / (1 - beta)).
SetFunction MakeExp2F(int n, int k, double alpha);
SetFunction MakeExp2G(int n, int k, double beta);

// g(X) = |X|^(1 + alpha), alpha >= 0.
SetFunction MakePowerSupermodular(int n, double alpha);

// Monotone convex psi with psi(0) = 0.
struct ConvexShape {
  enum class Kind { kPower, kPiecewiseLinear };
  Kind kind = Kind::kPower;
  double power = 2.0;  // psi(t) = t^power, power >= 1
  // (t, psi(t)) breakpoints starting at (0, 0), t strictly increasing,
  // slopes nonnegative and nondecreasing. Extended past the last knot with
  // the last slope.
  std::vector<std::pair<double, double>> knots;

  static ConvexShape Power(double p);
  static ConvexShape PiecewiseLinear(std::vector<std::pair<double, double>> k);

  // Throws std::invalid_argument for non-convex, decreasing or unanchored
  // shapes.
  void Validate() const;
  double operator()(double t) const;
};

// g(X) = psi(sum of weights over X). Supermodular.
SetFunction MakeConvexOfModular(std::vector<double> weights, ConvexShape shape);

// Cardinality hardness pair on n elements, k = n/2, |hidden| = k:
// plain(X) = max(|X| - k, 0); hidden equals plain except hidden(R) = 0.5.
HiddenPair MakeHardnessCardinalityPair(int n, ElementSet hidden);

// Curvature-beta hardness pair with |hidden| = alpha, gamma < alpha <= n/2-1:
// hidden(X) = |X| - beta min(gamma + |X \ R|, |X|, alpha),
// plain(X)  = |X| - beta min(|X|, alpha).
HiddenPair MakeHardnessBetaPair(int n, int alpha, int gamma, double beta,
                                ElementSet hidden);

// h(X) = (1 - beta)|X| + beta max(|X| - k, 0). Supermodular, curvature beta.
SetFunction MakeSetPacking(int n, int k, double beta);

// h(X) = min(max(|X|, 1), 3) - 1 for n >= 4. Monotone, neither submodular
// nor supermodular, and not a sum of the two.
SetFunction MakeNonBp(int n);

// g(A) = |A - {a}| + eps |A - {a}| |A & {a}|. Supermodular, fully curved.
SetFunction MakeRatioCounterexample(int n, int a, double epsilon);

// plain(X) = |X|; hidden equals plain except hidden(R) = n/2 - 1.
HiddenPair MakeHiddenDip(int n, ElementSet hidden);

// Uniformly random subset of {0..n-1} with the given size.
ElementSet SampleHiddenSet(int n, int size, std::mt19937_64& rng);

}  // namespace bpmax

#endif  // BPMAX_FUNCTIONS_H_
