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

#ifndef BPMAX_BOUNDS_H_
#define BPMAX_BOUNDS_H_

#include <string>

namespace bpmax {

// Approximation guarantees for greedy BP maximization as functions of the
// submodular curvature kappa_f and supermodular curvature kappa_g, both in
// [0, 1]. Out-of-range inputs throw std::invalid_argument.
//
// Where a formula divides by kappa_f, the kappa_f -> 0 limit is used for
// kappa_f <= kCurvatureLimitThreshold.
inline constexpr double kCurvatureLimitThreshold = 1e-9;

// (1/kf) [1 - exp(-(1 - kg) kf)]; limit 1 - kg.
double BoundCardinality(double kappa_f, double kappa_g);

// (1/kf) [1 - (1 - (1 - kg) kf / k)^k] for k >= 1; limit 1 - kg. Decreases
// to BoundCardinality as k grows.
double BoundCardinalityFiniteK(double kappa_f, double kappa_g, int k);

// ((1 - kg) / kf) (1 - exp(-kf)); limit 1 - kg. Guarantee for greedy run on
// f + sum of singleton g values.
double BoundWeakCardinality(double kappa_f, double kappa_g);

// (1 - kg) / ((1 - kg) kf + p) for an intersection of p >= 1 matroids.
double BoundMatroids(double kappa_f, double kappa_g, int p);

// 1 - kg: no polynomial algorithm does better (up to +epsilon) under a
// cardinality constraint.
double HardnessCardinality(double kappa_g);

struct HardnessEstimate {
  double value;
  // The asymptotic form hides a constant; `value` is only the shape.
  bool constant_unspecified = true;
  std::string note;
};

// (1 - kg) ln(p) / p, reported up to an unspecified constant factor.
HardnessEstimate HardnessMatroids(double kappa_g, int p);

}  // namespace bpmax

#endif  // BPMAX_BOUNDS_H_
