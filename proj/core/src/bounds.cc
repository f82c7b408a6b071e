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

#include "bpmax/bounds.h"

#include <cmath>
#include <stdexcept>

namespace bpmax {
namespace {

void RequireCurvature(double kappa, const char* name) {
  if (!(kappa >= 0.0 && kappa <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

void RequireCurvatures(double kappa_f, double kappa_g) {
  RequireCurvature(kappa_f, "kappa_f");
  RequireCurvature(kappa_g, "kappa_g");
}

}  // namespace

double BoundCardinality(double kappa_f, double kappa_g) {
  RequireCurvatures(kappa_f, kappa_g);
  const double a = 1.0 - kappa_g;
  if (kappa_f <= kCurvatureLimitThreshold) return a;
  return -std::expm1(-a * kappa_f) / kappa_f;
}

double BoundCardinalityFiniteK(double kappa_f, double kappa_g, int k) {
  RequireCurvatures(kappa_f, kappa_g);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const double a = 1.0 - kappa_g;
  if (kappa_f <= kCurvatureLimitThreshold) return a;
  return (1.0 - std::pow(1.0 - a * kappa_f / k, k)) / kappa_f;
}

double BoundWeakCardinality(double kappa_f, double kappa_g) {
  RequireCurvatures(kappa_f, kappa_g);
  const double a = 1.0 - kappa_g;
  if (kappa_f <= kCurvatureLimitThreshold) return a;
  return a * -std::expm1(-kappa_f) / kappa_f;
}

double BoundMatroids(double kappa_f, double kappa_g, int p) {
  RequireCurvatures(kappa_f, kappa_g);
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  const double a = 1.0 - kappa_g;
  return a / (a * kappa_f + p);
}

double HardnessCardinality(double kappa_g) {
  RequireCurvature(kappa_g, "kappa_g");
  return 1.0 - kappa_g;
}

HardnessEstimate HardnessMatroids(double kappa_g, int p) {
  RequireCurvature(kappa_g, "kappa_g");
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  return {(1.0 - kappa_g) * std::log(static_cast<double>(p)) / p, true,
          "up to an unspecified constant"};
}

}  // namespace bpmax
