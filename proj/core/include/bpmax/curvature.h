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

#ifndef BPMAX_CURVATURE_H_
#define BPMAX_CURVATURE_H_

#include <cstdint>
#include <vector>

#include "bpmax/set_function.h"

namespace bpmax {

struct CurvatureResult {
  double value = 0.0;
  int64_t queries = 0;
  // Elements whose ratio denominator is zero; they do not take part in the
  // minimization.
  std::vector<int> skipped;
  // Element attaining the minimum ratio, -1 when every element was skipped.
  int argmin = -1;
};

// kappa_f = 1 - min_v f(v | V - v) / f(v) over v with f(v) > 0. Uses at most
// 2n + 1 queries. Throws std::domain_error when a ratio leaves [0, 1] beyond
// tolerance, which means f is not monotone submodular.
CurvatureResult SubmodularCurvature(const SetFunction& f);

// kappa^g = 1 - min_v g(v) / g(v | V - v) over v with g(v | V - v) > 0. Same
// budget and error contract, mirrored for supermodular g.
CurvatureResult SupermodularCurvature(const SetFunction& g);

struct CurvatureReport {
  double kappa_f = 0.0;
  double kappa_g = 0.0;
  int64_t queries_used = 0;
  std::vector<int> skipped_f;
  std::vector<int> skipped_g;
};

CurvatureReport AnalyzeCurvature(const BpInstance& h);

}  // namespace bpmax

#endif  // BPMAX_CURVATURE_H_
