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

#include "bpmax/curvature.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bpmax/tolerance.h"

namespace bpmax {
namespace {

// Shared scan: ratio(v) = numerator(v) / denominator(v), with the submodular
// case using (f(v | V - v), f(v)) and the supermodular case the reverse.
template <bool kSupermodular>
CurvatureResult Curvature(const SetFunction& fn, const char* what) {
  const int n = fn.ground_size();
  const int64_t before = fn.query_count();
  const ElementSet full = ElementSet::Full(n);
  const double full_value = fn(full);

  CurvatureResult result;
  double min_ratio = 1.0;
  for (int v = 0; v < n; ++v) {
    const double singleton = fn(ElementSet{v});
    const double last_gain = full_value - fn(full.Without(v));
    const double num = kSupermodular ? singleton : last_gain;
    const double den = kSupermodular ? last_gain : singleton;
    if (den <= Tolerance(den, num) && std::abs(num) <= Tolerance(den, num)) {
      result.skipped.push_back(v);
      continue;
    }
    if (den <= 0.0 || num < -Tolerance(num, den) ||
        num > den + Tolerance(num, den)) {
      throw std::domain_error(std::string(what) + ": element " +
                              std::to_string(v) + " has ratio " +
                              std::to_string(num) + "/" + std::to_string(den) +
                              " outside [0, 1]; the oracle is not monotone " +
                              (kSupermodular ? "supermodular" : "submodular"));
    }
    const double ratio = std::clamp(num / den, 0.0, 1.0);
    if (result.argmin < 0 || ratio < min_ratio) {
      min_ratio = ratio;
      result.argmin = v;
    }
  }
  result.value = result.argmin < 0 ? 0.0 : 1.0 - min_ratio;
  result.queries = fn.query_count() - before;
  return result;
}

}  // namespace

CurvatureResult SubmodularCurvature(const SetFunction& f) {
  return Curvature<false>(f, "SubmodularCurvature");
}

CurvatureResult SupermodularCurvature(const SetFunction& g) {
  return Curvature<true>(g, "SupermodularCurvature");
}

CurvatureReport AnalyzeCurvature(const BpInstance& h) {
  CurvatureResult f = SubmodularCurvature(h.f());
  CurvatureResult g = SupermodularCurvature(h.g());
  return {f.value, g.value, f.queries + g.queries, std::move(f.skipped),
          std::move(g.skipped)};
}

}  // namespace bpmax
