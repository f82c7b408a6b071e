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

#ifndef BPMAX_TOLERANCE_H_
#define BPMAX_TOLERANCE_H_

#include <algorithm>
#include <cmath>

namespace bpmax {

// Real comparisons across the library use a relative tolerance with an
// absolute floor.
inline constexpr double kRelativeTolerance = 1e-9;
inline constexpr double kAbsoluteTolerance = 1e-12;

inline double Tolerance(double a, double b) {
  return std::max(kAbsoluteTolerance,
                  kRelativeTolerance * std::max(std::abs(a), std::abs(b)));
}

inline bool ApproxEqual(double a, double b) {
  return std::abs(a - b) <= Tolerance(a, b);
}

// a >= b up to tolerance.
inline bool ApproxGreaterEqual(double a, double b) {
  return a >= b - Tolerance(a, b);
}

// a > b by more than the tolerance.
inline bool DefinitelyGreater(double a, double b) {
  return a > b + Tolerance(a, b);
}

inline bool ApproxZero(double a) { return std::abs(a) <= kAbsoluteTolerance; }

}  // namespace bpmax

#endif  // BPMAX_TOLERANCE_H_
