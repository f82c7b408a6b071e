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

// Reference implementations used only by tests. They work on raw bitmasks
// and closed-form formulas and share no code with the library.

#ifndef BPMAX_TESTS_TESTING_ORACLES_H_
#define BPMAX_TESTS_TESTING_ORACLES_H_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace bpmax::testing {

using Mask = uint64_t;
using RawFunction = std::function<double(Mask)>;

inline int Count(Mask m) { return std::popcount(m); }
inline Mask FullMask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline Mask Bit(int v) { return Mask{1} << v; }

// Closed forms of the experiment families, written straight from the
// formulas. V1 holds ids 0..k-1.
inline double RefExp1F(int k, double alpha, Mask x) {
  const Mask v1 = FullMask(k);
  const int in_v2 = Count(x & ~v1);
  double sum = 0.0;
  for (int id = 0; id < k; ++id) {
    if (!(x & Bit(id))) continue;
    const int i = id + 1;
    double w;
    if (alpha == 0.0) {
      w = 1.0 / k;
    } else {
      w = (std::pow(1 - alpha / k, i) - std::pow(1 - alpha / k, i + 1)) / alpha;
    }
    sum += w;
  }
  return (k - alpha * in_v2) / k * sum + static_cast<double>(in_v2) / k;
}

inline double RefExp1G(int k, double beta, double eps, Mask x) {
  const Mask v1 = FullMask(k);
  const double size = Count(x);
  const double in_v1 = Count(x & v1);
  const double in_v2 = Count(x & ~v1);
  const double m = std::min({1 + in_v1, size, static_cast<double>(k)});
  const double tail = size + beta / (1 - beta) * (in_v2 - k + 1);
  return size - beta * m + eps * std::max(size, tail);
}

inline double RefExp2F(int k, double alpha, Mask x) {
  const int c = Count(x & FullMask(k));
  return c == 0 ? 0.0 : std::pow(c, alpha);
}

inline double RefExp2G(int k, double beta, Mask x) {
  const double c = Count(x & ~FullMask(k));
  return std::max(0.0, (c - beta) / (1 - beta));
}

inline std::vector<double> Table(const RawFunction& f, int n) {
  std::vector<double> t(size_t{1} << n);
  for (Mask m = 0; m < t.size(); ++m) t[m] = f(m);
  return t;
}

// Curvatures straight from the definitions over a full table.
inline double RefSubmodularCurvature(const std::vector<double>& t, int n) {
  const Mask full = FullMask(n);
  double best = std::numeric_limits<double>::infinity();
  for (int v = 0; v < n; ++v) {
    const double single = t[Bit(v)];
    if (single <= 1e-12) continue;
    best = std::min(best, (t[full] - t[full & ~Bit(v)]) / single);
  }
  return std::isinf(best) ? 0.0 : 1.0 - best;
}

inline double RefSupermodularCurvature(const std::vector<double>& t, int n) {
  const Mask full = FullMask(n);
  double best = std::numeric_limits<double>::infinity();
  for (int v = 0; v < n; ++v) {
    const double top = t[full] - t[full & ~Bit(v)];
    if (top <= 1e-12) continue;
    best = std::min(best, t[Bit(v)] / top);
  }
  return std::isinf(best) ? 0.0 : 1.0 - best;
}

// Returns true when gains never increase (sign = +1) or never decrease
// (sign = -1) with context, up to `tol`.
inline bool RefDiminishing(const std::vector<double>& t, int n, int sign,
                           double tol = 1e-9) {
  const Mask full = FullMask(n);
  for (Mask x = 0; x <= full; ++x) {
    for (int v = 0; v < n; ++v) {
      if (x & Bit(v)) continue;
      for (int w = 0; w < n; ++w) {
        if (w == v || (x & Bit(w))) continue;
        const double small = t[x | Bit(v)] - t[x];
        const double large = t[x | Bit(v) | Bit(w)] - t[x | Bit(w)];
        if (sign * (small - large) < -tol) return false;
      }
    }
  }
  return true;
}

inline bool RefMonotoneNormalized(const std::vector<double>& t, int n) {
  if (std::abs(t[0]) > 1e-12) return false;
  for (Mask x = 0; x < t.size(); ++x) {
    for (int v = 0; v < n; ++v) {
      if (!(x & Bit(v)) && t[x | Bit(v)] < t[x] - 1e-9) return false;
    }
  }
  return true;
}

// Maximum of a table over masks accepted by `feasible`.
inline double RefMax(const std::vector<double>& t,
                     const std::function<bool(Mask)>& feasible) {
  double best = -std::numeric_limits<double>::infinity();
  for (Mask m = 0; m < t.size(); ++m) {
    if (feasible(m)) best = std::max(best, t[m]);
  }
  return best;
}

// Guarantee formulas evaluated without any limit handling; callers keep
// kappa_f away from zero.
inline double RefBoundCardinality(double kf, double kg) {
  return (1.0 - std::exp(-(1.0 - kg) * kf)) / kf;
}
inline double RefBoundWeak(double kf, double kg) {
  return (1.0 - kg) / kf * (1.0 - std::exp(-kf));
}
inline double RefBoundFiniteK(double kf, double kg, int k) {
  return (1.0 - std::pow(1.0 - (1.0 - kg) * kf / k, k)) / kf;
}

}  // namespace bpmax::testing

#endif  // BPMAX_TESTS_TESTING_ORACLES_H_
