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

#ifndef BPMAX_DIAGNOSTICS_H_
#define BPMAX_DIAGNOSTICS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "bpmax/element_set.h"
#include "bpmax/set_function.h"

namespace bpmax {

// Brute-force structure checks and curvature-like quantities. All of them
// tabulate the oracle once (2^n queries) and scan the table; each is gated at
// a small n and throws ScaleLimitError beyond it.

inline constexpr int kMaxStructureVerifySize = 12;
inline constexpr int kMaxRatioSize = 12;
inline constexpr int kMaxGeneralizedCurvatureSize = 10;
inline constexpr int kMaxJointCurvatureSize = 10;
inline constexpr int kMaxInequalityCheckSize = 8;

// A failed structural property.
//   kNormalized:   value(empty) = `lhs` != 0.
//   kMonotone:     lhs = f(v | base) < 0.
//   kSubmodular:   lhs = f(v | base) < rhs = f(v | base + w).
//   kSupermodular: lhs = f(v | base) > rhs = f(v | base + w).
struct StructureViolation {
  enum class Property { kNormalized, kMonotone, kSubmodular, kSupermodular };
  Property property;
  ElementSet base;
  int v = -1;
  int w = -1;
  double lhs = 0.0;
  double rhs = 0.0;

  std::string Describe() const;
};

// Diminishing returns f(v | X) >= f(v | X + w) over all X and v, w not in X,
// up to 1e-9 times the largest |f| value.
std::optional<StructureViolation> VerifySubmodular(const SetFunction& f);
// Increasing returns, the reverse inequality.
std::optional<StructureViolation> VerifySupermodular(const SetFunction& f);
// f(empty) = 0 and f(v | X) >= 0 everywhere.
std::optional<StructureViolation> VerifyMonotoneNormalized(
    const SetFunction& f);

// gamma = min over disjoint (L, S), S nonempty, of
// sum_{x in S} h(x | L) / h(S | L). Pairs whose denominator is zero (or
// negative) are skipped. 1 when no pair qualifies.
struct SubmodularityRatio {
  double value = 1.0;
  ElementSet context;  // L
  ElementSet added;    // S
};
SubmodularityRatio SubmodularityRatioBruteforce(const SetFunction& h);

// Smallest alpha with h(v | S - v + Omega) >= (1 - alpha) h(v | S - v) for
// all S, Omega and v in S - Omega, skipping pairs with h(v | S - v) = 0.
struct GeneralizedCurvature {
  double value = 0.0;
  ElementSet s;
  ElementSet omega;
  int v = -1;
};
GeneralizedCurvature GeneralizedCurvatureBruteforce(const SetFunction& h);

// c with 1 - c = min_j min_{A, B subset of V - j} h(j | A) / h(j | B),
// skipping zero denominators. 0 when no pair qualifies.
struct JointCurvature {
  double value = 0.0;
  int j = -1;
  ElementSet numerator_context;    // A
  ElementSet denominator_context;  // B
};
JointCurvature JointCurvatureBruteforce(const BpInstance& h);

struct DiagnosticsReport {
  SubmodularityRatio gamma;
  GeneralizedCurvature generalized_alpha;
  JointCurvature joint_c;
};
// All three quantities for h = f + g; n <= 10.
DiagnosticsReport Diagnose(const BpInstance& h);

// The four marginal-gain inequalities implied by the curvatures:
//   (1) h(v|Y) >= (1 - kf) h(v|X)             X subset Y, v not in Y
//   (2) h(v|Y) <= h(v|X) / (1 - kg)           X subset Y, v not in Y
//   (3) h(X|Y) >= (1 - kf) sum_{v in X-Y} h(v|Y)     all X, Y
//   (4) h(X|Y) <= sum_{v in X-Y} h(v|Y) / (1 - kg)   all X, Y
// Clauses 2 and 4 are skipped when kg = 1.
struct InequalityViolation {
  int clause;
  ElementSet x;
  ElementSet y;
  int v = -1;  // -1 for clauses 3 and 4
  double lhs;
  double rhs;

  std::string Describe() const;
};

struct InequalityCheck {
  double kappa_f = 0.0;
  double kappa_g = 0.0;
  std::optional<InequalityViolation> violation;
  // Smallest (allowed side - checked side) seen per clause; 0 means tight.
  std::array<double, 4> min_slack{};
  std::array<int64_t, 4> cases{};
};
InequalityCheck CheckCurvatureInequalities(const BpInstance& h);

}  // namespace bpmax

#endif  // BPMAX_DIAGNOSTICS_H_
