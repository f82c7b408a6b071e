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

#include "bpmax/diagnostics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "bpmax/curvature.h"
#include "bpmax/tolerance.h"

namespace bpmax {
namespace {

double MaxAbs(const std::vector<double>& table) {
  double scale = 0.0;
  for (double x : table) scale = std::max(scale, std::abs(x));
  return scale;
}

// Comparison slack: the library tolerance, widened to 1e-9 of the function's
// magnitude so that near-zero gains of a large function compare sensibly.
double Slack(double a, double b, double scale) {
  return std::max(Tolerance(a, b), kRelativeTolerance * scale);
}

std::optional<StructureViolation> VerifyReturns(const SetFunction& f,
                                                bool diminishing) {
  const int n = f.ground_size();
  RequireExhaustive(n, kMaxStructureVerifySize,
                    diminishing ? "VerifySubmodular" : "VerifySupermodular");
  const std::vector<double> table = Tabulate(f);
  const double scale = MaxAbs(table);
  const ElementSet full = ElementSet::Full(n);
  for (uint64_t bits = 0; bits < table.size(); ++bits) {
    const ElementSet x = ElementSet::FromBits(bits);
    const ElementSet outside = full - x;
    std::optional<StructureViolation> found;
    outside.ForEach([&](int v) {
      if (found) return;
      const double gain = table[x.With(v).bits()] - table[bits];
      outside.Without(v).ForEach([&](int w) {
        if (found) return;
        const ElementSet xw = x.With(w);
        const double later = table[xw.With(v).bits()] - table[xw.bits()];
        const double tol = Slack(gain, later, scale);
        const bool violated =
            diminishing ? gain < later - tol : gain > later + tol;
        if (violated) {
          found = StructureViolation{
              diminishing ? StructureViolation::Property::kSubmodular
                          : StructureViolation::Property::kSupermodular,
              x,
              v,
              w,
              gain,
              later};
        }
      });
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

std::string StructureViolation::Describe() const {
  std::ostringstream out;
  switch (property) {
    case Property::kNormalized:
      out << "value at the empty set is " << lhs;
      break;
    case Property::kMonotone:
      out << "gain of " << v << " at " << base.ToString() << " is " << lhs;
      break;
    case Property::kSubmodular:
    case Property::kSupermodular:
      out << "gain of " << v << " at " << base.ToString() << " is " << lhs
          << " but at " << base.With(w).ToString() << " is " << rhs;
      break;
  }
  return out.str();
}

std::optional<StructureViolation> VerifySubmodular(const SetFunction& f) {
  return VerifyReturns(f, true);
}

std::optional<StructureViolation> VerifySupermodular(const SetFunction& f) {
  return VerifyReturns(f, false);
}

std::optional<StructureViolation> VerifyMonotoneNormalized(
    const SetFunction& f) {
  const int n = f.ground_size();
  RequireExhaustive(n, kMaxStructureVerifySize, "VerifyMonotoneNormalized");
  const std::vector<double> table = Tabulate(f);
  const double scale = MaxAbs(table);
  if (std::abs(table[0]) > Slack(table[0], 0.0, scale)) {
    return StructureViolation{StructureViolation::Property::kNormalized,
                              ElementSet(),
                              -1,
                              -1,
                              table[0],
                              0.0};
  }
  const ElementSet full = ElementSet::Full(n);
  for (uint64_t bits = 0; bits < table.size(); ++bits) {
    const ElementSet x = ElementSet::FromBits(bits);
    std::optional<StructureViolation> found;
    (full - x).ForEach([&](int v) {
      const double gain = table[x.With(v).bits()] - table[bits];
      if (!found && gain < -Slack(gain, 0.0, scale)) {
        found = StructureViolation{
            StructureViolation::Property::kMonotone, x, v, -1, gain, 0.0};
      }
    });
    if (found) return found;
  }
  return std::nullopt;
}

SubmodularityRatio SubmodularityRatioBruteforce(const SetFunction& h) {
  const int n = h.ground_size();
  RequireExhaustive(n, kMaxRatioSize, "SubmodularityRatioBruteforce");
  const std::vector<double> table = Tabulate(h);
  const double scale = MaxAbs(table);
  const ElementSet full = ElementSet::Full(n);

  SubmodularityRatio best;
  bool found = false;
  std::vector<double> singleton_sum(table.size());
  std::vector<double> gain(n);
  for (uint64_t lbits = 0; lbits < table.size(); ++lbits) {
    const ElementSet context = ElementSet::FromBits(lbits);
    const ElementSet outside = full - context;
    outside.ForEach(
        [&](int x) { gain[x] = table[context.With(x).bits()] - table[lbits]; });
    // Subsets of `outside` come in increasing numeric order, so the sum for
    // S minus its lowest element is always ready.
    ForEachSubset(outside, [&](ElementSet added) {
      if (added.empty()) {
        singleton_sum[0] = 0.0;
        return;
      }
      const int lowest = std::countr_zero(added.bits());
      const double num =
          singleton_sum[added.Without(lowest).bits()] + gain[lowest];
      singleton_sum[added.bits()] = num;
      const double den = table[(context | added).bits()] - table[lbits];
      if (den <= Slack(den, num, scale)) return;
      const double ratio = num / den;
      if (!found || ratio < best.value) {
        best = {ratio, context, added};
        found = true;
      }
    });
  }
  return best;
}

GeneralizedCurvature GeneralizedCurvatureBruteforce(const SetFunction& h) {
  const int n = h.ground_size();
  RequireExhaustive(n, kMaxGeneralizedCurvatureSize,
                    "GeneralizedCurvatureBruteforce");
  const std::vector<double> table = Tabulate(h);
  const double scale = MaxAbs(table);
  const ElementSet full = ElementSet::Full(n);

  GeneralizedCurvature best;
  double min_ratio = 1.0;
  for (int v = 0; v < n; ++v) {
    const ElementSet others = full.Without(v);
    ForEachSubset(others, [&](ElementSet base) {
      const double den = table[base.With(v).bits()] - table[base.bits()];
      if (den <= Slack(den, 0.0, scale)) return;
      ForEachSubset(others - base, [&](ElementSet omega) {
        const ElementSet context = base | omega;
        const double num =
            table[context.With(v).bits()] - table[context.bits()];
        const double ratio = num / den;
        if (best.v < 0 || ratio < min_ratio) {
          min_ratio = ratio;
          best.s = base.With(v);
          best.omega = omega;
          best.v = v;
        }
      });
    });
  }
  best.value = best.v < 0 ? 0.0 : 1.0 - min_ratio;
  return best;
}

JointCurvature JointCurvatureBruteforce(const BpInstance& h) {
  const int n = h.ground_size();
  RequireExhaustive(n, kMaxJointCurvatureSize, "JointCurvatureBruteforce");
  const std::vector<double> table = Tabulate(h.Sum());
  const double scale = MaxAbs(table);
  const ElementSet full = ElementSet::Full(n);

  JointCurvature best;
  double min_ratio = 1.0;
  for (int j = 0; j < n; ++j) {
    // The minimum of h(j|A)/h(j|B) over independent A and B pairs the
    // smallest numerator with the largest (or, for a negative numerator, the
    // smallest positive) denominator.
    ElementSet min_a, max_b, min_pos_b;
    double min_num = std::numeric_limits<double>::infinity();
    double max_den = -std::numeric_limits<double>::infinity();
    double min_pos_den = std::numeric_limits<double>::infinity();
    ForEachSubset(full.Without(j), [&](ElementSet context) {
      const double gain = table[context.With(j).bits()] - table[context.bits()];
      if (gain < min_num) {
        min_num = gain;
        min_a = context;
      }
      if (gain > max_den) {
        max_den = gain;
        max_b = context;
      }
      if (gain > Slack(gain, 0.0, scale) && gain < min_pos_den) {
        min_pos_den = gain;
        min_pos_b = context;
      }
    });
    if (max_den <= Slack(max_den, 0.0, scale)) continue;
    const bool negative = min_num < 0.0;
    const double ratio = negative ? min_num / min_pos_den : min_num / max_den;
    if (best.j < 0 || ratio < min_ratio) {
      min_ratio = ratio;
      best.j = j;
      best.numerator_context = min_a;
      best.denominator_context = negative ? min_pos_b : max_b;
    }
  }
  best.value = best.j < 0 ? 0.0 : 1.0 - min_ratio;
  return best;
}

DiagnosticsReport Diagnose(const BpInstance& h) {
  const SetFunction sum = h.Sum();
  return {SubmodularityRatioBruteforce(sum),
          GeneralizedCurvatureBruteforce(sum), JointCurvatureBruteforce(h)};
}

std::string InequalityViolation::Describe() const {
  std::ostringstream out;
  out << "clause " << clause << " fails at X=" << x.ToString()
      << ", Y=" << y.ToString();
  if (v >= 0) out << ", v=" << v;
  out << ": " << lhs << " vs " << rhs;
  return out.str();
}

InequalityCheck CheckCurvatureInequalities(const BpInstance& h) {
  const int n = h.ground_size();
  RequireExhaustive(n, kMaxInequalityCheckSize, "CheckCurvatureInequalities");
  InequalityCheck check;
  check.kappa_f = SubmodularCurvature(h.f()).value;
  check.kappa_g = SupermodularCurvature(h.g()).value;
  const double keep_f = 1.0 - check.kappa_f;
  const bool bounded_g = check.kappa_g < 1.0 - kAbsoluteTolerance;
  const double inflate_g = bounded_g ? 1.0 / (1.0 - check.kappa_g) : 0.0;

  const std::vector<double> table = Tabulate(h.Sum());
  const double scale = MaxAbs(table);
  const ElementSet full = ElementSet::Full(n);
  check.min_slack.fill(std::numeric_limits<double>::infinity());

  // Records `allowed - actual` for a clause whose inequality reads
  // actual <= allowed (after moving terms), flagging the first violation.
  auto record = [&](int clause, ElementSet x, ElementSet y, int v,
                    double actual, double allowed, double lhs, double rhs) {
    const double slack = allowed - actual;
    auto& min_slack = check.min_slack[clause - 1];
    min_slack = std::min(min_slack, slack);
    ++check.cases[clause - 1];
    if (!check.violation && slack < -Slack(actual, allowed, scale)) {
      check.violation = InequalityViolation{clause, x, y, v, lhs, rhs};
    }
  };

  for (uint64_t ybits = 0; ybits < table.size(); ++ybits) {
    const ElementSet y = ElementSet::FromBits(ybits);
    const ElementSet outside = full - y;
    std::vector<double> gain_y(n, 0.0);
    outside.ForEach(
        [&](int v) { gain_y[v] = table[y.With(v).bits()] - table[ybits]; });

    ForEachSubset(y, [&](ElementSet x) {
      outside.ForEach([&](int v) {
        const double gain_x = table[x.With(v).bits()] - table[x.bits()];
        const double lower = keep_f * gain_x;
        record(1, x, y, v, lower, gain_y[v], gain_y[v], lower);
        if (bounded_g) {
          const double upper = inflate_g * gain_x;
          record(2, x, y, v, gain_y[v], upper, gain_y[v], upper);
        }
      });
    });

    for (uint64_t xbits = 0; xbits < table.size(); ++xbits) {
      const ElementSet x = ElementSet::FromBits(xbits);
      const ElementSet fresh = x - y;
      if (fresh.empty()) continue;
      double singleton_sum = 0.0;
      fresh.ForEach([&](int v) { singleton_sum += gain_y[v]; });
      const double joint = table[(x | y).bits()] - table[ybits];
      const double lower = keep_f * singleton_sum;
      record(3, x, y, -1, lower, joint, joint, lower);
      if (bounded_g) {
        const double upper = inflate_g * singleton_sum;
        record(4, x, y, -1, joint, upper, joint, upper);
      }
    }
  }
  return check;
}

}  // namespace bpmax
