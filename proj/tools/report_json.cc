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

#include "report_json.h"

namespace bpmax::cli {

using nlohmann::json;

json ToJson(ElementSet s) { return json(s.Ids()); }

json ToJson(const CurvatureReport& report) {
  return {
      {"kappa_f", report.kappa_f},
      {"kappa_g", report.kappa_g},
      {"queries_used", report.queries_used},
      {"skipped_elements", {{"f", report.skipped_f}, {"g", report.skipped_g}}},
  };
}

json ToJson(const DiagnosticsReport& report) {
  const auto& gamma = report.gamma;
  const auto& alpha = report.generalized_alpha;
  const auto& c = report.joint_c;
  return {
      {"gamma", gamma.value},
      {"gamma_witness",
       {{"L", ToJson(gamma.context)}, {"S", ToJson(gamma.added)}}},
      {"generalized_alpha", alpha.value},
      {"generalized_alpha_witness",
       {{"S", ToJson(alpha.s)},
        {"omega", ToJson(alpha.omega)},
        {"v", alpha.v}}},
      {"joint_c", c.value},
      {"joint_c_witness",
       {{"j", c.j},
        {"A", ToJson(c.numerator_context)},
        {"B", ToJson(c.denominator_context)}}},
  };
}

json ToJson(const SolveTrace& trace) {
  return {
      {"algorithm", trace.algorithm},
      {"set", ToJson(trace.chosen_set)},
      {"value", trace.value},
      {"step_gains", trace.step_gains},
      {"iterations", trace.iterations},
      {"oracle_queries", trace.oracle_queries},
  };
}

}  // namespace bpmax::cli
