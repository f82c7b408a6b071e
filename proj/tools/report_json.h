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

#ifndef BPMAX_TOOLS_REPORT_JSON_H_
#define BPMAX_TOOLS_REPORT_JSON_H_

#include "bpmax/curvature.h"
#include "bpmax/diagnostics.h"
#include "bpmax/solvers.h"
#include "json.hpp"

namespace bpmax::cli {

// Sorted id array.
nlohmann::json ToJson(ElementSet s);

// {"kappa_f", "kappa_g", "queries_used", "skipped_elements": {"f", "g"}}
nlohmann::json ToJson(const CurvatureReport& report);

// {"gamma", "generalized_alpha", "joint_c"} plus one witness object each.
nlohmann::json ToJson(const DiagnosticsReport& report);

// {"algorithm", "set", "value", "step_gains", "iterations",
//  "oracle_queries"}
nlohmann::json ToJson(const SolveTrace& trace);

}  // namespace bpmax::cli

#endif  // BPMAX_TOOLS_REPORT_JSON_H_
