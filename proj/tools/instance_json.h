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

#ifndef BPMAX_TOOLS_INSTANCE_JSON_H_
#define BPMAX_TOOLS_INSTANCE_JSON_H_

#include <string>
#include <string_view>

#include "bpmax/constraints.h"
#include "bpmax/element_set.h"
#include "bpmax/set_function.h"
#include "json.hpp"

namespace bpmax::cli {

// Instance document:
//   {"n": int, "f": {"family": str, ...}, "g": {"family": str, ...},
//    "lambda": optional real in [0, 1]}
// A missing f or g is the zero function. With "lambda", h = lambda f +
// (1 - lambda) g. Malformed documents throw std::invalid_argument.
BpInstance ParseInstance(const nlohmann::json& doc);

// One family object, e.g. {"family": "exp1_g", "k": 4, "beta": 0.5}.
SetFunction ParseFamily(const nlohmann::json& node, int n);

// {"type": "cardinality", "k": ...}
// {"type": "uniform", "k": ...}
// {"type": "partition", "blocks": [[...], ...], "capacities": [...]}
// {"type": "explicit", "family": [[...], ...]}
// {"type": "intersection", "of": [...]}
Constraint ParseConstraint(const nlohmann::json& doc, int n);

// "0,2,5", "[0,2,5]" or "" (empty set).
ElementSet ParseSet(std::string_view text, int n);

// Treats `arg` as inline JSON when it starts with '{', otherwise as a path.
nlohmann::json LoadJsonArgument(const std::string& arg);

}  // namespace bpmax::cli

#endif  // BPMAX_TOOLS_INSTANCE_JSON_H_
