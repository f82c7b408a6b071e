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

#ifndef BPMAX_BPMAX_H_
#define BPMAX_BPMAX_H_

#include "bpmax/bounds.h"
#include "bpmax/constraints.h"
#include "bpmax/curvature.h"
#include "bpmax/diagnostics.h"
#include "bpmax/element_set.h"
#include "bpmax/functions.h"
#include "bpmax/set_function.h"
#include "bpmax/solvers.h"
#include "bpmax/tolerance.h"

#endif  // BPMAX_BPMAX_H_
