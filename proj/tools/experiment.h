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

#ifndef BPMAX_TOOLS_EXPERIMENT_H_
#define BPMAX_TOOLS_EXPERIMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "bpmax/solvers.h"

namespace bpmax::cli {

// Grid harness: for each (alpha, beta) cell of a family, sweep lambda over
// h = lambda f + (1 - lambda) g, normalize every h by its exhaustive optimum
// under |X| <= k, run the solvers, and keep the worst ratio over lambda.

enum class ExperimentFamily { kExp1, kExp2 };

ExperimentFamily ParseExperimentFamily(const std::string& name);

struct ExperimentConfig {
  ExperimentFamily family = ExperimentFamily::kExp1;
  int n = 12;
  int k = 6;
  double grid_step = 0.1;
  double beta_max = 0.99;
  bool run_greedy = true;
  bool run_semigrad = true;
  SemigradientVariant semigrad_variant = SemigradientVariant::kGrad2;
};

struct GridCellResult {
  double alpha = 0.0;
  double beta = 0.0;
  // Lambda at which the greedy ratio is worst (semigrad's when greedy is off).
  double lambda_worst = 0.0;
  double kappa_f = 0.0;
  double kappa_g = 0.0;
  // h at the exhaustive optimum after normalization; 1 up to rounding.
  double opt = 1.0;
  double greedy_ratio = 0.0;
  double semigrad_ratio = 0.0;
  double bound = 0.0;
};

// Estimated exhaustive-search evaluations; configurations above
// kMaxExperimentEvaluations are refused.
inline constexpr double kMaxExperimentEvaluations = 2e9;
double EstimateExperimentEvaluations(const ExperimentConfig& config);

// 0, step, 2 step, ..., 1 with values above `max` dropped. `step` must divide
// 1 (within 1e-9).
std::vector<double> GridValues(double step, double max = 1.0);

// Throws std::invalid_argument for bad configs and ScaleLimitError when the
// run would exceed the evaluation envelope. Cells come back sorted by
// (alpha, beta).
std::vector<GridCellResult> RunExperiment(const ExperimentConfig& config);

// Worst-over-lambda record for one cell.
GridCellResult RunCell(const ExperimentConfig& config, double alpha,
                       double beta);

inline constexpr const char* kCsvHeader =
    "alpha,beta,lambda_worst,kappa_f,kappa_g,greedy_ratio,semigrad_ratio,"
    "bound";

// Header plus one row per cell, reals with 9 significant digits.
std::string FormatCsv(const std::vector<GridCellResult>& results);
// Throws std::invalid_argument on empty results, std::runtime_error when the
// file cannot be written.
void WriteCsv(const std::vector<GridCellResult>& results,
              const std::string& path);
std::vector<GridCellResult> ReadCsv(const std::string& path);

}  // namespace bpmax::cli

#endif  // BPMAX_TOOLS_EXPERIMENT_H_
