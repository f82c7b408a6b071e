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

#include "experiment.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bpmax/bounds.h"
#include "bpmax/constraints.h"
#include "bpmax/curvature.h"
#include "bpmax/functions.h"
#include "bpmax/tolerance.h"

namespace bpmax::cli {
namespace {

// Curvatures of the normalized instance must match the unscaled ones to
// this absolute tolerance.
constexpr double kScaleInvarianceTolerance = 1e-12;

void ValidateConfig(const ExperimentConfig& config) {
  if (config.k < 1 || config.n != 2 * config.k) {
    throw std::invalid_argument("experiment families need n = 2k with k >= 1");
  }
  if (!(config.beta_max >= 0.0 && config.beta_max < 1.0)) {
    throw std::invalid_argument("beta_max must lie in [0, 1)");
  }
  if (!config.run_greedy && !config.run_semigrad) {
    throw std::invalid_argument("no algorithm selected");
  }
  RequireExhaustive(config.n, kMaxExhaustiveSize, "experiment");
  const double estimate = EstimateExperimentEvaluations(config);
  if (estimate > kMaxExperimentEvaluations) {
    std::ostringstream message;
    message << "experiment needs about " << estimate
            << " subset evaluations (limit " << kMaxExperimentEvaluations
            << "); use a coarser grid or a smaller n";
    throw ScaleLimitError(message.str());
  }
}

std::string FormatReal(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", x);
  return buffer;
}

}  // namespace

ExperimentFamily ParseExperimentFamily(const std::string& name) {
  if (name == "exp1") return ExperimentFamily::kExp1;
  if (name == "exp2") return ExperimentFamily::kExp2;
  throw std::invalid_argument("unknown experiment family '" + name + "'");
}

std::vector<double> GridValues(double step, double max) {
  if (!(step > 0.0 && step <= 1.0)) {
    throw std::invalid_argument("grid step must lie in (0, 1]");
  }
  const double count = std::round(1.0 / step);
  if (std::abs(count * step - 1.0) > 1e-9) {
    throw std::invalid_argument("grid step must divide 1");
  }
  std::vector<double> values;
  for (int i = 0; i <= static_cast<int>(count); ++i) {
    const double x = i / count;
    if (x > max + 1e-12) break;
    values.push_back(x);
  }
  return values;
}

double EstimateExperimentEvaluations(const ExperimentConfig& config) {
  const double alphas = GridValues(config.grid_step).size();
  const double betas = GridValues(config.grid_step, config.beta_max).size();
  const double lambdas = alphas;
  return alphas * betas * lambdas * std::ldexp(1.0, config.n);
}

GridCellResult RunCell(const ExperimentConfig& config, double alpha,
                       double beta) {
  const int n = config.n;
  const int k = config.k;
  const bool exp1 = config.family == ExperimentFamily::kExp1;
  const SetFunction f = exp1 ? MakeExp1F(n, k, alpha) : MakeExp2F(n, k, alpha);
  const SetFunction g = exp1 ? MakeExp1G(n, k, beta) : MakeExp2G(n, k, beta);
  const Constraint constraint = Constraint::Cardinality(n, k);
  const BpInstance base(f, g);

  GridCellResult cell;
  cell.alpha = alpha;
  cell.beta = beta;
  cell.kappa_f = SubmodularCurvature(f).value;
  cell.kappa_g = SupermodularCurvature(g).value;
  cell.bound = BoundCardinality(cell.kappa_f, cell.kappa_g);
  cell.greedy_ratio = std::numeric_limits<double>::quiet_NaN();
  cell.semigrad_ratio = std::numeric_limits<double>::quiet_NaN();

  bool first = true;
  for (double lambda : GridValues(config.grid_step)) {
    const BpInstance mixed = base.Scaled(lambda, 1.0 - lambda);
    const ExactResult exact = ExactBruteforce(mixed, constraint);
    double greedy = 1.0;
    double semigrad = 1.0;
    double opt = 1.0;
    if (exact.opt_value > 0.0) {
      const double scale = 1.0 / exact.opt_value;
      const BpInstance h = base.Scaled(lambda * scale, (1.0 - lambda) * scale);
      opt = h(exact.optimal_set);
      if (std::abs(opt - 1.0) > kRelativeTolerance) {
        throw std::logic_error("normalized optimum is " + std::to_string(opt));
      }
      if (lambda > 0.0 && std::abs(SubmodularCurvature(h.f()).value -
                                   cell.kappa_f) > kScaleInvarianceTolerance) {
        throw std::logic_error("kappa_f changed under normalization");
      }
      if (lambda < 1.0 && std::abs(SupermodularCurvature(h.g()).value -
                                   cell.kappa_g) > kScaleInvarianceTolerance) {
        throw std::logic_error("kappa_g changed under normalization");
      }
      if (config.run_greedy) {
        greedy = GreedMax(h, constraint).value / opt;
      }
      if (config.run_semigrad) {
        semigrad =
            SemiGrad(h, constraint, ElementSet(), config.semigrad_variant)
                .value /
            opt;
      }
    }
    const double tracked = config.run_greedy ? greedy : semigrad;
    const double worst_tracked =
        config.run_greedy ? cell.greedy_ratio : cell.semigrad_ratio;
    if (first || tracked < worst_tracked) {
      cell.lambda_worst = lambda;
      cell.opt = opt;
    }
    if (config.run_greedy && (first || greedy < cell.greedy_ratio)) {
      cell.greedy_ratio = greedy;
    }
    if (config.run_semigrad && (first || semigrad < cell.semigrad_ratio)) {
      cell.semigrad_ratio = semigrad;
    }
    first = false;
  }
  return cell;
}

std::vector<GridCellResult> RunExperiment(const ExperimentConfig& config) {
  ValidateConfig(config);
  std::vector<GridCellResult> results;
  for (double alpha : GridValues(config.grid_step)) {
    for (double beta : GridValues(config.grid_step, config.beta_max)) {
      results.push_back(RunCell(config, alpha, beta));
    }
  }
  return results;
}

std::string FormatCsv(const std::vector<GridCellResult>& results) {
  if (results.empty()) throw std::invalid_argument("no grid cells to emit");
  std::string out = std::string(kCsvHeader) + "\n";
  for (const GridCellResult& r : results) {
    out += FormatReal(r.alpha) + ',' + FormatReal(r.beta) + ',' +
           FormatReal(r.lambda_worst) + ',' + FormatReal(r.kappa_f) + ',' +
           FormatReal(r.kappa_g) + ',' + FormatReal(r.greedy_ratio) + ',' +
           FormatReal(r.semigrad_ratio) + ',' + FormatReal(r.bound) + '\n';
  }
  return out;
}

void WriteCsv(const std::vector<GridCellResult>& results,
              const std::string& path) {
  if (results.empty()) throw std::invalid_argument("no results to write");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << FormatCsv(results);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::vector<GridCellResult> ReadCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("'" + path + "' lacks the experiment header");
  }
  std::vector<GridCellResult> results;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string field;
    std::vector<double> values;
    while (std::getline(fields, field, ',')) values.push_back(std::stod(field));
    if (values.size() != 8) {
      throw std::invalid_argument("malformed row '" + line + "'");
    }
    GridCellResult r;
    r.alpha = values[0];
    r.beta = values[1];
    r.lambda_worst = values[2];
    r.kappa_f = values[3];
    r.kappa_g = values[4];
    r.greedy_ratio = values[5];
    r.semigrad_ratio = values[6];
    r.bound = values[7];
    results.push_back(r);
  }
  return results;
}

}  // namespace bpmax::cli
