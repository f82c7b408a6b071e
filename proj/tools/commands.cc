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

#include "commands.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "CLI11.hpp"
#include "bpmax/bounds.h"
#include "bpmax/curvature.h"
#include "bpmax/diagnostics.h"
#include "bpmax/solvers.h"
#include "bpmax/tolerance.h"
#include "experiment.h"
#include "instance_json.h"
#include "report_json.h"

namespace bpmax::cli {
namespace {

using nlohmann::json;

struct AnalyzeOptions {
  std::string instance;
  std::vector<int> p{1};
  int k = 0;
  bool diagnostics = false;
};

struct SolveOptions {
  std::string instance;
  std::string constraint;
  std::string algorithm = "greedy";
  std::string init;
  std::string variant = "grad2";
  int max_iterations = kDefaultMaxIterations;
};

struct ExperimentOptions {
  std::string family;
  int n = 0;
  int k = 0;
  double grid_step = 0.1;
  double beta_max = 0.99;
  std::string algorithms = "greedy,semigrad";
  std::string variant = "grad2";
  std::string out;
};

json Analyze(const AnalyzeOptions& options) {
  const BpInstance h = ParseInstance(LoadJsonArgument(options.instance));
  const CurvatureReport report = AnalyzeCurvature(h);
  const double kf = report.kappa_f;
  const double kg = report.kappa_g;

  json doc = ToJson(report);
  doc["n"] = h.ground_size();
  doc["bound_cardinality"] = BoundCardinality(kf, kg);
  doc["bound_weak_cardinality"] = BoundWeakCardinality(kf, kg);
  if (options.k > 0) {
    doc["bound_cardinality_finite_k"] = {
        {"k", options.k},
        {"value", BoundCardinalityFiniteK(kf, kg, options.k)}};
  }
  doc["bound_matroids"] = json::array();
  doc["hardness_matroids"] = json::array();
  for (int p : options.p) {
    doc["bound_matroids"].push_back(
        {{"p", p}, {"value", BoundMatroids(kf, kg, p)}});
    const HardnessEstimate hard = HardnessMatroids(kg, p);
    doc["hardness_matroids"].push_back(
        {{"p", p},
         {"value", hard.value},
         {"constant_unspecified", hard.constant_unspecified},
         {"note", hard.note}});
  }
  doc["hardness_cardinality"] = HardnessCardinality(kg);
  if (options.diagnostics) doc["diagnostics"] = ToJson(Diagnose(h));
  return doc;
}

json Solve(const SolveOptions& options) {
  const BpInstance h = ParseInstance(LoadJsonArgument(options.instance));
  const int n = h.ground_size();
  const Constraint c = ParseConstraint(LoadJsonArgument(options.constraint), n);
  if (options.algorithm == "greedy") return ToJson(GreedMax(h, c));
  if (options.algorithm == "semigrad") {
    return ToJson(SemiGrad(h, c, ParseSet(options.init, n),
                           ParseVariant(options.variant),
                           options.max_iterations));
  }
  if (options.algorithm == "exact") {
    const int64_t before = h.query_count();
    const ExactResult exact = ExactBruteforce(h, c);
    SolveTrace trace;
    trace.algorithm = "exact";
    trace.chosen_set = exact.optimal_set;
    trace.value = exact.opt_value;
    trace.order = exact.optimal_set.Ids();
    ElementSet prefix;
    double prefix_value = h(prefix);
    for (int v : trace.order) {
      prefix = prefix.With(v);
      const double next = h(prefix);
      trace.step_gains.push_back(next - prefix_value);
      prefix_value = next;
    }
    trace.oracle_queries = h.query_count() - before;
    json doc = ToJson(trace);
    doc["subsets_scanned"] = exact.subsets_scanned;
    return doc;
  }
  throw std::invalid_argument("unknown algorithm '" + options.algorithm + "'");
}

json Experiment(const ExperimentOptions& options) {
  ExperimentConfig config;
  config.family = ParseExperimentFamily(options.family);
  config.n = options.n;
  config.k = options.k;
  config.grid_step = options.grid_step;
  config.beta_max = options.beta_max;
  config.run_greedy = options.algorithms.find("greedy") != std::string::npos;
  config.run_semigrad =
      options.algorithms.find("semigrad") != std::string::npos;
  config.semigrad_variant = ParseVariant(options.variant);

  const std::vector<GridCellResult> results = RunExperiment(config);
  WriteCsv(results, options.out);

  double max_greedy_gap = -std::numeric_limits<double>::infinity();
  double max_semigrad_gap = -std::numeric_limits<double>::infinity();
  int violations = 0;
  for (const GridCellResult& r : results) {
    if (config.run_greedy) {
      max_greedy_gap = std::max(max_greedy_gap, r.greedy_ratio - r.bound);
      if (r.greedy_ratio < r.bound - kRelativeTolerance) ++violations;
    }
    if (config.run_semigrad) {
      max_semigrad_gap = std::max(max_semigrad_gap, r.semigrad_ratio - r.bound);
      if (r.semigrad_ratio < r.bound - kRelativeTolerance) ++violations;
    }
  }
  json doc = {{"cells", results.size()},
              {"out", options.out},
              {"bound_violations", violations}};
  if (config.run_greedy) doc["max_greedy_gap"] = max_greedy_gap;
  if (config.run_semigrad) doc["max_semigrad_gap"] = max_semigrad_gap;
  return doc;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{
      "Greedy and semigradient maximization of submodular + "
      "supermodular set functions"};
  app.name("bpmax");
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Curvatures, guarantees and ceilings");
  analyze_cmd
      ->add_option("--instance", analyze.instance,
                   "Instance JSON file (or inline JSON)")
      ->required();
  analyze_cmd->add_option("--p", analyze.p, "Matroid counts to report")
      ->check(CLI::PositiveNumber);
  analyze_cmd
      ->add_option("--k", analyze.k,
                   "Also report the finite-k cardinality bound")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--diagnostics", analyze.diagnostics,
                        "Brute-force gamma, generalized alpha, joint c");

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run a solver");
  solve_cmd->add_option("--instance", solve.instance, "Instance JSON")
      ->required();
  solve_cmd->add_option("--constraint", solve.constraint, "Constraint JSON")
      ->required();
  solve_cmd->add_option("--algorithm", solve.algorithm)
      ->check(CLI::IsMember({"greedy", "semigrad", "exact"}));
  solve_cmd->add_option("--init", solve.init, "SemiGrad start, e.g. 0,2");
  solve_cmd->add_option("--variant", solve.variant)
      ->check(CLI::IsMember({"grad1", "grad2", "best"}));
  solve_cmd->add_option("--max-iters", solve.max_iterations)
      ->check(CLI::PositiveNumber);

  ExperimentOptions experiment;
  CLI::App* experiment_cmd =
      app.add_subcommand("experiment", "Guarantee-surface grid to CSV");
  experiment_cmd->add_option("--family", experiment.family)
      ->required()
      ->check(CLI::IsMember({"exp1", "exp2"}));
  experiment_cmd->add_option("--n", experiment.n)->required();
  experiment_cmd->add_option("--k", experiment.k)->required();
  experiment_cmd->add_option("--grid-step", experiment.grid_step);
  experiment_cmd->add_option("--beta-max", experiment.beta_max);
  experiment_cmd->add_option("--algorithms", experiment.algorithms,
                             "Comma list of greedy, semigrad");
  experiment_cmd->add_option("--variant", experiment.variant)
      ->check(CLI::IsMember({"grad1", "grad2", "best"}));
  experiment_cmd->add_option("--out", experiment.out)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    json doc;
    if (*analyze_cmd) {
      doc = Analyze(analyze);
    } else if (*solve_cmd) {
      doc = Solve(solve);
    } else {
      doc = Experiment(experiment);
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  } catch (const ScaleLimitError& e) {
    err << "bpmax: " << e.what() << '\n';
    return kExitScaleRefusal;
  } catch (const nlohmann::json::exception& e) {
    err << "bpmax: malformed JSON: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "bpmax: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "bpmax: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "bpmax: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    err << "bpmax: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace bpmax::cli
