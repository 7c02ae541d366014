// Copyright 2026 The Authors.
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

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "robustkit/bounds.h"
#include "robustkit/experiments.h"
#include "robustkit/instance_io.h"
#include "robustkit/scenarios.h"

namespace robustkit::cli {
namespace {

std::string Num(double v) { return FormatSignificant(v, 6); }

std::string Join(std::span<const double> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += Num(values[i]);
  }
  return s;
}

std::string Join(std::span<const int> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(values[i]);
  }
  return s;
}

int DefaultWorkers() {
  if (const char* env = std::getenv("ROBUSTKIT_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024)
      return static_cast<int>(v);
  }
  return 1;
}

struct GenOptions {
  int n = 0;
  int p = 0;
  int num_scenarios = 0;
  int count = 1;
  uint64_t seed = 1;
  std::string out_dir;
};

struct ScenarioOptions {
  std::string in;
  std::string method;
  int k = 1;
  bool with_maxmin = false;
  bool with_exact = false;
  long long exact_budget = kDefaultExactBudget;
};

struct ExperimentOptions {
  std::string grid_spec;
  uint64_t seed = 1;
  std::string out;
  int count = 1000;
  int workers = 1;
  int max_k = 3;
  bool no_opt = false;
  bool no_maxmin = false;
  long long opt_budget = kDefaultExactBudget;
  bool timings = false;
  std::string dump_dir;
};

int CmdGen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  if (o.p > o.n) {
    err << "error: --p must not exceed --n\n";
    return kExitUsageError;
  }
  std::error_code ec;
  std::filesystem::create_directories(o.out_dir, ec);
  if (ec) {
    err << "error: cannot create " << o.out_dir << ": " << ec.message() << "\n";
    return kExitDomainError;
  }
  const GridCell cell{o.n, o.p, o.num_scenarios};
  for (int id = 0; id < o.count; ++id) {
    const Instance instance = GenerateInstance(o.n, o.p, o.num_scenarios,
                                               InstanceSeed(o.seed, cell, id));
    const auto path = std::filesystem::path(o.out_dir) /
                      ("inst_" + std::to_string(id) + ".txt");
    std::ofstream file(path, std::ios::binary);
    file << SerializeInstance(instance.uncertainty, instance.problem);
    file.close();
    if (!file) {
      err << "error: cannot write " << path.string() << "\n";
      return kExitDomainError;
    }
    out << "file=" << path.string() << "\n";
  }
  return kExitSuccess;
}

int CmdConstruct(const ScenarioOptions& o, std::ostream& out) {
  const Instance instance = ReadInstanceFile(o.in);
  const UncertaintySet& u = instance.uncertainty;
  const ProblemSpec& spec = instance.problem;
  std::ostringstream report;
  report << "method=" << o.method << "\n";
  if (o.method == "midpoint") {
    if (!ValidateK(spec, o.k)) {
      throw DomainError("k = " + std::to_string(o.k) +
                        " exceeds the minimum solution size " +
                        std::to_string(MinSolutionCardinality(spec)));
    }
    const Scenario c = MidpointScenario(u);
    report << "k=" << o.k << "\n"
           << "apriori=" << Num(FixedScenarioGuarantee(u, c.values(), o.k))
           << "\n"
           << "scenario=" << Join(c.values()) << "\n"
           << "lambda="
           << Join(ConvexWeights::Uniform(u.num_scenarios()).lambda()) << "\n";
  } else if (o.method == "worstcase") {
    const Scenario c = WorstCaseScenario(u);
    report << "apriori=" << Num(WorstCaseAprioriBound(u, spec)) << "\n"
           << "scenario=" << Join(c.values()) << "\n";
  } else {
    const LpScenario lp = ConstructLpScenario(u, spec, o.k);
    report << "k=" << o.k << "\n"
           << "t_star=" << Num(lp.t_star) << "\n"
           << "apriori=" << Num(1.0 / lp.t_star) << "\n"
           << "scenario=" << Join(lp.scenario.values()) << "\n"
           << "lambda=" << Join(lp.weights.lambda()) << "\n"
           << "row_generation=" << (lp.used_row_generation ? "true" : "false")
           << "\n";
  }
  out << report.str();
  return kExitSuccess;
}

int CmdBounds(const ScenarioOptions& o, std::ostream& out) {
  const Instance instance = ReadInstanceFile(o.in);
  const UncertaintySet& u = instance.uncertainty;
  const ProblemSpec& spec = instance.problem;
  BoundReport report;
  if (o.method == "midpoint") {
    report = EvaluateMidpoint(u, spec, o.k);
  } else if (o.method == "worstcase") {
    report = EvaluateWorstCase(u, spec);
  } else {
    report = EvaluateLpScenario(u, spec, o.k);
  }
  std::optional<double> maxmin;
  if (o.with_maxmin) maxmin = MaxMinLowerBound(u, spec);
  std::optional<ExactResult> exact;
  if (o.with_exact) {
    ExactOptions options;
    options.budget = o.exact_budget;
    exact = ExactMinMax(u, spec, options);
  }

  out << "method=" << o.method << "\n";
  if (report.k_used) out << "k=" << *report.k_used << "\n";
  out << "apriori=" << Num(report.apriori) << "\n"
      << "solution=" << Join(report.solution.selected()) << "\n"
      << "lb=" << (report.lb ? Num(*report.lb) : "na") << "\n"
      << "ub=" << Num(report.ub) << "\n"
      << "aposteriori="
      << (report.aposteriori ? Num(*report.aposteriori) : "na") << "\n";
  if (maxmin) out << "maxmin_lb=" << Num(*maxmin) << "\n";
  if (exact) {
    out << "opt=" << Num(exact->opt) << "\n"
        << "opt_solution=" << Join(exact->solution.selected()) << "\n";
  }
  return kExitSuccess;
}

int CmdExperiment(const ExperimentOptions& o, std::ostream& out,
                  std::ostream& err) {
  std::string spec_text = o.grid_spec;
  if (std::filesystem::is_regular_file(o.grid_spec)) {
    std::ifstream in(o.grid_spec, std::ios::binary);
    spec_text.assign(std::istreambuf_iterator<char>(in), {});
  }
  ExperimentGrid grid;
  try {
    grid.cells = ParseGridSpec(spec_text);
  } catch (const ParseError& e) {
    err << "usage error: --grid-spec: " << e.what() << "\n";
    return kExitUsageError;
  }
  grid.instances_per_cell = o.count;
  grid.master_seed = o.seed;
  grid.workers = o.workers;
  grid.max_k = o.max_k;
  grid.compute_opt = !o.no_opt;
  grid.compute_maxmin = !o.no_maxmin;
  grid.opt_budget = o.opt_budget;
  grid.record_runtime = o.timings;
  if (!o.dump_dir.empty()) grid.dump_dir = o.dump_dir;

  const GridResults results =
      RunGrid(grid, [&](int index, const CellSummary& s) {
        err << "cell " << index + 1 << "/" << grid.cells.size()
            << " n=" << s.cell.n << " p=" << s.cell.p
            << " N=" << s.cell.num_scenarios << ": " << s.succeeded << " ok, "
            << s.failed << " failed" << (s.opt_skipped ? ", OPT skipped" : "")
            << "\n";
        if (!s.first_failure.empty())
          err << "  first failure: " << s.first_failure << "\n";
      });

  std::ofstream file(o.out, std::ios::binary);
  file << EmitCsv(results.rows);
  file.close();
  if (!file) {
    err << "error: cannot write " << o.out << "\n";
    return kExitDomainError;
  }
  out << "csv=" << o.out << "\n"
      << "cells=" << results.cells.size() << "\n"
      << "rows=" << results.rows.size() << "\n";
  int failed_cells = 0;
  for (const CellSummary& s : results.cells) {
    if (s.succeeded == 0) ++failed_cells;
  }
  out << "failed_cells=" << failed_cells << "\n";
  if (!results.cells.empty() &&
      failed_cells == static_cast<int>(results.cells.size())) {
    return kExitDomainError;
  }
  return kExitSuccess;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Representative scenarios and approximation bounds for min-max problems",
      "robustkit"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd =
      app.add_subcommand("gen", "Generate random selection instances");
  gen_cmd->add_option("--n", gen.n, "Number of items")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--p", gen.p, "Items to select")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--N", gen.num_scenarios, "Number of scenarios")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--count", gen.count, "Instances to write")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "Master seed");
  gen_cmd->add_option("--out-dir", gen.out_dir, "Output directory")->required();

  ScenarioOptions construct;
  auto* construct_cmd =
      app.add_subcommand("construct", "Build a representative scenario");
  ScenarioOptions bounds;
  auto* bounds_cmd =
      app.add_subcommand("bounds", "Evaluate bounds for a scenario method");
  for (auto [cmd, opts] :
       {std::pair{construct_cmd, &construct}, std::pair{bounds_cmd, &bounds}}) {
    cmd->add_option("--in", opts->in, "Instance file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--method", opts->method, "midpoint | worstcase | lp")
        ->required()
        ->check(CLI::IsMember({"midpoint", "worstcase", "lp"}));
    cmd->add_option("--k", opts->k, "Subset size")->check(CLI::PositiveNumber);
  }
  bounds_cmd->add_flag("--with-maxmin", bounds.with_maxmin,
                       "Also solve the max-min LP");
  bounds_cmd->add_flag("--with-exact", bounds.with_exact,
                       "Also enumerate the exact optimum");
  bounds_cmd
      ->add_option("--exact-budget", bounds.exact_budget, "Enumeration budget")
      ->check(CLI::PositiveNumber);

  ExperimentOptions experiment;
  experiment.workers = DefaultWorkers();
  auto* experiment_cmd =
      app.add_subcommand("experiment", "Run the randomized experiment grid");
  experiment_cmd
      ->add_option("--grid-spec", experiment.grid_spec,
                   "File, 'standard', or inline cells 'n,p,N;n,p,N'")
      ->required();
  experiment_cmd->add_option("--seed", experiment.seed, "Master seed");
  experiment_cmd->add_option("--out", experiment.out, "Output CSV")->required();
  experiment_cmd->add_option("--count", experiment.count, "Instances per cell")
      ->check(CLI::PositiveNumber);
  experiment_cmd->add_option("--workers", experiment.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  experiment_cmd->add_option("--max-k", experiment.max_k, "Largest subset size")
      ->check(CLI::PositiveNumber);
  experiment_cmd->add_flag("--no-opt", experiment.no_opt, "Skip exact OPT");
  experiment_cmd->add_flag("--no-maxmin", experiment.no_maxmin,
                           "Skip the max-min LP");
  experiment_cmd
      ->add_option("--opt-budget", experiment.opt_budget,
                   "Largest C(n,p) for OPT")
      ->check(CLI::PositiveNumber);
  experiment_cmd->add_flag("--timings", experiment.timings,
                           "Fill the runtime_ms column");
  experiment_cmd->add_option("--dump-dir", experiment.dump_dir,
                             "Write every instance here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsageError;
  }

  try {
    if (gen_cmd->parsed()) return CmdGen(gen, out, err);
    if (construct_cmd->parsed()) return CmdConstruct(construct, out);
    if (bounds_cmd->parsed()) return CmdBounds(bounds, out);
    return CmdExperiment(experiment, out, err);
  } catch (const BudgetExceededError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitBudgetRefusal;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace robustkit::cli
