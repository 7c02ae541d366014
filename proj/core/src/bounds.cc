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

#include "robustkit/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "robustkit/lp.h"

namespace robustkit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Shared state of the exhaustive searches.
class Enumerator {
 public:
  Enumerator(const UncertaintySet& u, const ExactOptions& options)
      : u_(u), options_(options) {}

  // Records a complete solution with the given per-scenario costs.
  void Offer(std::span<const double> sums, std::vector<int> items) {
    const double value = *std::max_element(sums.begin(), sums.end());
    if (value > best_) return;
    std::sort(items.begin(), items.end());
    if (value < best_ || items < best_items_) {
      best_ = value;
      best_items_ = std::move(items);
    }
  }

  // Adds item j to `from`, writing into `to`; false if the branch is pruned.
  bool Extend(std::span<const double> from, std::span<double> to, int j) {
    ++nodes_;
    double running_max = 0.0;
    for (int i = 0; i < u_.num_scenarios(); ++i) {
      to[i] = from[i] + u_.cost(i, j);
      running_max = std::max(running_max, to[i]);
    }
    return !(options_.prune && running_max > best_);
  }

  double best() const { return best_; }
  std::vector<int>& best_items() { return best_items_; }
  long long nodes() const { return nodes_; }

 private:
  const UncertaintySet& u_;
  const ExactOptions& options_;
  double best_ = kInf;
  std::vector<int> best_items_;
  long long nodes_ = 0;
};

ExactResult ExactSelection(const UncertaintySet& u,
                           const SelectionProblem& problem,
                           const ExactOptions& options) {
  const long long count = BinomialCoefficient(problem.n, problem.p);
  if (count > options.budget) {
    throw BudgetExceededError(
        "exact enumeration needs C(" + std::to_string(problem.n) + ", " +
        std::to_string(problem.p) + ") = " + std::to_string(count) +
        " subsets, budget is " + std::to_string(options.budget));
  }
  const int n = problem.n;
  const int p = problem.p;
  const int num_scenarios = u.num_scenarios();

  // Cheap items first so good incumbents appear early.
  const Scenario midpoint = MidpointScenario(u);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return midpoint[a] < midpoint[b]; });

  Enumerator search(u, options);
  std::vector<double> sums(static_cast<std::size_t>(p + 1) * num_scenarios,
                           0.0);
  std::vector<int> chosen(p);
  auto level = [&](int depth) {
    return std::span<double>(
        sums.data() + static_cast<std::size_t>(depth) * num_scenarios,
        num_scenarios);
  };
  auto dfs = [&](auto&& self, int depth, int start) -> void {
    if (depth == p) {
      search.Offer(level(p), chosen);
      return;
    }
    for (int pos = start; pos <= n - (p - depth); ++pos) {
      const int item = order[pos];
      if (!search.Extend(level(depth), level(depth + 1), item)) continue;
      chosen[depth] = item;
      self(self, depth + 1, pos + 1);
    }
  };
  dfs(dfs, 0, 0);
  return ExactResult{search.best(),
                     BinarySolution(std::move(search.best_items()), n),
                     search.nodes()};
}

ExactResult ExactShortestPath(const UncertaintySet& u,
                              const ShortestPathProblem& graph,
                              const ExactOptions& options) {
  const int num_scenarios = u.num_scenarios();
  Enumerator search(u, options);
  std::vector<char> visited(graph.num_vertices(), 0);
  std::vector<int> path;
  // One sums level per path edge; simple paths have < |V| edges.
  std::vector<double> sums(
      static_cast<std::size_t>(graph.num_vertices() + 1) * num_scenarios, 0.0);
  auto level = [&](std::size_t depth) {
    return std::span<double>(sums.data() + depth * num_scenarios,
                             num_scenarios);
  };
  auto dfs = [&](auto&& self, int v) -> void {
    const std::size_t depth = path.size();
    for (int e : graph.out_edges(v)) {
      const int to = graph.edges()[e].to;
      if (visited[to]) continue;
      if (search.nodes() >= options.budget) {
        throw BudgetExceededError(
            "exact path enumeration exceeded its budget of " +
            std::to_string(options.budget) + " nodes");
      }
      if (!search.Extend(level(depth), level(depth + 1), e)) continue;
      path.push_back(e);
      if (to == graph.sink()) {
        search.Offer(level(depth + 1), path);
      } else {
        visited[to] = 1;
        self(self, to);
        visited[to] = 0;
      }
      path.pop_back();
    }
  };
  visited[graph.source()] = 1;
  dfs(dfs, graph.source());
  return ExactResult{
      search.best(),
      BinarySolution(std::move(search.best_items()), graph.num_edges()),
      search.nodes()};
}

}  // namespace

double UpperBound(const UncertaintySet& u, const BinarySolution& x) {
  double worst = 0.0;
  for (int i = 0; i < u.num_scenarios(); ++i) {
    worst = std::max(worst, x.Evaluate(u.scenario(i)));
  }
  return worst;
}

void CertifyInHull(const UncertaintySet& u, const Scenario& c,
                   const ConvexWeights& lambda) {
  if (c.provenance().kind == ScenarioKind::kWorstCase) {
    throw DomainError(
        "the element-wise worst case is not in conv(U); no lower bound");
  }
  const std::vector<double> combined = CombineScenarios(u, lambda);
  for (int j = 0; j < u.num_items(); ++j) {
    if (std::abs(combined[j] - c[j]) >
        kCompareTolerance * std::max(1.0, std::abs(c[j]))) {
      throw DomainError("scenario is not the stated convex combination (item " +
                        std::to_string(j) + ")");
    }
  }
}

double LowerBound(const UncertaintySet& u, const Scenario& c,
                  const ConvexWeights& lambda, const BinarySolution& x_c) {
  CertifyInHull(u, c, lambda);
  return x_c.Evaluate(c.values());
}

BoundReport AposterioriReport(const UncertaintySet& u, const ProblemSpec& spec,
                              const Scenario& c, const ConvexWeights& lambda,
                              double apriori, std::optional<int> k) {
  BoundReport report;
  report.solution = NominalSolve(spec, c);
  report.lb = LowerBound(u, c, lambda, report.solution);
  report.ub = UpperBound(u, report.solution);
  report.aposteriori = PosterioriRatio(report.ub, *report.lb);
  report.apriori = apriori;
  report.scenario_provenance = c.provenance();
  report.k_used = k;
  return report;
}

BoundReport EvaluateMidpoint(const UncertaintySet& u, const ProblemSpec& spec,
                             int k) {
  if (!ValidateK(spec, k))
    throw DomainError("k = " + std::to_string(k) + " is not valid");
  const Scenario midpoint = MidpointScenario(u);
  const double apriori = FixedScenarioGuarantee(u, midpoint.values(), k);
  return AposterioriReport(
      u, spec, midpoint, ConvexWeights::Uniform(u.num_scenarios()), apriori, k);
}

BoundReport EvaluateLpScenario(const UncertaintySet& u, const ProblemSpec& spec,
                               int k, const LpScenarioOptions& options) {
  const LpScenario lp = ConstructLpScenario(u, spec, k, options);
  return AposterioriReport(u, spec, lp.scenario, lp.weights, 1.0 / lp.t_star,
                           k);
}

BoundReport EvaluateWorstCase(const UncertaintySet& u,
                              const ProblemSpec& spec) {
  const Scenario worst = WorstCaseScenario(u);
  BoundReport report;
  report.solution = NominalSolve(spec, worst);
  report.ub = UpperBound(u, report.solution);
  report.apriori = WorstCaseAprioriBound(u, spec);
  report.scenario_provenance = worst.provenance();
  return report;
}

MaxMinResult SolveMaxMin(const UncertaintySet& u, const ProblemSpec& spec) {
  const SelectionProblem* selection = spec.selection();
  if (selection == nullptr) {
    throw DomainError(
        "the max-min lower bound is only available for selection problems");
  }
  if (u.num_items() != selection->n) {
    throw DomainError("uncertainty set and problem disagree on n");
  }
  const int n = selection->n;
  const int num_scenarios = u.num_scenarios();
  // Variables: lambda (N), mu, nu (n).
  const int mu = num_scenarios;
  const int nu = num_scenarios + 1;
  LinearProgram lp(num_scenarios + 1 + n);
  lp.set_objective_coefficient(mu, static_cast<double>(selection->p));
  lp.set_bounds(mu, -LinearProgram::kInfinity, LinearProgram::kInfinity);
  for (int j = 0; j < n; ++j) lp.set_objective_coefficient(nu + j, -1.0);
  for (int j = 0; j < n; ++j) {
    LinearConstraint row;
    row.coefficients.assign(lp.num_variables(), 0.0);
    for (int i = 0; i < num_scenarios; ++i) row.coefficients[i] = -u.cost(i, j);
    row.coefficients[mu] = 1.0;
    row.coefficients[nu + j] = -1.0;
    lp.AddConstraint(std::move(row));
  }
  LinearConstraint simplex_row;
  simplex_row.coefficients.assign(lp.num_variables(), 0.0);
  std::fill_n(simplex_row.coefficients.begin(), num_scenarios, 1.0);
  simplex_row.relation = Relation::kEqual;
  simplex_row.rhs = 1.0;
  lp.AddConstraint(std::move(simplex_row));

  const LpSolution solution = SolveLp(lp);
  if (solution.status != LpStatus::kOptimal) {
    throw NumericalError(std::string("max-min LP ended ") +
                         ToString(solution.status));
  }
  ConvexWeights weights = ConvexWeights::Normalized(std::vector<double>(
      solution.values.begin(), solution.values.begin() + num_scenarios));
  Scenario scenario(u, CombineScenarios(u, weights),
                    {ScenarioKind::kMaxMin, std::nullopt});
  return MaxMinResult{std::max(solution.objective, 0.0), std::move(weights),
                      std::move(scenario)};
}

double MaxMinLowerBound(const UncertaintySet& u, const ProblemSpec& spec) {
  return SolveMaxMin(u, spec).value;
}

ExactResult ExactMinMax(const UncertaintySet& u, const ProblemSpec& spec,
                        const ExactOptions& options) {
  if (u.num_items() != spec.num_items()) {
    throw DomainError("uncertainty set and problem disagree on n");
  }
  if (const auto* s = spec.selection()) return ExactSelection(u, *s, options);
  return ExactShortestPath(u, *spec.shortest_path(), options);
}

}  // namespace robustkit
