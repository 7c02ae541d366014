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

#include "robustkit/scenarios.h"

#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "robustkit/lp.h"

namespace robustkit {
namespace {

// Indices of the k smallest entries of `values`, ties by index, sorted.
std::vector<int> SmallestK(std::span<const double> values, int k,
                           std::vector<int>& scratch) {
  scratch.resize(values.size());
  std::iota(scratch.begin(), scratch.end(), 0);
  auto less = [&](int a, int b) {
    return values[a] < values[b] || (values[a] == values[b] && a < b);
  };
  std::partial_sort(scratch.begin(), scratch.begin() + k, scratch.end(), less);
  std::vector<int> subset(scratch.begin(), scratch.begin() + k);
  std::sort(subset.begin(), subset.end());
  return subset;
}

// Calls fn(subset) for every size-k subset of [n] in lexicographic order.
template <typename Fn>
void ForEachSubset(int n, int k, Fn&& fn) {
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  for (;;) {
    fn(std::span<const int>(subset));
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) return;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

// Row t * a_i(S) - sum_l lambda_l a_l(S) <= 0 over variables (t, lambda).
LinearConstraint SubsetRow(const UncertaintySet& u, int scenario,
                           std::span<const int> subset) {
  const int num_scenarios = u.num_scenarios();
  LinearConstraint row;
  row.coefficients.assign(num_scenarios + 1, 0.0);
  for (int l = 0; l < num_scenarios; ++l) {
    double sum = 0.0;
    for (int j : subset) sum += u.cost(l, j);
    row.coefficients[l + 1] = -sum;
  }
  row.coefficients[0] = -row.coefficients[scenario + 1];
  row.relation = Relation::kLessEqual;
  row.rhs = 0.0;
  return row;
}

std::vector<double> CombineRaw(const UncertaintySet& u,
                               std::span<const double> lambda) {
  std::vector<double> c(u.num_items(), 0.0);
  for (int l = 0; l < u.num_scenarios(); ++l) {
    if (lambda[l] == 0.0) continue;
    auto row = u.scenario(l);
    for (int j = 0; j < u.num_items(); ++j) c[j] += lambda[l] * row[j];
  }
  return c;
}

}  // namespace

Scenario MidpointScenario(const UncertaintySet& u) {
  std::vector<double> c(u.num_items(), 0.0);
  for (int i = 0; i < u.num_scenarios(); ++i) {
    auto row = u.scenario(i);
    for (int j = 0; j < u.num_items(); ++j) c[j] += row[j];
  }
  for (double& v : c) v /= u.num_scenarios();
  return Scenario(u, std::move(c), {ScenarioKind::kMidpoint, std::nullopt});
}

Scenario WorstCaseScenario(const UncertaintySet& u) {
  std::vector<double> c(u.scenario(0).begin(), u.scenario(0).end());
  for (int i = 1; i < u.num_scenarios(); ++i) {
    auto row = u.scenario(i);
    for (int j = 0; j < u.num_items(); ++j) c[j] = std::max(c[j], row[j]);
  }
  return Scenario(u, std::move(c), {ScenarioKind::kWorstCase, std::nullopt});
}

Scenario GivenScenario(const UncertaintySet& u, int i) {
  auto row = u.scenario(i);
  return Scenario(u, std::vector<double>(row.begin(), row.end()),
                  {ScenarioKind::kGiven, std::nullopt});
}

long long BinomialCoefficient(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const long long factor = n - k + i;
    if (result > LLONG_MAX / factor) return LLONG_MAX;
    result = result * factor / i;
  }
  return result;
}

std::optional<SubsetViolation> SeparationOracle(const UncertaintySet& u,
                                                std::span<const double> c,
                                                double t, int k,
                                                double threshold) {
  if (k < 1 || k > u.num_items()) throw DomainError("invalid subset size k");
  if (static_cast<int>(c.size()) != u.num_items()) {
    throw DomainError("scenario length mismatch");
  }
  std::optional<SubsetViolation> best;
  std::vector<double> reduced(u.num_items());
  std::vector<int> scratch;
  for (int i = 0; i < u.num_scenarios(); ++i) {
    auto row = u.scenario(i);
    for (int j = 0; j < u.num_items(); ++j) reduced[j] = c[j] - t * row[j];
    std::vector<int> subset = SmallestK(reduced, k, scratch);
    double amount = 0.0;
    for (int j : subset) amount -= reduced[j];
    if (amount > threshold && (!best || amount > best->amount)) {
      best = SubsetViolation{i, std::move(subset), amount};
    }
  }
  return best;
}

double FixedScenarioGuarantee(const UncertaintySet& u,
                              std::span<const double> c, int k) {
  if (k < 1 || k > u.num_items()) throw DomainError("invalid subset size k");
  if (static_cast<int>(c.size()) != u.num_items()) {
    throw DomainError("scenario length mismatch");
  }
  // Per scenario, the largest feasible t is min_S sum_S c / sum_S c^i. A
  // Dinkelbach iteration finds it exactly: at the current t take the subset
  // minimizing sum_S (c - t c^i); if that is negative its ratio is a strictly
  // smaller t.
  double t_min = 1.0;
  std::vector<double> reduced(u.num_items());
  std::vector<int> scratch;
  for (int i = 0; i < u.num_scenarios() && t_min > 0.0; ++i) {
    auto row = u.scenario(i);
    double t = t_min;
    for (;;) {
      for (int j = 0; j < u.num_items(); ++j) reduced[j] = c[j] - t * row[j];
      const std::vector<int> subset = SmallestK(reduced, k, scratch);
      double value = 0.0;
      double numerator = 0.0;
      double denominator = 0.0;
      for (int j : subset) {
        value += reduced[j];
        numerator += c[j];
        denominator += row[j];
      }
      if (value >= -1e-12 * (1.0 + numerator + t * denominator)) break;
      const double next = numerator / denominator;
      if (!(next < t)) break;
      t = next;
    }
    t_min = std::min(t_min, t);
  }
  if (t_min <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / t_min;
}

double WorstCaseAprioriBound(const UncertaintySet& u, const ProblemSpec& spec) {
  return std::min<double>(u.num_scenarios(), MaxSolutionCardinalityBound(spec));
}

LpScenario ConstructLpScenario(const UncertaintySet& u, const ProblemSpec& spec,
                               int k, const LpScenarioOptions& options) {
  if (u.num_items() != spec.num_items()) {
    throw DomainError("uncertainty set and problem disagree on n");
  }
  if (!ValidateK(spec, k)) {
    throw DomainError("k = " + std::to_string(k) +
                      " exceeds the minimum solution cardinality " +
                      std::to_string(MinSolutionCardinality(spec)));
  }
  if (k > options.max_subset_size) {
    throw DomainError("k = " + std::to_string(k) +
                      " exceeds the configured cap " +
                      std::to_string(options.max_subset_size));
  }
  const int n = u.num_items();
  const int num_scenarios = u.num_scenarios();

  // Variables: t, lambda_1..lambda_N.
  LinearProgram lp(num_scenarios + 1);
  lp.set_objective_coefficient(0, 1.0);
  // t <= 1 is implied whenever some cost is positive and keeps the all-zero
  // set bounded.
  lp.set_bounds(0, 0.0, 1.0);
  LinearConstraint simplex_row;
  simplex_row.coefficients.assign(num_scenarios + 1, 1.0);
  simplex_row.coefficients[0] = 0.0;
  simplex_row.relation = Relation::kEqual;
  simplex_row.rhs = 1.0;
  lp.AddConstraint(std::move(simplex_row));

  const long long subsets = BinomialCoefficient(n, k);
  const bool eager = options.strategy == RowStrategy::kEager ||
                     (options.strategy == RowStrategy::kAuto &&
                      subsets <= kEagerRowLimit / num_scenarios);

  LpSolution solution;
  if (eager) {
    ForEachSubset(n, k, [&](std::span<const int> subset) {
      for (int i = 0; i < num_scenarios; ++i) {
        lp.AddConstraint(SubsetRow(u, i, subset));
      }
    });
    solution = SolveLp(lp);
  } else {
    solution = SolveLpWithRows(
        std::move(lp),
        [&](std::span<const double> primal) -> std::optional<LinearConstraint> {
          const std::vector<double> c = CombineRaw(u, primal.subspan(1));
          auto violation = SeparationOracle(u, c, primal[0], k, kCutTolerance);
          if (!violation) return std::nullopt;
          return SubsetRow(u, violation->scenario, violation->subset);
        });
  }
  if (solution.status != LpStatus::kOptimal) {
    throw NumericalError(std::string("scenario LP ended ") +
                         ToString(solution.status));
  }

  const double t_star = std::min(solution.values[0], 1.0);
  if (!(t_star > 0.0)) throw NumericalError("scenario LP returned t <= 0");
  ConvexWeights weights = ConvexWeights::Normalized(
      std::vector<double>(solution.values.begin() + 1, solution.values.end()));
  Scenario scenario(u, CombineScenarios(u, weights), {ScenarioKind::kLp, k});

  if (SeparationOracle(u, scenario.values(), t_star, k, kCompareTolerance)) {
    throw NumericalError("scenario LP solution violates a subset constraint");
  }
  if (1.0 / t_star > num_scenarios + kCompareTolerance) {
    throw NumericalError("scenario LP guarantee worse than the midpoint's N");
  }
  return LpScenario{t_star,
                    std::move(scenario),
                    std::move(weights),
                    solution.iterations,
                    solution.generated_rows,
                    !eager};
}

HullProjection ProjectOntoHull(const UncertaintySet& u,
                               std::span<const double> c) {
  if (static_cast<int>(c.size()) != u.num_items()) {
    throw DomainError("scenario length mismatch");
  }
  const int num_scenarios = u.num_scenarios();
  // Variables: lambda_1..lambda_N, delta. Maximize -delta subject to
  // |sum_l lambda_l c^l_j - c_j| <= delta.
  LinearProgram lp(num_scenarios + 1);
  lp.set_objective_coefficient(num_scenarios, -1.0);
  for (int j = 0; j < u.num_items(); ++j) {
    LinearConstraint above, below;
    above.coefficients.assign(num_scenarios + 1, 0.0);
    below.coefficients.assign(num_scenarios + 1, 0.0);
    for (int l = 0; l < num_scenarios; ++l) {
      above.coefficients[l] = u.cost(l, j);
      below.coefficients[l] = -u.cost(l, j);
    }
    above.coefficients[num_scenarios] = -1.0;
    below.coefficients[num_scenarios] = -1.0;
    above.rhs = c[j];
    below.rhs = -c[j];
    lp.AddConstraint(std::move(above));
    lp.AddConstraint(std::move(below));
  }
  LinearConstraint simplex_row;
  simplex_row.coefficients.assign(num_scenarios + 1, 1.0);
  simplex_row.coefficients[num_scenarios] = 0.0;
  simplex_row.relation = Relation::kEqual;
  simplex_row.rhs = 1.0;
  lp.AddConstraint(std::move(simplex_row));

  const LpSolution solution = SolveLp(lp);
  if (solution.status != LpStatus::kOptimal) {
    throw NumericalError("hull projection LP did not solve");
  }
  ConvexWeights weights = ConvexWeights::Normalized(
      std::vector<double>(solution.values.begin(), solution.values.end() - 1));
  const std::vector<double> point = CombineScenarios(u, weights);
  double distance = 0.0;
  for (int j = 0; j < u.num_items(); ++j) {
    distance = std::max(distance, std::abs(point[j] - c[j]));
  }
  return HullProjection{distance, std::move(weights)};
}

}  // namespace robustkit
