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

// Upper and lower bounds on the min-max optimum
//
//   OPT = min_{x in X} max_i c^i x,
//
// a-posteriori ratios, the max-min lower bound over conv(U) and an exact
// enumeration oracle for small instances.

#ifndef ROBUSTKIT_BOUNDS_H_
#define ROBUSTKIT_BOUNDS_H_

#include <optional>

#include "robustkit/core.h"
#include "robustkit/problems.h"
#include "robustkit/scenarios.h"

namespace robustkit {

// max_i c^i x.
double UpperBound(const UncertaintySet& u, const BinarySolution& x);

// Throws DomainError unless c = sum_i lambda_i c^i within kCompareTolerance
// (relative to max(1, |c_j|)).
void CertifyInHull(const UncertaintySet& u, const Scenario& c,
                   const ConvexWeights& lambda);

// c x_c, valid as a lower bound on OPT because c lies in conv(U). Certifies
// c against lambda first; worst-case or custom scenarios without weights
// are rejected.
double LowerBound(const UncertaintySet& u, const Scenario& c,
                  const ConvexWeights& lambda, const BinarySolution& x_c);

// Solves the nominal problem for c once and fills lb, ub and ub / lb.
BoundReport AposterioriReport(const UncertaintySet& u, const ProblemSpec& spec,
                              const Scenario& c, const ConvexWeights& lambda,
                              double apriori, std::optional<int> k = {});

// Midpoint scenario; a-priori from FixedScenarioGuarantee at subset size k.
BoundReport EvaluateMidpoint(const UncertaintySet& u, const ProblemSpec& spec,
                             int k);
// LP scenario at subset size k; a-priori 1 / t_star.
BoundReport EvaluateLpScenario(const UncertaintySet& u, const ProblemSpec& spec,
                               int k, const LpScenarioOptions& options = {});
// Element-wise worst case; a-priori min(N, |X|) and no lower bound.
BoundReport EvaluateWorstCase(const UncertaintySet& u, const ProblemSpec& spec);

struct MaxMinResult {
  // max_{c in conv(U)} min_{x in X} c x
  double value = 0.0;
  ConvexWeights weights;
  Scenario scenario;
};

// Compact dual formulation, selection problems only:
//   max p mu - sum_j nu_j  s.t.  mu - nu_j <= sum_i lambda_i c^i_j,
//   lambda in the simplex, nu >= 0, mu free.
// Throws DomainError for other problem kinds.
MaxMinResult SolveMaxMin(const UncertaintySet& u, const ProblemSpec& spec);
double MaxMinLowerBound(const UncertaintySet& u, const ProblemSpec& spec);

inline constexpr long long kDefaultExactBudget = 20'000'000;

struct ExactOptions {
  bool prune = true;
  // Selection: maximum C(n, p). Shortest path: maximum search-tree nodes.
  long long budget = kDefaultExactBudget;
};

struct ExactResult {
  double opt = 0.0;
  // Lexicographically smallest optimal solution.
  BinarySolution solution;
  long long nodes = 0;
};

// Exhaustive depth-first enumeration with per-scenario running sums; with
// pruning a branch is abandoned once its running max exceeds the incumbent.
// Throws BudgetExceededError instead of degrading on large instances.
ExactResult ExactMinMax(const UncertaintySet& u, const ProblemSpec& spec,
                        const ExactOptions& options = {});

}  // namespace robustkit

#endif  // ROBUSTKIT_BOUNDS_H_
