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

// Representative scenarios for min-max problems over a discrete uncertainty
// set, and the subset constraints that certify their approximation ratio.
//
// For a subset size k and a scenario c, the pair (t, c) is feasible when
//
//   t * sum_{j in S} c^i_j <= sum_{j in S} c_j   for all i and all |S| = k.
//
// If additionally c lies in conv(U) and every feasible solution selects at
// least k items, then x(c) is a 1/t approximation of the min-max optimum.

#ifndef ROBUSTKIT_SCENARIOS_H_
#define ROBUSTKIT_SCENARIOS_H_

#include <optional>
#include <span>
#include <vector>

#include "robustkit/core.h"
#include "robustkit/problems.h"

namespace robustkit {

// Component-wise average of all scenarios.
Scenario MidpointScenario(const UncertaintySet& u);

// Component-wise maximum of all scenarios. Not in conv(U) in general.
Scenario WorstCaseScenario(const UncertaintySet& u);

// The scenario with index i of U, tagged kGiven.
Scenario GivenScenario(const UncertaintySet& u, int i);

// How ConstructLpScenario materializes the N * C(n, k) subset rows.
enum class RowStrategy {
  kAuto,   // eager up to kEagerRowLimit rows, row generation above
  kEager,  // all rows up front
  kLazy,   // separation-driven row generation
};

inline constexpr long long kEagerRowLimit = 500'000;
inline constexpr int kDefaultMaxSubsetSize = 3;

struct LpScenarioOptions {
  RowStrategy strategy = RowStrategy::kAuto;
  // Larger k is supported but the row count grows like C(n, k).
  int max_subset_size = kDefaultMaxSubsetSize;
};

struct LpScenario {
  // Optimal t of the construction LP, in (0, 1]; 1 / t_star is the
  // a-priori guarantee of x(scenario).
  double t_star = 0.0;
  Scenario scenario;
  ConvexWeights weights;
  int lp_iterations = 0;
  int generated_rows = 0;
  bool used_row_generation = false;
};

// Maximizes t over (t, lambda) subject to the subset constraints with
// c = sum_i lambda_i c^i and lambda on the simplex. Throws DomainError if k
// is not valid for `spec` or exceeds `options.max_subset_size`, and
// NumericalError if the LP result fails its certificate.
LpScenario ConstructLpScenario(const UncertaintySet& u, const ProblemSpec& spec,
                               int k, const LpScenarioOptions& options = {});

struct SubsetViolation {
  int scenario = 0;
  std::vector<int> subset;  // sorted, size k
  // t * sum_S c^i - sum_S c; positive means violated.
  double amount = 0.0;
};

// The (i, S) maximizing the violation, if it exceeds `threshold`. Per
// scenario S is the k smallest values of c_j - t c^i_j (ties by index);
// ties across scenarios go to the smaller index.
std::optional<SubsetViolation> SeparationOracle(
    const UncertaintySet& u, std::span<const double> c, double t, int k,
    double threshold = kCutTolerance);

// 1 / t for the largest t satisfying the subset constraints at the fixed
// scenario c, capped so the result is >= 1. +inf if some scenario has
// positive cost on a size-k subset where c is zero. Only a valid guarantee
// when c lies in conv(U).
double FixedScenarioGuarantee(const UncertaintySet& u,
                              std::span<const double> c, int k);

// min(N, |X|): the element-wise worst-case guarantee.
double WorstCaseAprioriBound(const UncertaintySet& u, const ProblemSpec& spec);

// Closest point of conv(U) to c in the max norm.
struct HullProjection {
  double distance = 0.0;
  ConvexWeights weights;
};
HullProjection ProjectOntoHull(const UncertaintySet& u,
                               std::span<const double> c);

// C(n, k), saturating at LLONG_MAX.
long long BinomialCoefficient(int n, int k);

}  // namespace robustkit

#endif  // ROBUSTKIT_SCENARIOS_H_
