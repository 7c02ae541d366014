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

// Domain types shared by every robustkit module: the discrete uncertainty
// set, scenarios built from it, convex weights, solutions and bound reports.

#ifndef ROBUSTKIT_CORE_H_
#define ROBUSTKIT_CORE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace robustkit {

// Simplex-level feasibility tolerance.
inline constexpr double kFeasibilityTolerance = 1e-9;
// Tolerance for user-facing comparisons (reports, certification).
inline constexpr double kCompareTolerance = 1e-6;
// Minimum violation for a generated cut to be considered violated.
inline constexpr double kCutTolerance = 1e-7;

// Malformed instance text. `line()` is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// A request that is well-formed but invalid for the given data, e.g. a
// subset size k larger than every feasible solution.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact computation that would exceed its enumeration budget.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The LP engine failed to produce a trustworthy answer.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The finite uncertainty set U = {c^1, ..., c^N} over n items. Costs are
// nonnegative and finite; row i is scenario i. Immutable after construction.
class UncertaintySet {
 public:
  // `rows` must be non-empty, rectangular, with at least one column.
  // Throws DomainError otherwise.
  explicit UncertaintySet(std::vector<std::vector<double>> rows);

  int num_items() const { return num_items_; }
  int num_scenarios() const { return num_scenarios_; }

  std::span<const double> scenario(int i) const {
    return {costs_.data() + static_cast<std::size_t>(i) * num_items_,
            static_cast<std::size_t>(num_items_)};
  }
  double cost(int i, int j) const {
    return costs_[static_cast<std::size_t>(i) * num_items_ + j];
  }
  // Row-major N x n matrix.
  std::span<const double> costs() const { return costs_; }

  friend bool operator==(const UncertaintySet&,
                         const UncertaintySet&) = default;

 private:
  int num_items_ = 0;
  int num_scenarios_ = 0;
  std::vector<double> costs_;
};

enum class ScenarioKind {
  kGiven,
  kMidpoint,
  kWorstCase,
  kLp,
  kMaxMin,
  kCustom
};

// Where a scenario came from. `k` is set for LP-constructed scenarios.
struct Provenance {
  ScenarioKind kind = ScenarioKind::kCustom;
  std::optional<int> k;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// e.g. "midpoint", "lp(2)".
std::string ToString(const Provenance& provenance);

// A length-n nonnegative cost vector, possibly outside U.
class Scenario {
 public:
  // Throws DomainError if any value is negative or not finite, or if the
  // length differs from `u.num_items()`.
  Scenario(const UncertaintySet& u, std::vector<double> values,
           Provenance provenance);

  std::span<const double> values() const { return values_; }
  double operator[](int j) const { return values_[j]; }
  int size() const { return static_cast<int>(values_.size()); }
  const Provenance& provenance() const { return provenance_; }

 private:
  std::vector<double> values_;
  Provenance provenance_;
};

// Weights lambda on the probability simplex (within kFeasibilityTolerance).
class ConvexWeights {
 public:
  // Throws DomainError if the invariants do not hold.
  explicit ConvexWeights(std::vector<double> lambda);

  // Clamps entries in [-tolerance, 0) to zero and rescales to sum 1 before
  // validating; used to absorb LP round-off.
  static ConvexWeights Normalized(std::vector<double> lambda);
  static ConvexWeights Uniform(int num_scenarios);
  static ConvexWeights Vertex(int num_scenarios, int i);

  std::span<const double> lambda() const { return lambda_; }
  double operator[](int i) const { return lambda_[i]; }
  int size() const { return static_cast<int>(lambda_.size()); }

 private:
  std::vector<double> lambda_;
};

// Sum_i lambda_i c^i.
std::vector<double> CombineScenarios(const UncertaintySet& u,
                                     const ConvexWeights& weights);

// A subset of [n] encoding x in {0,1}^n. Indices are 0-based, sorted and
// unique.
class BinarySolution {
 public:
  BinarySolution() = default;
  // Sorts and validates; throws DomainError on duplicates or indices outside
  // [0, n).
  BinarySolution(std::vector<int> selected, int num_items);

  std::span<const int> selected() const { return selected_; }
  int size() const { return static_cast<int>(selected_.size()); }
  bool contains(int j) const;

  // c . x
  double Evaluate(std::span<const double> costs) const;

  friend bool operator==(const BinarySolution&,
                         const BinarySolution&) = default;

 private:
  std::vector<int> selected_;
};

// Bounds obtained from one representative scenario. `lb` and `aposteriori`
// are empty when the scenario cannot certify a lower bound (it is not known
// to lie in conv(U)).
struct BoundReport {
  double apriori = 1.0;
  std::optional<double> lb;
  double ub = 0.0;
  std::optional<double> aposteriori;
  Provenance scenario_provenance;
  std::optional<int> k_used;
  BinarySolution solution;
};

// ub / lb with the conventions +inf for lb = 0 < ub and 1 for lb = ub = 0.
double PosterioriRatio(double ub, double lb);

}  // namespace robustkit

#endif  // ROBUSTKIT_CORE_H_
