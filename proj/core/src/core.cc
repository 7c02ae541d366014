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

#include "robustkit/core.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace robustkit {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(
          line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

UncertaintySet::UncertaintySet(std::vector<std::vector<double>> rows) {
  if (rows.empty()) throw DomainError("uncertainty set needs N >= 1");
  num_scenarios_ = static_cast<int>(rows.size());
  num_items_ = static_cast<int>(rows.front().size());
  if (num_items_ < 1) throw DomainError("uncertainty set needs n >= 1");
  costs_.reserve(rows.size() * rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != num_items_) {
      throw DomainError("scenario " + std::to_string(i) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(num_items_));
    }
    for (double v : rows[i]) {
      if (!std::isfinite(v) || v < 0.0) {
        throw DomainError("scenario " + std::to_string(i) +
                          " has a negative or non-finite cost");
      }
      costs_.push_back(v);
    }
  }
}

std::string ToString(const Provenance& provenance) {
  switch (provenance.kind) {
    case ScenarioKind::kGiven:
      return "given";
    case ScenarioKind::kMidpoint:
      return "midpoint";
    case ScenarioKind::kWorstCase:
      return "worstcase";
    case ScenarioKind::kLp:
      return "lp(" + std::to_string(provenance.k.value_or(0)) + ")";
    case ScenarioKind::kMaxMin:
      return "maxmin";
    case ScenarioKind::kCustom:
      return "custom";
  }
  return "custom";
}

Scenario::Scenario(const UncertaintySet& u, std::vector<double> values,
                   Provenance provenance)
    : values_(std::move(values)), provenance_(provenance) {
  if (static_cast<int>(values_.size()) != u.num_items()) {
    throw DomainError("scenario length " + std::to_string(values_.size()) +
                      " does not match n = " + std::to_string(u.num_items()));
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("scenario has a negative or non-finite entry");
    }
  }
}

ConvexWeights::ConvexWeights(std::vector<double> lambda)
    : lambda_(std::move(lambda)) {
  if (lambda_.empty()) throw DomainError("convex weights must be non-empty");
  double sum = 0.0;
  for (double l : lambda_) {
    if (!std::isfinite(l) || l < -kFeasibilityTolerance) {
      throw DomainError("convex weight below zero");
    }
    sum += l;
  }
  if (std::abs(sum - 1.0) > kFeasibilityTolerance) {
    throw DomainError("convex weights do not sum to one");
  }
}

ConvexWeights ConvexWeights::Normalized(std::vector<double> lambda) {
  double sum = 0.0;
  for (double& l : lambda) {
    if (l < 0.0 && l >= -kFeasibilityTolerance) l = 0.0;
    sum += l;
  }
  if (sum > 0.0 && std::abs(sum - 1.0) <= kCompareTolerance) {
    for (double& l : lambda) l /= sum;
  }
  return ConvexWeights(std::move(lambda));
}

ConvexWeights ConvexWeights::Uniform(int num_scenarios) {
  return ConvexWeights(std::vector<double>(
      static_cast<std::size_t>(num_scenarios), 1.0 / num_scenarios));
}

ConvexWeights ConvexWeights::Vertex(int num_scenarios, int i) {
  std::vector<double> lambda(static_cast<std::size_t>(num_scenarios), 0.0);
  lambda.at(static_cast<std::size_t>(i)) = 1.0;
  return ConvexWeights(std::move(lambda));
}

std::vector<double> CombineScenarios(const UncertaintySet& u,
                                     const ConvexWeights& weights) {
  if (weights.size() != u.num_scenarios()) {
    throw DomainError("weight count does not match N");
  }
  std::vector<double> c(static_cast<std::size_t>(u.num_items()), 0.0);
  for (int i = 0; i < u.num_scenarios(); ++i) {
    const double l = weights[i];
    if (l == 0.0) continue;
    auto row = u.scenario(i);
    for (int j = 0; j < u.num_items(); ++j) c[j] += l * row[j];
  }
  // Round-off can produce -0 or -1e-18 when weights were clamped.
  for (double& v : c) v = std::max(v, 0.0);
  return c;
}

BinarySolution::BinarySolution(std::vector<int> selected, int num_items)
    : selected_(std::move(selected)) {
  std::sort(selected_.begin(), selected_.end());
  if (std::adjacent_find(selected_.begin(), selected_.end()) !=
      selected_.end()) {
    throw DomainError("solution contains a duplicate index");
  }
  if (!selected_.empty() &&
      (selected_.front() < 0 || selected_.back() >= num_items)) {
    throw DomainError("solution index out of range");
  }
}

bool BinarySolution::contains(int j) const {
  return std::binary_search(selected_.begin(), selected_.end(), j);
}

double BinarySolution::Evaluate(std::span<const double> costs) const {
  double total = 0.0;
  for (int j : selected_) total += costs[j];
  return total;
}

double PosterioriRatio(double ub, double lb) {
  constexpr double kZero = 1e-12;
  if (lb > kZero) return ub / lb;
  if (ub > kZero) return std::numeric_limits<double>::infinity();
  return 1.0;
}

}  // namespace robustkit
