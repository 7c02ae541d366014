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

#include "robustkit/lp.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "robustkit/scenarios.h"
#include "test_util.h"

namespace robustkit {
namespace {

LinearConstraint Row(std::vector<double> a, Relation rel, double rhs) {
  return LinearConstraint{std::move(a), rel, rhs};
}

TEST(SolveLpTest, SingleUpperRow) {
  LinearProgram lp(1);
  lp.set_objective_coefficient(0, 1.0);
  lp.AddConstraint(Row({1.0}, Relation::kLessEqual, 5.0));
  const LpSolution s = SolveLp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_DOUBLE_EQ(s.values[0], 5.0);
  EXPECT_DOUBLE_EQ(s.objective, 5.0);
}

TEST(SolveLpTest, InfeasibleBounds) {
  LinearProgram lp(1);
  lp.set_objective_coefficient(0, 1.0);
  lp.set_bounds(0, 2.0, 1.0);
  EXPECT_EQ(SolveLp(lp).status, LpStatus::kInfeasible);

  LinearProgram via_row(1);
  via_row.set_objective_coefficient(0, 1.0);
  via_row.set_bounds(0, 2.0, LinearProgram::kInfinity);
  via_row.AddConstraint(Row({1.0}, Relation::kLessEqual, 1.0));
  EXPECT_EQ(SolveLp(via_row).status, LpStatus::kInfeasible);
}

TEST(SolveLpTest, Unbounded) {
  LinearProgram lp(2);
  lp.set_objective({1.0, 1.0});
  lp.AddConstraint(Row({1.0, -1.0}, Relation::kLessEqual, 1.0));
  EXPECT_EQ(SolveLp(lp).status, LpStatus::kUnbounded);
}

TEST(SolveLpTest, FreeAndUpperBoundedVariables) {
  // max x - y with x free, y <= -1 (upper only), x + y <= 3.
  LinearProgram lp(2);
  lp.set_objective({1.0, -1.0});
  lp.set_bounds(0, -LinearProgram::kInfinity, LinearProgram::kInfinity);
  lp.set_bounds(1, -LinearProgram::kInfinity, -1.0);
  lp.AddConstraint(Row({1.0, 1.0}, Relation::kLessEqual, 3.0));
  lp.AddConstraint(Row({1.0, -1.0}, Relation::kLessEqual, 10.0));
  const LpSolution s = SolveLp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.objective, 10.0, 1e-9);
  EXPECT_LE(MaxScaledViolation(lp, s.values), 1e-9);
}

TEST(SolveLpTest, EqualityAndBoxBounds) {
  // max 2x + y, x + y = 4, 1 <= x <= 3, y >= 0.
  LinearProgram lp(2);
  lp.set_objective({2.0, 1.0});
  lp.set_bounds(0, 1.0, 3.0);
  lp.AddConstraint(Row({1.0, 1.0}, Relation::kEqual, 4.0));
  const LpSolution s = SolveLp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.values[0], 3.0, 1e-12);
  EXPECT_NEAR(s.values[1], 1.0, 1e-12);
  EXPECT_NEAR(s.objective, 7.0, 1e-12);
}

TEST(SolveLpTest, RedundantEqualities) {
  LinearProgram lp(3);
  lp.set_objective({1.0, 2.0, 3.0});
  lp.AddConstraint(Row({1.0, 1.0, 1.0}, Relation::kEqual, 1.0));
  lp.AddConstraint(Row({2.0, 2.0, 2.0}, Relation::kEqual, 2.0));
  lp.AddConstraint(Row({0.0, 0.0, 1.0}, Relation::kLessEqual, 0.5));
  const LpSolution s = SolveLp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.objective, 2.5, 1e-12);
}

TEST(SolveLpTest, RejectsMalformedRows) {
  LinearProgram lp(2);
  EXPECT_THROW(lp.AddConstraint(Row({1.0}, Relation::kLessEqual, 1.0)),
               DomainError);
  EXPECT_THROW(lp.AddConstraint(Row({1.0, 1.0}, Relation::kLessEqual,
                                    std::numeric_limits<double>::infinity())),
               DomainError);
}

TEST(SolveLpTest, MatchesVertexEnumeration) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const LinearProgram lp =
        testing::RandomLp(rng, testing::LpKind::kFeasibleBounded);
    const auto expected = testing::VertexEnumerationOptimum(lp);
    ASSERT_TRUE(expected.has_value()) << "trial " << trial;
    const LpSolution s = SolveLp(lp);
    ASSERT_EQ(s.status, LpStatus::kOptimal) << "trial " << trial;
    EXPECT_NEAR(s.objective, *expected, 1e-7) << "trial " << trial;
    EXPECT_LE(MaxScaledViolation(lp, s.values), 1e-9);
  }
}

TEST(SolveLpTest, StatusesMatchConstruction) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    EXPECT_EQ(
        SolveLp(testing::RandomLp(rng, testing::LpKind::kInfeasible)).status,
        LpStatus::kInfeasible);
    EXPECT_EQ(
        SolveLp(testing::RandomLp(rng, testing::LpKind::kUnbounded)).status,
        LpStatus::kUnbounded);
  }
}

TEST(SolveLpTest, Deterministic) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const LinearProgram lp =
        testing::RandomLp(rng, testing::LpKind::kFeasibleBounded);
    const LpSolution a = SolveLp(lp);
    const LpSolution b = SolveLp(lp);
    EXPECT_EQ(a.iterations, b.iterations);
    EXPECT_EQ(a.values, b.values);
    EXPECT_EQ(a.objective, b.objective);
  }
}

// The working-set path agrees with the full tableau on every status.
TEST(SolveLpTest, WorkingSetMatchesFullTableau) {
  std::mt19937_64 rng(77);
  const LpOptions full{std::numeric_limits<int>::max()};
  const LpOptions subset{0};
  for (int trial = 0; trial < 300; ++trial) {
    const auto kind = static_cast<testing::LpKind>(trial % 3);
    const LinearProgram lp = testing::RandomLp(rng, kind);
    const LpSolution a = SolveLp(lp, full);
    const LpSolution b = SolveLp(lp, subset);
    ASSERT_EQ(a.status, b.status) << "trial " << trial;
    if (a.status == LpStatus::kOptimal) {
      EXPECT_NEAR(a.objective, b.objective, 1e-7) << "trial " << trial;
    }
  }
}

TEST(SolveLpTest, WorkingSetStaysSmallOnManyRows) {
  // max x + y over the polygon tangent to the unit circle at 2000 angles.
  LinearProgram lp(2);
  lp.set_objective({1.0, 1.0});
  lp.set_bounds(0, -LinearProgram::kInfinity, LinearProgram::kInfinity);
  lp.set_bounds(1, -LinearProgram::kInfinity, LinearProgram::kInfinity);
  constexpr int kRows = 2000;
  for (int r = 0; r < kRows; ++r) {
    const double angle = 2.0 * std::numbers::pi * r / kRows;
    lp.AddConstraint(
        Row({std::cos(angle), std::sin(angle)}, Relation::kLessEqual, 1.0));
  }
  const LpSolution s = SolveLp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.objective, std::sqrt(2.0), 1e-9);
  EXPECT_LT(s.working_rows, kRows / 10);
  const LpSolution dense = SolveLp(lp, {kRows});
  EXPECT_EQ(dense.working_rows, kRows);
  EXPECT_NEAR(dense.objective, s.objective, 1e-9);
}

TEST(SolveLpWithRowsTest, SilentSourceEqualsPlainSolve) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const LinearProgram lp =
        testing::RandomLp(rng, testing::LpKind::kFeasibleBounded);
    const LpSolution plain = SolveLp(lp);
    const LpSolution lazy = SolveLpWithRows(
        lp, [](std::span<const double>) { return std::nullopt; });
    EXPECT_EQ(lazy.values, plain.values);
    EXPECT_EQ(lazy.objective, plain.objective);
    EXPECT_EQ(lazy.generated_rows, 0);
  }
}

TEST(SolveLpWithRowsTest, AddsViolatedRowsUntilFeasible) {
  // max x + y with rows x <= 2 and y <= 3 only revealed on demand.
  LinearProgram lp(2);
  lp.set_objective({1.0, 1.0});
  lp.AddConstraint(Row({1.0, 1.0}, Relation::kLessEqual, 100.0));
  const LpSolution s = SolveLpWithRows(
      lp, [](std::span<const double> x) -> std::optional<LinearConstraint> {
        if (x[0] > 2.0 + 1e-9)
          return Row({1.0, 0.0}, Relation::kLessEqual, 2.0);
        if (x[1] > 3.0 + 1e-9)
          return Row({0.0, 1.0}, Relation::kLessEqual, 3.0);
        return std::nullopt;
      });
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.objective, 5.0, 1e-12);
  EXPECT_EQ(s.generated_rows, 2);
}

// Eager enumeration and separation-driven row generation reach the same
// optimum on the scenario-construction LP.
TEST(SolveLpWithRowsTest, EagerAndLazyScenarioLpsAgree) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int num_scenarios = 1 + static_cast<int>(rng() % 5);
    const int p = 2 + static_cast<int>(rng() % (n - 1));
    const int k = 1 + static_cast<int>(rng() % 2);
    const UncertaintySet u = testing::RandomSet(rng, n, num_scenarios, 100);
    const ProblemSpec spec = ProblemSpec::Selection(n, p);
    const LpScenario eager =
        ConstructLpScenario(u, spec, k, {RowStrategy::kEager});
    const LpScenario lazy =
        ConstructLpScenario(u, spec, k, {RowStrategy::kLazy});
    EXPECT_NEAR(eager.t_star, lazy.t_star, 1e-7) << "trial " << trial;
    EXPECT_FALSE(eager.used_row_generation);
    EXPECT_TRUE(lazy.used_row_generation);
  }
}

TEST(SolveLpWithRowsTest, RandomFiveScenarioInstance) {
  std::mt19937_64 rng(5);
  const UncertaintySet u = testing::RandomSet(rng, 8, 5, 100);
  const ProblemSpec spec = ProblemSpec::Selection(8, 3);
  const LpScenario eager =
      ConstructLpScenario(u, spec, 2, {RowStrategy::kEager});
  const LpScenario lazy = ConstructLpScenario(u, spec, 2, {RowStrategy::kLazy});
  EXPECT_NEAR(eager.t_star, lazy.t_star, 1e-7);
  EXPECT_LT(lazy.generated_rows, 5 * 28);
}

TEST(SolveLpTest, WorkedExampleScenarioLp) {
  const UncertaintySet u = testing::ExampleSet();
  const LpScenario lp = ConstructLpScenario(u, testing::ExampleProblem(), 1);
  EXPECT_NEAR(1.0 / lp.t_star, 1.33, 0.01);
}

}  // namespace
}  // namespace robustkit
