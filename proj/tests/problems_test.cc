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

#include "robustkit/problems.h"

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

namespace robustkit {
namespace {

std::vector<int> Selected(const BinarySolution& x) {
  return {x.selected().begin(), x.selected().end()};
}

TEST(NominalSolveTest, WorkedExampleScenarios) {
  const ProblemSpec spec = ProblemSpec::Selection(4, 2);
  // Midpoint: items 1 and 3 (0-based 0 and 2).
  const std::vector<double> midpoint = {11.0 / 3, 5.0, 13.0 / 3, 16.0 / 3};
  EXPECT_EQ(Selected(NominalSolve(spec, midpoint)), (std::vector<int>{0, 2}));
  // LP scenario for k = 1: items 1 and 4.
  const std::vector<double> lp = {3.75, 6.88, 6.75, 5.50};
  EXPECT_EQ(Selected(NominalSolve(spec, lp)), (std::vector<int>{0, 3}));
  // Column max (5, 8, 9, 7): two smallest are items 1 and 4, value 12.
  const std::vector<double> worst = {5, 8, 9, 7};
  const BinarySolution x = NominalSolve(spec, worst);
  EXPECT_EQ(Selected(x), (std::vector<int>{0, 3}));
  EXPECT_EQ(x.Evaluate(worst), 12.0);
}

TEST(NominalSolveTest, ForcedAndTies) {
  const std::vector<double> c = {4, 1, 3, 2};
  EXPECT_EQ(NominalSolve(ProblemSpec::Selection(4, 4), c).size(), 4);
  const std::vector<double> ties = {2, 1, 1, 1};
  EXPECT_EQ(Selected(NominalSolve(ProblemSpec::Selection(4, 2), ties)),
            (std::vector<int>{1, 2}));
  EXPECT_THROW(
      NominalSolve(ProblemSpec::Selection(4, 2), std::vector<double>{1, 2}),
      DomainError);
}

TEST(NominalSolveTest, MatchesBruteForceAndIsScaleInvariant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int p = 1 + static_cast<int>(rng() % n);
    std::vector<double> c(n);
    for (double& v : c)
      v = static_cast<double>(rng() % (trial % 3 == 0 ? 4 : 101));
    const ProblemSpec spec = ProblemSpec::Selection(n, p);
    const BinarySolution x = NominalSolve(spec, c);
    EXPECT_TRUE(IsFeasible(spec, x));
    EXPECT_DOUBLE_EQ(x.Evaluate(c), testing::BruteForceNominal(c, p));
    std::vector<double> scaled = c;
    const double factor = 0.5 + static_cast<double>(rng() % 1000) / 37.0;
    for (double& v : scaled) v *= factor;
    EXPECT_EQ(NominalSolve(spec, scaled), x);
  }
}

TEST(ShortestPathTest, SolvesDiamond) {
  // 0->1 (e0), 1->3 (e1), 0->2 (e2), 2->3 (e3), 0->3 (e4)
  const ProblemSpec spec =
      ProblemSpec::ShortestPath({{0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 3}}, 0, 3);
  EXPECT_EQ(Selected(NominalSolve(spec, std::vector<double>{1, 1, 2, 2, 5})),
            (std::vector<int>{0, 1}));
  EXPECT_EQ(Selected(NominalSolve(spec, std::vector<double>{1, 1, 2, 2, 1})),
            (std::vector<int>{4}));
  // Tie between both two-hop paths: the smaller predecessor (vertex 1) wins.
  EXPECT_EQ(Selected(NominalSolve(spec, std::vector<double>{1, 1, 1, 1, 9})),
            (std::vector<int>{0, 1}));
  EXPECT_EQ(MinSolutionCardinality(spec), 1);
  EXPECT_EQ(MaxSolutionCardinalityBound(spec), 2);
}

TEST(ShortestPathTest, MatchesPathEnumeration) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    // Random DAG on 6 vertices plus a guaranteed 0->5 chain.
    std::vector<Edge> edges;
    for (int v = 0; v < 5; ++v) edges.push_back({v, v + 1});
    for (int a = 0; a < 6; ++a) {
      for (int b = a + 2; b < 6; ++b) {
        if (rng() % 3 == 0) edges.push_back({a, b});
      }
    }
    const ProblemSpec spec = ProblemSpec::ShortestPath(edges, 0, 5);
    std::vector<double> c(edges.size());
    for (double& v : c) v = static_cast<double>(rng() % 20);
    const BinarySolution x = NominalSolve(spec, c);
    ASSERT_TRUE(IsFeasible(spec, x));
    // Enumerate all paths by DFS.
    double best = 1e300;
    auto dfs = [&](auto&& self, int v, double cost) -> void {
      if (v == 5) {
        best = std::min(best, cost);
        return;
      }
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].from == v) self(self, edges[e].to, cost + c[e]);
      }
    };
    dfs(dfs, 0, 0.0);
    EXPECT_DOUBLE_EQ(x.Evaluate(c), best);
  }
}

TEST(ShortestPathTest, Validation) {
  EXPECT_THROW(ProblemSpec::ShortestPath({{0, 1}}, 0, 0), DomainError);
  EXPECT_THROW(ProblemSpec::ShortestPath({{1, 0}}, 0, 1), DomainError);
  EXPECT_THROW(ProblemSpec::ShortestPath({{0, -1}}, 0, 1), DomainError);
}

TEST(ShortestPathTest, Feasibility) {
  const ProblemSpec spec =
      ProblemSpec::ShortestPath({{0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 3}}, 0, 3);
  EXPECT_TRUE(IsFeasible(spec, BinarySolution({0, 1}, 5)));
  EXPECT_TRUE(IsFeasible(spec, BinarySolution({4}, 5)));
  EXPECT_FALSE(IsFeasible(spec, BinarySolution({0}, 5)));
  EXPECT_FALSE(IsFeasible(spec, BinarySolution({0, 1, 4}, 5)));
  EXPECT_FALSE(IsFeasible(spec, BinarySolution({0, 2, 1, 3}, 5)));
}

TEST(CardinalityTest, Selection) {
  EXPECT_EQ(MinSolutionCardinality(ProblemSpec::Selection(30, 9)), 9);
  EXPECT_EQ(MinSolutionCardinality(ProblemSpec::Selection(4, 2)), 2);
  EXPECT_EQ(MaxSolutionCardinalityBound(ProblemSpec::Selection(10, 3)), 3);
}

TEST(CardinalityTest, Graphs) {
  const ProblemSpec single = ProblemSpec::ShortestPath({{0, 1}}, 0, 1);
  EXPECT_EQ(MinSolutionCardinality(single), 1);
  EXPECT_EQ(MaxSolutionCardinalityBound(single), 1);
  // s=0 -> a=1 -> t=2 plus s -> t.
  const ProblemSpec dag =
      ProblemSpec::ShortestPath({{0, 1}, {1, 2}, {0, 2}}, 0, 2);
  EXPECT_EQ(MinSolutionCardinality(dag), 1);
  EXPECT_EQ(MaxSolutionCardinalityBound(dag), 2);
  // A cycle anywhere falls back to n.
  const ProblemSpec cyclic =
      ProblemSpec::ShortestPath({{0, 1}, {1, 2}, {0, 2}, {1, 3}, {3, 1}}, 0, 2);
  EXPECT_FALSE(cyclic.shortest_path()->IsAcyclic());
  EXPECT_EQ(MaxSolutionCardinalityBound(cyclic), 5);
  EXPECT_LE(MinSolutionCardinality(cyclic),
            MaxSolutionCardinalityBound(cyclic));
}

TEST(ValidateKTest, Examples) {
  EXPECT_TRUE(ValidateK(ProblemSpec::Selection(4, 2), 2));
  EXPECT_FALSE(ValidateK(ProblemSpec::Selection(4, 2), 3));
  EXPECT_TRUE(ValidateK(ProblemSpec::Selection(10, 3), 1));
  EXPECT_FALSE(ValidateK(ProblemSpec::Selection(10, 3), 0));
  EXPECT_FALSE(ValidateK(ProblemSpec::ShortestPath({{0, 1}}, 0, 1), 2));
}

TEST(ProblemSpecTest, RejectsBadSelection) {
  EXPECT_THROW(ProblemSpec::Selection(0, 0), DomainError);
  EXPECT_THROW(ProblemSpec::Selection(3, 4), DomainError);
  EXPECT_THROW(ProblemSpec::Selection(3, 0), DomainError);
}

}  // namespace
}  // namespace robustkit
