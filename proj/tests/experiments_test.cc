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

#include "robustkit/experiments.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "robustkit/random.h"

namespace robustkit {
namespace {

const ResultRow* FindRow(const std::vector<ResultRow>& rows,
                         std::string_view metric, std::string_view method,
                         std::optional<int> k = {}) {
  for (const ResultRow& row : rows) {
    if (row.metric == metric && row.method == method && row.k == k) return &row;
  }
  return nullptr;
}

TEST(RandomTest, SplitMixIsDeterministic) {
  SplitMix64 a(7), b(7), c(8);
  for (int i = 0; i < 100; ++i) {
    const uint64_t x = a.Next();
    EXPECT_EQ(x, b.Next());
    EXPECT_NE(x, c.Next());
  }
  EXPECT_EQ(a.counter(), 100u);
}

TEST(RandomTest, UniformIntRangeAndMean) {
  SplitMix64 rng(123);
  double sum = 0.0;
  std::set<int64_t> seen;
  constexpr int kDraws = 10000;
  for (int i = 0; i < kDraws; ++i) {
    const int64_t v = rng.UniformInt(0, 100);
    ASSERT_GE(v, 0);
    ASSERT_LE(v, 100);
    seen.insert(v);
    sum += v;
  }
  EXPECT_EQ(seen.size(), 101u);
  EXPECT_GE(sum / kDraws, 48.0);
  EXPECT_LE(sum / kDraws, 52.0);
}

TEST(RandomTest, DeriveSeedSeparatesParts) {
  EXPECT_EQ(DeriveSeed(1, {10, 3, 5, 0}), DeriveSeed(1, {10, 3, 5, 0}));
  EXPECT_NE(DeriveSeed(1, {10, 3, 5, 0}), DeriveSeed(1, {10, 3, 5, 1}));
  EXPECT_NE(DeriveSeed(1, {10, 3, 5, 0}), DeriveSeed(2, {10, 3, 5, 0}));
  EXPECT_NE(DeriveSeed(1, {1, 2}), DeriveSeed(1, {2, 1}));
}

TEST(GenerateInstanceTest, DeterministicAndInRange) {
  const Instance a = GenerateInstance(10, 3, 5, 42);
  const Instance b = GenerateInstance(10, 3, 5, 42);
  const Instance c = GenerateInstance(10, 3, 5, 43);
  EXPECT_EQ(a.uncertainty, b.uncertainty);
  EXPECT_FALSE(a.uncertainty == c.uncertainty);
  EXPECT_EQ(a.uncertainty.num_items(), 10);
  EXPECT_EQ(a.uncertainty.num_scenarios(), 5);
  for (double v : a.uncertainty.costs()) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 100.0);
    EXPECT_EQ(v, std::floor(v));
  }
  EXPECT_EQ(a.problem.selection()->p, 3);
}

TEST(GridSpecTest, Parse) {
  EXPECT_EQ(ParseGridSpec("standard"), StandardCells());
  EXPECT_EQ(StandardCells().size(), 15u);
  EXPECT_EQ(ParseGridSpec("10,3,10;20,6,2"),
            (std::vector<GridCell>{{10, 3, 10}, {20, 6, 2}}));
  EXPECT_EQ(ParseGridSpec("# cells\n4,2,1\n\n5,1,3\n"),
            (std::vector<GridCell>{{4, 2, 1}, {5, 1, 3}}));
  EXPECT_THROW(ParseGridSpec("10,3"), ParseError);
  EXPECT_THROW(ParseGridSpec("10,11,2"), ParseError);
  EXPECT_THROW(ParseGridSpec("a,b,c"), ParseError);
}

ExperimentGrid SmallGrid() {
  ExperimentGrid grid;
  grid.cells = {{6, 2, 3}, {8, 3, 5}};
  grid.instances_per_cell = 20;
  grid.master_seed = 5;
  return grid;
}

TEST(RunGridTest, Deterministic) {
  const GridResults a = RunGrid(SmallGrid());
  const GridResults b = RunGrid(SmallGrid());
  EXPECT_EQ(a.rows, b.rows);
  EXPECT_EQ(EmitCsv(a.rows), EmitCsv(b.rows));
  for (const CellSummary& cell : a.cells) {
    EXPECT_EQ(cell.succeeded, 20);
    EXPECT_EQ(cell.failed, 0);
  }
}

TEST(RunGridTest, IndependentOfWorkers) {
  ExperimentGrid grid = SmallGrid();
  const std::string serial = EmitCsv(RunGrid(grid).rows);
  grid.workers = 3;
  EXPECT_EQ(EmitCsv(RunGrid(grid).rows), serial);
}

TEST(RunGridTest, RowLayoutAndOrdering) {
  const GridResults results = RunGrid(SmallGrid());
  // Five rows per subset size plus nine fixed ones; p = 2 allows k <= 2.
  int cell_rows[2] = {0, 0};
  for (const ResultRow& row : results.rows) ++cell_rows[row.n == 6 ? 0 : 1];
  EXPECT_EQ(cell_rows[0], 5 * 2 + 9);
  EXPECT_EQ(cell_rows[1], 5 * 3 + 9);
  for (const ResultRow& row : results.rows) {
    EXPECT_TRUE(row.value.has_value());
    EXPECT_EQ(row.instances, 20);
    EXPECT_FALSE(row.runtime_ms.has_value());
  }
  const auto& rows = results.rows;
  for (int k = 1; k <= 3; ++k) {
    const ResultRow* mid = FindRow(rows, "apriori", "Mid", k);
    const ResultRow* lp = FindRow(rows, "apriori", "LP", k);
    ASSERT_NE(mid, nullptr);
    ASSERT_NE(lp, nullptr);
    EXPECT_LE(*lp->value, *mid->value + 1e-9);
  }
  const double opt = *FindRow(rows, "opt", "OPT")->value;
  EXPECT_LE(*FindRow(rows, "lb", "MM")->value, opt + 1e-6);
  EXPECT_LE(*FindRow(rows, "lb", "Mid")->value, opt + 1e-6);
  EXPECT_GE(*FindRow(rows, "ub", "Mid")->value, opt - 1e-6);
  EXPECT_GE(*FindRow(rows, "ub", "WC")->value, opt - 1e-6);
}

TEST(RunGridTest, SingleScenarioRatiosAreOne) {
  ExperimentGrid grid;
  grid.cells = {{4, 2, 1}};
  grid.instances_per_cell = 10;
  const GridResults results = RunGrid(grid);
  for (const ResultRow& row : results.rows) {
    if (row.metric == "apriori" || row.metric == "aposteriori") {
      EXPECT_NEAR(*row.value, 1.0, 1e-9) << row.method;
    }
  }
}

TEST(RunGridTest, OptSkippedOverBudget) {
  ExperimentGrid grid;
  grid.cells = {{10, 3, 2}};
  grid.instances_per_cell = 3;
  grid.opt_budget = 100;
  const GridResults results = RunGrid(grid);
  EXPECT_TRUE(results.cells[0].opt_skipped);
  const ResultRow* opt = FindRow(results.rows, "opt", "OPT");
  ASSERT_NE(opt, nullptr);
  EXPECT_FALSE(opt->value.has_value());
  EXPECT_EQ(opt->instances, 0);
}

TEST(CsvTest, EmptyGridIsHeaderOnly) {
  ExperimentGrid grid;
  const GridResults results = RunGrid(grid);
  EXPECT_TRUE(results.rows.empty());
  EXPECT_EQ(EmitCsv(results.rows), std::string(kCsvHeader) + "\n");
}

TEST(CsvTest, RoundTrip) {
  const GridResults results = RunGrid(SmallGrid());
  const std::string csv = EmitCsv(results.rows);
  const std::vector<ResultRow> parsed = ParseCsv(csv);
  ASSERT_EQ(parsed.size(), results.rows.size());
  EXPECT_EQ(EmitCsv(parsed), csv);
  EXPECT_THROW(ParseCsv("bogus\n"), ParseError);
}

}  // namespace
}  // namespace robustkit
