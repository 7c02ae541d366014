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

// Randomized selection-problem experiments: instance generation, the
// parameter grid, per-cell aggregation and CSV output.

#ifndef ROBUSTKIT_EXPERIMENTS_H_
#define ROBUSTKIT_EXPERIMENTS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "robustkit/bounds.h"
#include "robustkit/instance_io.h"

namespace robustkit {

struct GridCell {
  int n = 0;
  int p = 0;
  int num_scenarios = 0;

  friend bool operator==(const GridCell&, const GridCell&) = default;
};

struct ExperimentGrid {
  std::vector<GridCell> cells;
  int instances_per_cell = 1000;
  uint64_t master_seed = 1;
  // Subset sizes 1..min(max_k, p) are evaluated for Mid-k and LP-k.
  int max_k = 3;
  bool compute_opt = true;
  // Cells whose C(n, p) exceeds this skip OPT.
  long long opt_budget = kDefaultExactBudget;
  bool compute_maxmin = true;
  // Wall-clock columns make the CSV schedule dependent; off by default.
  bool record_runtime = false;
  int workers = 1;
  // When set, every generated instance is written there in instance format.
  std::optional<std::string> dump_dir;
};

// n in {10, 20, 30} with p = 3n/10, N in {2, 5, 10, 50, 100}.
std::vector<GridCell> StandardCells();

// "standard", or cells "n,p,N" separated by ';' or newlines ('#' comments).
// Throws ParseError.
std::vector<GridCell> ParseGridSpec(std::string_view text);

// Seed of instance `id` in cell (n, p, N).
uint64_t InstanceSeed(uint64_t master_seed, const GridCell& cell, int id);

// N x n costs drawn i.i.d. uniformly from {0, ..., 100}, row by row.
Instance GenerateInstance(int n, int p, int num_scenarios, uint64_t seed);

// One aggregate line of the results table.
struct ResultRow {
  int n = 0;
  int p = 0;
  int num_scenarios = 0;
  std::string metric;  // apriori | aposteriori | opt | ub | lb
  std::string method;  // Mid | LP | MM | WC | OPT
  std::optional<int> k;
  std::optional<double> value;  // mean over successful instances
  std::optional<double> std_error;
  int instances = 0;
  std::optional<double> runtime_ms;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

struct CellSummary {
  GridCell cell;
  int succeeded = 0;
  int failed = 0;
  bool opt_skipped = false;
  std::string first_failure;
};

struct GridResults {
  std::vector<ResultRow> rows;
  std::vector<CellSummary> cells;
};

// Called after each cell with (cell index, summary).
using ProgressFn = std::function<void(int, const CellSummary&)>;

// Runs every cell. Per-instance failures are counted and excluded, never
// fatal. The output is independent of `grid.workers`.
GridResults RunGrid(const ExperimentGrid& grid,
                    const ProgressFn& progress = {});

inline constexpr std::string_view kCsvHeader =
    "n,p,N,metric,method,k,value,stderr,instances,runtime_ms";

// Header plus one line per row; numbers with 6 significant digits, missing
// values as empty fields.
std::string EmitCsv(std::span<const ResultRow> rows);

// Inverse of EmitCsv. Throws ParseError.
std::vector<ResultRow> ParseCsv(std::string_view text);

}  // namespace robustkit

#endif  // ROBUSTKIT_EXPERIMENTS_H_
