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
#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "robustkit/random.h"

namespace robustkit {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Timing groups; every row is charged the time of its group.
enum Group : int {
  kGroupMidPre = 0,  // + k - 1
  kGroupMid = 3,
  kGroupLp = 4,  // + k - 1
  kGroupMaxMin = 7,
  kGroupWorstCase = 8,
  kGroupOpt = 9,
  kNumGroups = 10,
};

struct RowDef {
  std::string metric;
  std::string method;
  std::optional<int> k;
  int group;
};

std::vector<RowDef> RowLayout(const ExperimentGrid& grid,
                              const GridCell& cell) {
  const int max_k = std::min(grid.max_k, cell.p);
  std::vector<RowDef> rows;
  for (int k = 1; k <= max_k; ++k)
    rows.push_back({"apriori", "Mid", k, kGroupMidPre + k - 1});
  for (int k = 1; k <= max_k; ++k)
    rows.push_back({"apriori", "LP", k, kGroupLp + k - 1});
  rows.push_back({"apriori", "WC", std::nullopt, kGroupWorstCase});
  rows.push_back({"aposteriori", "Mid", std::nullopt, kGroupMid});
  for (int k = 1; k <= max_k; ++k)
    rows.push_back({"aposteriori", "LP", k, kGroupLp + k - 1});
  if (grid.compute_maxmin)
    rows.push_back({"aposteriori", "MM", std::nullopt, kGroupMaxMin});
  if (grid.compute_opt) rows.push_back({"opt", "OPT", std::nullopt, kGroupOpt});
  rows.push_back({"ub", "Mid", std::nullopt, kGroupMid});
  for (int k = 1; k <= max_k; ++k)
    rows.push_back({"ub", "LP", k, kGroupLp + k - 1});
  if (grid.compute_maxmin)
    rows.push_back({"ub", "MM", std::nullopt, kGroupMaxMin});
  rows.push_back({"ub", "WC", std::nullopt, kGroupWorstCase});
  rows.push_back({"lb", "Mid", std::nullopt, kGroupMid});
  for (int k = 1; k <= max_k; ++k)
    rows.push_back({"lb", "LP", k, kGroupLp + k - 1});
  if (grid.compute_maxmin)
    rows.push_back({"lb", "MM", std::nullopt, kGroupMaxMin});
  return rows;
}

struct InstanceOutcome {
  bool ok = false;
  std::string error;
  std::vector<double> values;  // aligned with RowLayout; NaN when skipped
  std::array<double, kNumGroups> group_ms{};
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ElapsedMs() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

#ifndef NDEBUG
void CheckOrdering(bool condition, const char* what) {
  if (!condition)
    throw std::logic_error(std::string("bound ordering violated: ") + what);
}
#endif

InstanceOutcome EvaluateInstance(const ExperimentGrid& grid,
                                 const GridCell& cell,
                                 const std::vector<RowDef>& layout,
                                 bool run_opt, int id) {
  InstanceOutcome outcome;
  outcome.values.assign(layout.size(), kNaN);
  try {
    const Instance instance =
        GenerateInstance(cell.n, cell.p, cell.num_scenarios,
                         InstanceSeed(grid.master_seed, cell, id));
    const UncertaintySet& u = instance.uncertainty;
    const ProblemSpec& spec = instance.problem;
    if (grid.dump_dir) {
      const auto path =
          std::filesystem::path(*grid.dump_dir) /
          ("n" + std::to_string(cell.n) + "_p" + std::to_string(cell.p) + "_N" +
           std::to_string(cell.num_scenarios) + "_inst_" + std::to_string(id) +
           ".txt");
      std::ofstream out(path, std::ios::binary);
      out << SerializeInstance(u, spec);
      if (!out) throw std::runtime_error("cannot write " + path.string());
    }
    const int max_k = std::min(grid.max_k, cell.p);

    std::array<double, 3> mid_pre{kNaN, kNaN, kNaN};
    std::array<std::optional<BoundReport>, 3> lp;
    const Scenario midpoint = MidpointScenario(u);
    for (int k = 1; k <= max_k; ++k) {
      Stopwatch watch;
      mid_pre[k - 1] = FixedScenarioGuarantee(u, midpoint.values(), k);
      outcome.group_ms[kGroupMidPre + k - 1] += watch.ElapsedMs();
    }
    Stopwatch mid_watch;
    const BoundReport mid = AposterioriReport(
        u, spec, midpoint, ConvexWeights::Uniform(u.num_scenarios()),
        u.num_scenarios());
    outcome.group_ms[kGroupMid] += mid_watch.ElapsedMs();
    for (int k = 1; k <= max_k; ++k) {
      Stopwatch watch;
      lp[k - 1] = EvaluateLpScenario(u, spec, k);
      outcome.group_ms[kGroupLp + k - 1] += watch.ElapsedMs();
    }
    std::optional<BoundReport> maxmin;
    if (grid.compute_maxmin) {
      Stopwatch watch;
      const MaxMinResult mm = SolveMaxMin(u, spec);
      BoundReport report;
      report.solution = NominalSolve(spec, mm.scenario);
      report.ub = UpperBound(u, report.solution);
      report.lb = mm.value;
      report.aposteriori = PosterioriRatio(report.ub, mm.value);
      maxmin = std::move(report);
      outcome.group_ms[kGroupMaxMin] += watch.ElapsedMs();
    }
    Stopwatch wc_watch;
    const BoundReport worst = EvaluateWorstCase(u, spec);
    outcome.group_ms[kGroupWorstCase] += wc_watch.ElapsedMs();
    std::optional<double> opt;
    if (run_opt) {
      Stopwatch watch;
      ExactOptions options;
      options.budget = grid.opt_budget;
      opt = ExactMinMax(u, spec, options).opt;
      outcome.group_ms[kGroupOpt] += watch.ElapsedMs();
    }

#ifndef NDEBUG
    const double eps = kCompareTolerance * (1.0 + mid.ub);
    for (int k = 1; k <= max_k; ++k) {
      CheckOrdering(lp[k - 1]->apriori <= mid_pre[k - 1] + eps,
                    "LP-k-Pre <= Mid-k-Pre");
      if (maxmin)
        CheckOrdering(*lp[k - 1]->lb <= *maxmin->lb + eps, "LP-LB <= MM-LB");
      if (opt)
        CheckOrdering(lp[k - 1]->ub <= lp[k - 1]->apriori * *opt + eps,
                      "LP guarantee");
    }
    if (maxmin) CheckOrdering(*mid.lb <= *maxmin->lb + eps, "Mid-LB <= MM-LB");
    if (opt) {
      if (maxmin) CheckOrdering(*maxmin->lb <= *opt + eps, "MM-LB <= OPT");
      CheckOrdering(*opt <= mid.ub + eps, "OPT <= Mid-UB");
      CheckOrdering(worst.ub <= worst.apriori * *opt + eps,
                    "worst-case guarantee");
    }
#endif

    for (std::size_t r = 0; r < layout.size(); ++r) {
      const RowDef& row = layout[r];
      const int ki = row.k.value_or(1) - 1;
      double v = kNaN;
      if (row.metric == "apriori") {
        if (row.method == "Mid") v = mid_pre[ki];
        if (row.method == "LP") v = lp[ki]->apriori;
        if (row.method == "WC") v = worst.apriori;
      } else if (row.metric == "aposteriori") {
        if (row.method == "Mid") v = *mid.aposteriori;
        if (row.method == "LP") v = *lp[ki]->aposteriori;
        if (row.method == "MM") v = *maxmin->aposteriori;
      } else if (row.metric == "opt") {
        v = opt.value_or(kNaN);
      } else if (row.metric == "ub") {
        if (row.method == "Mid") v = mid.ub;
        if (row.method == "LP") v = lp[ki]->ub;
        if (row.method == "MM") v = maxmin->ub;
        if (row.method == "WC") v = worst.ub;
      } else if (row.metric == "lb") {
        if (row.method == "Mid") v = *mid.lb;
        if (row.method == "LP") v = *lp[ki]->lb;
        if (row.method == "MM") v = *maxmin->lb;
      }
      outcome.values[r] = v;
    }
    outcome.ok = true;
  } catch (const std::exception& e) {
    outcome.ok = false;
    outcome.error = "instance " + std::to_string(id) + ": " + e.what();
  }
  return outcome;
}

// Runs fn(i) for i in [0, count) on `workers` threads.
template <typename Fn>
void ParallelFor(int count, int workers, Fn&& fn) {
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

std::string FormatOptional(const std::optional<double>& v) {
  return v ? FormatSignificant(*v, 6) : std::string();
}

std::vector<std::string_view> SplitFields(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = line.find(sep, start);
    fields.push_back(
        line.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) return fields;
    start = end + 1;
  }
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() &&
         (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

int ParseIntField(std::string_view field, int line) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line,
                     "expected an integer, got '" + std::string(field) + "'");
  }
  return value;
}

std::optional<double> ParseOptionalDouble(std::string_view field, int line) {
  if (field.empty()) return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line,
                     "expected a number, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::vector<GridCell> StandardCells() {
  std::vector<GridCell> cells;
  for (int n : {10, 20, 30}) {
    for (int num_scenarios : {2, 5, 10, 50, 100}) {
      cells.push_back({n, 3 * n / 10, num_scenarios});
    }
  }
  return cells;
}

std::vector<GridCell> ParseGridSpec(std::string_view text) {
  if (Trim(text) == "standard") return StandardCells();
  std::vector<GridCell> cells;
  int line = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(";\n", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view entry = text.substr(start, end - start);
    if (const auto hash = entry.find('#'); hash != std::string_view::npos) {
      entry = entry.substr(0, hash);
    }
    entry = Trim(entry);
    if (!entry.empty()) {
      if (entry == "standard") {
        for (const GridCell& cell : StandardCells()) cells.push_back(cell);
      } else {
        const auto fields = SplitFields(entry, ',');
        if (fields.size() != 3)
          throw ParseError(line, "grid cell must be 'n,p,N'");
        GridCell cell{ParseIntField(Trim(fields[0]), line),
                      ParseIntField(Trim(fields[1]), line),
                      ParseIntField(Trim(fields[2]), line)};
        if (cell.n < 1 || cell.p < 1 || cell.p > cell.n ||
            cell.num_scenarios < 1) {
          throw ParseError(line, "grid cell needs 1 <= p <= n and N >= 1");
        }
        cells.push_back(cell);
      }
    }
    if (end < text.size() && text[end] == '\n') ++line;
    start = end + 1;
  }
  return cells;
}

uint64_t InstanceSeed(uint64_t master_seed, const GridCell& cell, int id) {
  return DeriveSeed(
      master_seed,
      {static_cast<uint64_t>(cell.n), static_cast<uint64_t>(cell.p),
       static_cast<uint64_t>(cell.num_scenarios), static_cast<uint64_t>(id)});
}

Instance GenerateInstance(int n, int p, int num_scenarios, uint64_t seed) {
  ProblemSpec spec = ProblemSpec::Selection(n, p);
  if (num_scenarios < 1) throw DomainError("need N >= 1");
  SplitMix64 rng(seed);
  std::vector<std::vector<double>> rows(num_scenarios, std::vector<double>(n));
  for (auto& row : rows) {
    for (double& v : row) v = static_cast<double>(rng.UniformInt(0, 100));
  }
  return Instance{UncertaintySet(std::move(rows)), std::move(spec)};
}

GridResults RunGrid(const ExperimentGrid& grid, const ProgressFn& progress) {
  if (grid.instances_per_cell < 1)
    throw DomainError("instances_per_cell must be >= 1");
  if (grid.max_k < 1) throw DomainError("max_k must be >= 1");
  for (const GridCell& cell : grid.cells) {
    if (cell.n < 1 || cell.p < 1 || cell.p > cell.n || cell.num_scenarios < 1) {
      throw DomainError("invalid grid cell");
    }
  }
  if (grid.dump_dir) std::filesystem::create_directories(*grid.dump_dir);

  GridResults results;
  for (std::size_t c = 0; c < grid.cells.size(); ++c) {
    const GridCell& cell = grid.cells[c];
    const std::vector<RowDef> layout = RowLayout(grid, cell);
    const bool run_opt = grid.compute_opt &&
                         BinomialCoefficient(cell.n, cell.p) <= grid.opt_budget;

    std::vector<InstanceOutcome> outcomes(grid.instances_per_cell);
    ParallelFor(grid.instances_per_cell, grid.workers, [&](int id) {
      outcomes[id] = EvaluateInstance(grid, cell, layout, run_opt, id);
    });

    CellSummary summary{cell, 0, 0, grid.compute_opt && !run_opt, {}};
    for (const InstanceOutcome& outcome : outcomes) {
      if (outcome.ok) {
        ++summary.succeeded;
      } else {
        ++summary.failed;
        if (summary.first_failure.empty())
          summary.first_failure = outcome.error;
      }
    }

    for (std::size_t r = 0; r < layout.size(); ++r) {
      ResultRow row;
      row.n = cell.n;
      row.p = cell.p;
      row.num_scenarios = cell.num_scenarios;
      row.metric = layout[r].metric;
      row.method = layout[r].method;
      row.k = layout[r].k;
      int count = 0;
      double sum = 0.0;
      double ms = 0.0;
      for (const InstanceOutcome& outcome : outcomes) {
        if (!outcome.ok || std::isnan(outcome.values[r])) continue;
        ++count;
        sum += outcome.values[r];
        ms += outcome.group_ms[layout[r].group];
      }
      row.instances = count;
      if (count > 0) {
        const double mean = sum / count;
        double squares = 0.0;
        for (const InstanceOutcome& outcome : outcomes) {
          if (!outcome.ok || std::isnan(outcome.values[r])) continue;
          const double d = outcome.values[r] - mean;
          squares += d * d;
        }
        row.value = mean;
        row.std_error =
            count > 1 ? std::sqrt(squares / (count - 1)) / std::sqrt(count)
                      : 0.0;
        if (grid.record_runtime) row.runtime_ms = ms;
      }
      results.rows.push_back(std::move(row));
    }
    if (progress) progress(static_cast<int>(c), summary);
    results.cells.push_back(std::move(summary));
  }
  return results;
}

std::string EmitCsv(std::span<const ResultRow> rows) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const ResultRow& row : rows) {
    out << row.n << "," << row.p << "," << row.num_scenarios << ","
        << row.metric << "," << row.method << ","
        << (row.k ? std::to_string(*row.k) : std::string()) << ","
        << FormatOptional(row.value) << "," << FormatOptional(row.std_error)
        << "," << row.instances << "," << FormatOptional(row.runtime_ms)
        << "\n";
  }
  return out.str();
}

std::vector<ResultRow> ParseCsv(std::string_view text) {
  std::vector<ResultRow> rows;
  int line_number = 0;
  std::size_t start = 0;
  bool header_seen = false;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = Trim(text.substr(start, end - start));
    start = end + 1;
    ++line_number;
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kCsvHeader)
        throw ParseError(line_number, "unexpected CSV header");
      header_seen = true;
      continue;
    }
    const auto fields = SplitFields(line, ',');
    if (fields.size() != 10)
      throw ParseError(line_number, "expected 10 CSV fields");
    ResultRow row;
    row.n = ParseIntField(fields[0], line_number);
    row.p = ParseIntField(fields[1], line_number);
    row.num_scenarios = ParseIntField(fields[2], line_number);
    row.metric = std::string(fields[3]);
    row.method = std::string(fields[4]);
    if (!fields[5].empty()) row.k = ParseIntField(fields[5], line_number);
    row.value = ParseOptionalDouble(fields[6], line_number);
    row.std_error = ParseOptionalDouble(fields[7], line_number);
    row.instances = ParseIntField(fields[8], line_number);
    row.runtime_ms = ParseOptionalDouble(fields[9], line_number);
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw ParseError(0, "missing CSV header");
  return rows;
}

}  // namespace robustkit
