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

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>
#include <utility>

#include "robustkit/core.h"

namespace robustkit {
namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kOptimalityTolerance = 1e-9;
constexpr double kDropTolerance = 1e-13;
// Post-solve acceptance threshold for MaxScaledViolation. Tighter than the
// user-facing tolerance; anything above it means the tableau drifted.
constexpr double kAcceptViolation = 1e-7;

bool IsFinite(double v) { return std::isfinite(v); }

enum class RowType { kLessEqual, kGreaterEqual, kEqual };

struct StandardRow {
  std::vector<double> coefficients;  // over structural columns
  RowType type;
  double rhs;  // >= 0
};

// Maps an original variable onto nonnegative structural columns:
// x = offset + sum sign * y_col.
struct VariableMap {
  double offset = 0.0;
  int column = -1;
  double sign = 1.0;
  int negative_column = -1;  // second column for free variables
};

// Dense tableau over m rows. Columns are ordered structural, slack/surplus,
// artificial; Bland's rule breaks ties by that order.
class Tableau {
 public:
  Tableau(std::vector<StandardRow> rows, int num_structural)
      : num_structural_(num_structural) {
    int num_slack = 0;
    int num_artificial = 0;
    for (const auto& row : rows) {
      if (row.type != RowType::kEqual) ++num_slack;
      if (row.type != RowType::kLessEqual) ++num_artificial;
    }
    num_columns_ = num_structural + num_slack + num_artificial;
    first_artificial_ = num_structural + num_slack;
    const int m = static_cast<int>(rows.size());
    rows_.assign(m, std::vector<double>(num_columns_, 0.0));
    rhs_.resize(m);
    basis_.resize(m);
    int next_slack = num_structural;
    int next_artificial = first_artificial_;
    for (int i = 0; i < m; ++i) {
      std::copy(rows[i].coefficients.begin(), rows[i].coefficients.end(),
                rows_[i].begin());
      rhs_[i] = rows[i].rhs;
      switch (rows[i].type) {
        case RowType::kLessEqual:
          rows_[i][next_slack] = 1.0;
          basis_[i] = next_slack++;
          break;
        case RowType::kGreaterEqual:
          rows_[i][next_slack++] = -1.0;
          rows_[i][next_artificial] = 1.0;
          basis_[i] = next_artificial++;
          break;
        case RowType::kEqual:
          rows_[i][next_artificial] = 1.0;
          basis_[i] = next_artificial++;
          break;
      }
    }
    allowed_columns_ = num_columns_;
  }

  int num_rows() const { return static_cast<int>(rows_.size()); }
  bool has_artificials() const { return first_artificial_ < num_columns_; }
  int iterations() const { return iterations_; }

  // Phase 1: maximize -sum(artificials). Returns false if infeasible.
  bool RunPhaseOne(double infeasibility_tolerance) {
    reduced_.assign(num_columns_, 0.0);
    value_ = 0.0;
    for (int i = 0; i < num_rows(); ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (int j = 0; j < first_artificial_; ++j) reduced_[j] += rows_[i][j];
      value_ -= rhs_[i];
    }
    allowed_columns_ = num_columns_;
    if (Iterate() != LpStatus::kOptimal) {
      throw NumericalError("phase one reported an unbounded ray");
    }
    if (value_ < -infeasibility_tolerance) return false;
    DriveOutArtificials();
    for (auto& row : rows_) row.resize(first_artificial_);
    num_columns_ = first_artificial_;
    allowed_columns_ = num_columns_;
    return true;
  }

  // Phase 2 over the non-artificial columns with structural costs `cost`.
  LpStatus RunPhaseTwo(std::span<const double> cost) {
    if (has_artificials()) {
      for (auto& row : rows_) row.resize(first_artificial_);
      num_columns_ = first_artificial_;
    }
    allowed_columns_ = num_columns_;
    reduced_.assign(num_columns_, 0.0);
    std::copy(cost.begin(), cost.end(), reduced_.begin());
    value_ = 0.0;
    for (int i = 0; i < num_rows(); ++i) {
      const int b = basis_[i];
      const double cb = b < num_structural_ ? cost[b] : 0.0;
      if (cb == 0.0) continue;
      for (int j = 0; j < num_columns_; ++j) reduced_[j] -= cb * rows_[i][j];
      value_ += cb * rhs_[i];
    }
    const LpStatus status = Iterate();
#ifndef NDEBUG
    if (status == LpStatus::kOptimal) {
      for (int j = 0; j < allowed_columns_; ++j) {
        assert(reduced_[j] <= kOptimalityTolerance);
      }
    }
#endif
    return status;
  }

  // Direction of the unbounded ray found by the last phase two, over the
  // structural columns.
  std::vector<double> StructuralRay() const {
    std::vector<double> d(num_structural_, 0.0);
    if (unbounded_column_ < 0) return d;
    if (unbounded_column_ < num_structural_) d[unbounded_column_] = 1.0;
    for (int i = 0; i < num_rows(); ++i) {
      if (basis_[i] < num_structural_)
        d[basis_[i]] = -rows_[i][unbounded_column_];
    }
    return d;
  }

  std::vector<double> StructuralValues() const {
    std::vector<double> y(num_structural_, 0.0);
    for (int i = 0; i < num_rows(); ++i) {
      if (basis_[i] < num_structural_) y[basis_[i]] = rhs_[i];
    }
    return y;
  }

 private:
  LpStatus Iterate() {
    const int limit = 200 * (num_rows() + num_columns_) + 1000;
    for (;;) {
      int entering = -1;
      for (int j = 0; j < allowed_columns_; ++j) {
        if (reduced_[j] > kOptimalityTolerance) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return LpStatus::kOptimal;

      int leaving = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < num_rows(); ++i) {
        const double a = rows_[i][entering];
        if (a <= kPivotTolerance) continue;
        const double ratio = rhs_[i] / a;
        if (leaving < 0 || ratio < best_ratio - 1e-12 * (1.0 + best_ratio)) {
          leaving = i;
          best_ratio = ratio;
        } else if (ratio <= best_ratio + 1e-12 * (1.0 + best_ratio) &&
                   basis_[i] < basis_[leaving]) {
          leaving = i;
          best_ratio = std::min(best_ratio, ratio);
        }
      }
      if (leaving < 0) {
        unbounded_column_ = entering;
        return LpStatus::kUnbounded;
      }
      Pivot(leaving, entering);
      if (++iterations_ > limit) {
        throw NumericalError("simplex pivot limit exceeded");
      }
    }
  }

  void Pivot(int r, int c) {
    std::vector<double>& pivot_row = rows_[r];
    const double inv = 1.0 / pivot_row[c];
    for (int j = 0; j < num_columns_; ++j) pivot_row[j] *= inv;
    pivot_row[c] = 1.0;
    rhs_[r] *= inv;
    if (std::abs(rhs_[r]) < kDropTolerance) rhs_[r] = 0.0;

    // Nonzero pattern of the pivot row; most rows here are sparse.
    std::vector<int> nonzero;
    nonzero.reserve(num_columns_);
    for (int j = 0; j < num_columns_; ++j) {
      if (pivot_row[j] != 0.0) nonzero.push_back(j);
    }

    for (int i = 0; i < num_rows(); ++i) {
      if (i == r) continue;
      std::vector<double>& row = rows_[i];
      const double factor = row[c];
      if (factor == 0.0) continue;
      for (int j : nonzero) {
        double v = row[j] - factor * pivot_row[j];
        if (std::abs(v) < kDropTolerance) v = 0.0;
        row[j] = v;
      }
      row[c] = 0.0;
      double b = rhs_[i] - factor * rhs_[r];
      if (b < 0.0 && b > -kFeasibilityTolerance) b = 0.0;
      if (std::abs(b) < kDropTolerance) b = 0.0;
      rhs_[i] = b;
    }
    const double dc = reduced_[c];
    if (dc != 0.0) {
      value_ += dc * rhs_[r];
      for (int j : nonzero) reduced_[j] -= dc * pivot_row[j];
      reduced_[c] = 0.0;
    }
    basis_[r] = c;
  }

  // Pivots zero-level artificials out of the basis; rows where that is
  // impossible are linearly dependent and are dropped.
  void DriveOutArtificials() {
    for (int i = 0; i < num_rows();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      int column = -1;
      double best = kPivotTolerance;
      for (int j = 0; j < first_artificial_; ++j) {
        if (std::abs(rows_[i][j]) > best) {
          best = std::abs(rows_[i][j]);
          column = j;
        }
      }
      if (column >= 0) {
        Pivot(i, column);
        ++iterations_;
        ++i;
      } else {
        rows_.erase(rows_.begin() + i);
        rhs_.erase(rhs_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
  }

  int num_structural_;
  int num_columns_ = 0;
  int first_artificial_ = 0;
  int allowed_columns_ = 0;
  std::vector<std::vector<double>> rows_;
  std::vector<double> rhs_;
  std::vector<int> basis_;
  std::vector<double> reduced_;
  double value_ = 0.0;
  int iterations_ = 0;
  int unbounded_column_ = -1;
};

// The LP after substituting bounds away so every structural column is >= 0.
struct StandardForm {
  std::vector<VariableMap> maps;
  int num_structural = 0;
  std::vector<double> cost;
  std::vector<std::pair<int, double>> column_upper;  // column, width
  bool bounds_infeasible = false;
};

StandardForm Standardize(const LinearProgram& lp) {
  const int n = lp.num_variables();
  StandardForm form;
  form.maps.resize(n);
  for (int v = 0; v < n; ++v) {
    const double lo = lp.lower_bound(v);
    const double hi = lp.upper_bound(v);
    if (lo > hi) form.bounds_infeasible = true;
    VariableMap& map = form.maps[v];
    if (IsFinite(lo)) {
      map.offset = lo;
      map.column = form.num_structural++;
      if (IsFinite(hi)) form.column_upper.emplace_back(map.column, hi - lo);
    } else if (IsFinite(hi)) {
      map.offset = hi;
      map.sign = -1.0;
      map.column = form.num_structural++;
    } else {
      map.column = form.num_structural++;
      map.negative_column = form.num_structural++;
    }
  }
  form.cost.assign(form.num_structural, 0.0);
  for (int v = 0; v < n; ++v) {
    form.cost[form.maps[v].column] += lp.objective()[v] * form.maps[v].sign;
    if (form.maps[v].negative_column >= 0) {
      form.cost[form.maps[v].negative_column] -= lp.objective()[v];
    }
  }
  return form;
}

StandardRow MakeRow(std::vector<double> coefficients, Relation relation,
                    double rhs) {
  RowType type =
      relation == Relation::kEqual ? RowType::kEqual : RowType::kLessEqual;
  if (rhs < 0.0) {
    for (double& a : coefficients) a = -a;
    rhs = -rhs;
    if (type == RowType::kLessEqual) type = RowType::kGreaterEqual;
  }
  return {std::move(coefficients), type, rhs};
}

StandardRow ToStandardRow(const StandardForm& form,
                          const LinearConstraint& constraint) {
  std::vector<double> coefficients(form.num_structural, 0.0);
  double rhs = constraint.rhs;
  for (std::size_t v = 0; v < form.maps.size(); ++v) {
    const double a = constraint.coefficients[v];
    if (a == 0.0) continue;
    const VariableMap& map = form.maps[v];
    rhs -= a * map.offset;
    coefficients[map.column] += a * map.sign;
    if (map.negative_column >= 0) coefficients[map.negative_column] -= a;
  }
  return MakeRow(std::move(coefficients), constraint.relation, rhs);
}

// Maps structural values (or a structural direction, with offsets off) back
// to the original variables.
std::vector<double> ToOriginal(const StandardForm& form,
                               std::span<const double> y, bool offsets) {
  std::vector<double> x(form.maps.size());
  for (std::size_t v = 0; v < form.maps.size(); ++v) {
    const VariableMap& map = form.maps[v];
    double value = (offsets ? map.offset : 0.0) + map.sign * y[map.column];
    if (map.negative_column >= 0) value -= y[map.negative_column];
    x[v] = value;
  }
  return x;
}

struct SubsetResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> values;
  std::vector<double> ray;  // set when unbounded
  int iterations = 0;
};

// Two-phase simplex over the constraints listed in `subset` plus the
// variable bounds.
SubsetResult SolveSubset(const LinearProgram& lp, const StandardForm& form,
                         std::span<const int> subset) {
  std::vector<StandardRow> rows;
  rows.reserve(subset.size() + form.column_upper.size());
  for (int r : subset) rows.push_back(ToStandardRow(form, lp.constraints()[r]));
  for (const auto& [column, width] : form.column_upper) {
    std::vector<double> coefficients(form.num_structural, 0.0);
    coefficients[column] = 1.0;
    rows.push_back(
        MakeRow(std::move(coefficients), Relation::kLessEqual, width));
  }
  double max_rhs = 0.0;
  for (const auto& row : rows) max_rhs = std::max(max_rhs, row.rhs);

  SubsetResult result;
  Tableau tableau(std::move(rows), form.num_structural);
  if (tableau.has_artificials() &&
      !tableau.RunPhaseOne(kFeasibilityTolerance * (1.0 + max_rhs))) {
    result.iterations = tableau.iterations();
    return result;
  }
  result.status = tableau.RunPhaseTwo(form.cost);
  result.iterations = tableau.iterations();
  result.values = ToOriginal(form, tableau.StructuralValues(), true);
  if (result.status == LpStatus::kUnbounded) {
    result.ray = ToOriginal(form, tableau.StructuralRay(), false);
  }
  return result;
}

// (a x - b) / (1 + |b| + sum_j |a_j x_j|), as in MaxScaledViolation.
double ScaledViolation(const LinearConstraint& c, std::span<const double> x) {
  double activity = 0.0;
  double scale = 1.0 + std::abs(c.rhs);
  for (std::size_t v = 0; v < x.size(); ++v) {
    activity += c.coefficients[v] * x[v];
    scale += std::abs(c.coefficients[v] * x[v]);
  }
  double violation = activity - c.rhs;
  if (c.relation == Relation::kEqual) violation = std::abs(violation);
  return violation / scale;
}

// a d relative to sum_j |a_j d_j|; positive means the row limits the ray.
double RayBlocking(const LinearConstraint& c, std::span<const double> d) {
  double activity = 0.0;
  double scale = 0.0;
  for (std::size_t v = 0; v < d.size(); ++v) {
    activity += c.coefficients[v] * d[v];
    scale += std::abs(c.coefficients[v] * d[v]);
  }
  return scale > 0.0 ? activity / scale : 0.0;
}

}  // namespace

LinearProgram::LinearProgram(int num_variables) {
  if (num_variables < 1) throw DomainError("LP needs at least one variable");
  objective_.assign(num_variables, 0.0);
  lower_.assign(num_variables, 0.0);
  upper_.assign(num_variables, kInfinity);
}

void LinearProgram::set_objective_coefficient(int var, double value) {
  if (!IsFinite(value)) throw DomainError("objective coefficient not finite");
  objective_.at(var) = value;
}

void LinearProgram::set_objective(std::vector<double> objective) {
  if (objective.size() != objective_.size()) {
    throw DomainError("objective length mismatch");
  }
  for (double v : objective) {
    if (!IsFinite(v)) throw DomainError("objective coefficient not finite");
  }
  objective_ = std::move(objective);
}

void LinearProgram::set_bounds(int var, double lower, double upper) {
  if (std::isnan(lower) || std::isnan(upper) || lower == kInfinity ||
      upper == -kInfinity) {
    throw DomainError("invalid variable bounds");
  }
  lower_.at(var) = lower;
  upper_.at(var) = upper;
}

void LinearProgram::AddConstraint(LinearConstraint constraint) {
  if (constraint.coefficients.size() != objective_.size()) {
    throw DomainError("constraint has " +
                      std::to_string(constraint.coefficients.size()) +
                      " coefficients, LP has " +
                      std::to_string(objective_.size()) + " variables");
  }
  if (!IsFinite(constraint.rhs)) throw DomainError("rhs not finite");
  for (double v : constraint.coefficients) {
    if (!IsFinite(v)) throw DomainError("coefficient not finite");
  }
  constraints_.push_back(std::move(constraint));
}

const char* ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

LpSolution SolveLp(const LinearProgram& lp, const LpOptions& options) {
  LpSolution solution;
  const StandardForm form = Standardize(lp);
  if (form.bounds_infeasible) return solution;

  const int m = lp.num_constraints();
  std::vector<int> working;
  std::vector<char> in_working(m, 0);
  const bool all_rows = m <= options.working_set_threshold;
  for (int r = 0; r < m; ++r) {
    if (all_rows || lp.constraints()[r].relation == Relation::kEqual) {
      working.push_back(r);
      in_working[r] = 1;
    }
  }
  const int batch = std::max(16, lp.num_variables());

  SubsetResult result;
  for (;;) {
    result = SolveSubset(lp, form, working);
    solution.iterations += result.iterations;
    if (result.status == LpStatus::kInfeasible) break;
    if (static_cast<int>(working.size()) == m) break;

    // Rows outside the working set that cut off the point or the ray.
    std::vector<std::pair<double, int>> candidates;
    for (int r = 0; r < m; ++r) {
      if (in_working[r]) continue;
      const LinearConstraint& c = lp.constraints()[r];
      double score = ScaledViolation(c, result.values);
      if (score <= kFeasibilityTolerance) score = 0.0;
      if (result.status == LpStatus::kUnbounded) {
        const double blocking = RayBlocking(c, result.ray);
        if (blocking > kFeasibilityTolerance) score = std::max(score, blocking);
      }
      if (score > 0.0) candidates.emplace_back(-score, r);
    }
    if (candidates.empty()) break;
    const std::size_t take = std::min<std::size_t>(batch, candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + take,
                      candidates.end());
    for (std::size_t i = 0; i < take; ++i) {
      in_working[candidates[i].second] = 1;
      working.push_back(candidates[i].second);
    }
    std::sort(working.begin(), working.end());
  }

  solution.status = result.status;
  solution.working_rows = static_cast<int>(working.size());
  if (solution.status != LpStatus::kOptimal) return solution;
  solution.values = std::move(result.values);
  for (int v = 0; v < lp.num_variables(); ++v) {
    solution.objective += lp.objective()[v] * solution.values[v];
  }
  if (MaxScaledViolation(lp, solution.values) > kAcceptViolation) {
    throw NumericalError("simplex returned a point violating its constraints");
  }
  return solution;
}

LpSolution SolveLpWithRows(LinearProgram lp, const RowSource& row_source) {
  int iterations = 0;
  int generated = 0;
  for (;;) {
    LpSolution solution = SolveLp(lp);
    iterations += solution.iterations;
    solution.iterations = iterations;
    solution.generated_rows = generated;
    if (solution.status != LpStatus::kOptimal) return solution;
    std::optional<LinearConstraint> row = row_source(solution.values);
    if (!row) return solution;
    lp.AddConstraint(std::move(*row));
    ++generated;
  }
}

double MaxScaledViolation(const LinearProgram& lp, std::span<const double> x) {
  double worst = 0.0;
  for (int v = 0; v < lp.num_variables(); ++v) {
    const double scale = 1.0 + std::abs(x[v]);
    worst = std::max(worst, (lp.lower_bound(v) - x[v]) / scale);
    worst = std::max(worst, (x[v] - lp.upper_bound(v)) / scale);
  }
  for (const LinearConstraint& c : lp.constraints()) {
    worst = std::max(worst, ScaledViolation(c, x));
  }
  return worst;
}

}  // namespace robustkit
