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

// A small dense two-phase simplex solver with Bland's anti-cycling rule,
// plus a row-generation driver for LPs whose constraint family is only
// available through a separation routine.
//
// Problems are stated as
//
//   maximize    c x
//   subject to  a_r x  (<= | =)  b_r     for each row r
//               lower_j <= x_j <= upper_j
//
// Bounds default to [0, +inf); either side may be infinite.

#ifndef ROBUSTKIT_LP_H_
#define ROBUSTKIT_LP_H_

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace robustkit {

enum class Relation { kLessEqual, kEqual };

struct LinearConstraint {
  std::vector<double> coefficients;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

class LinearProgram {
 public:
  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  explicit LinearProgram(int num_variables);

  int num_variables() const { return static_cast<int>(objective_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }

  void set_objective_coefficient(int var, double value);
  void set_objective(std::vector<double> objective);
  // Either bound may be +-kInfinity. Throws DomainError if lower is +inf or
  // upper is -inf.
  void set_bounds(int var, double lower, double upper);

  // Throws DomainError on a size mismatch or a non-finite entry.
  void AddConstraint(LinearConstraint constraint);

  const std::vector<double>& objective() const { return objective_; }
  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }
  double lower_bound(int var) const { return lower_[var]; }
  double upper_bound(int var) const { return upper_[var]; }

 private:
  std::vector<double> objective_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<LinearConstraint> constraints_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* ToString(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  // Primal values; filled only when status is kOptimal.
  std::vector<double> values;
  double objective = 0.0;
  // Simplex pivots over all phases (and all rounds of row generation).
  int iterations = 0;
  // Rows appended by SolveLpWithRows.
  int generated_rows = 0;
  // Constraints held in the tableau at the final solve.
  int working_rows = 0;
};

struct LpOptions {
  // With more constraints than this, the simplex runs on a working subset
  // (equalities first) and adds the most violated remaining rows, or rows
  // blocking an unbounded ray, until every row holds. The answer is the
  // optimum over all rows either way.
  int working_set_threshold = 200;
};

// Deterministic: identical input yields identical pivots and output. Throws
// NumericalError if the pivot limit is hit or the final point fails the
// feasibility check.
LpSolution SolveLp(const LinearProgram& lp, const LpOptions& options = {});

// Returns a constraint violated by the given primal point, or nullopt.
using RowSource = std::function<std::optional<LinearConstraint>(
    std::span<const double> primal)>;

// Solves `lp`, asks `row_source` for a violated row, appends it and
// re-solves until no row is returned. The implicit family must be finite.
LpSolution SolveLpWithRows(LinearProgram lp, const RowSource& row_source);

// Largest violation of any row or bound at `x`, scaled per row by
// 1 + |rhs| + sum_j |a_j x_j|.
double MaxScaledViolation(const LinearProgram& lp, std::span<const double> x);

}  // namespace robustkit

#endif  // ROBUSTKIT_LP_H_
