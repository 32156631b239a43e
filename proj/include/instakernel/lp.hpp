// Copyright 2026 The instakernel Authors
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

#ifndef INSTAKERNEL_LP_HPP_
#define INSTAKERNEL_LP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "instakernel/exactmath.hpp"

namespace instakernel {

// Incremental exact simplex tableau.
//
// Unknowns are the variables (free) followed by one unknown per added
// constraint (restricted to be >= 0). Every unknown is either a column,
// sitting at value 0, or a row
//
//   denom * u = constant + sum_k coeff[k] * column_k
//
// stored fraction-free over BigInt. Adding a constraint restores feasibility
// right away, so the tableau is always either feasible or marked empty.
// Pivot choices follow Bland's rule on unknown indices.
class Simplex {
 public:
  explicit Simplex(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_constraints() const { return con_unknown_.size(); }
  bool empty() const { return empty_; }

  // coeffs . x + constant >= 0. Returns false once the system is empty.
  bool add_inequality(std::span<const BigInt> coeffs, const BigInt& constant);
  // coeffs . x + constant == 0, as a pair of opposite inequalities.
  bool add_equality(std::span<const BigInt> coeffs, const BigInt& constant);

  // Moves the current point to a vertex: afterwards every column is a
  // constraint unknown sitting at 0. Throws InputError when the feasible
  // region contains a line.
  void to_vertex();

  enum class Status { kOptimal, kUnbounded, kEmpty };

  // Minimizes objective . x over the current system, leaving the tableau at
  // an optimal vertex.
  Status minimize(std::span<const BigInt> objective);

  // Current point.
  RatVector sample() const;
  Rat sample_value(std::size_t var) const;

  // True when the constraint is a row unknown, i.e. not forced tight by the
  // current basis.
  bool constraint_is_basic(std::size_t constraint) const;

  std::size_t pivot_count() const { return pivots_; }

 private:
  struct Row {
    BigInt denom;
    BigInt constant;
    std::vector<BigInt> coeff;  // one per column
    std::size_t unknown;
  };

  enum class Kind : unsigned char { kVar, kConstraint, kObjective };
  struct Unknown {
    Kind kind;
    bool restricted;
    bool in_row;
    std::size_t pos;  // row index or column index
  };

  std::size_t add_row(std::span<const BigInt> coeffs, const BigInt& constant,
                      Kind kind, bool restricted);
  void pivot(std::size_t row, std::size_t col);
  void normalize(Row& r);
  bool restore_row(std::size_t row);
  // Returns the row blocking movement of `col` in `direction`, or none.
  std::optional<std::size_t> blocking_row(std::size_t col, int direction,
                                          std::optional<std::size_t> extra) const;
  int sign_of_row(std::size_t row) const { return sgn(rows_[row].constant); }

  std::size_t num_vars_;
  std::vector<Unknown> unknowns_;
  std::vector<std::size_t> con_unknown_;   // constraint id -> unknown index
  std::vector<Row> rows_;
  std::vector<std::size_t> col_unknown_;   // column -> unknown index
  bool empty_ = false;
  std::size_t pivots_ = 0;
};

// min objective . x  s.t.  a x = b, 0 <= x <= upper.
struct StandardLp {
  IntMatrix a;
  IntVector b;
  std::optional<IntVector> upper;
  std::optional<IntVector> objective;
};

struct LpVertex {
  RatVector values;
  std::vector<std::size_t> basis;  // columns whose bound x_j >= 0 is not tight
};

enum class LpStatus { kFeasible, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  LpVertex vertex;  // meaningful when status == kFeasible
};

// Exact simplex with Bland's rule; deterministic. Without an objective any
// vertex is returned.
LpResult solve_vertex(const StandardLp& lp);

}  // namespace instakernel

#endif  // INSTAKERNEL_LP_HPP_
