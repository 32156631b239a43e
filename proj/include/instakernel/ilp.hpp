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

#ifndef INSTAKERNEL_ILP_HPP_
#define INSTAKERNEL_ILP_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "instakernel/exactmath.hpp"

namespace instakernel {

// a x = b, lower <= x <= upper, x integral.
struct FeasIlp {
  IntMatrix a;
  IntVector b;
  IntVector lower;                 // empty means all zero
  std::optional<IntVector> upper;  // absent means unbounded above

  std::size_t rows() const { return a.rows(); }
  std::size_t cols() const { return a.cols(); }
  IntVector lower_or_zero() const;
  void validate() const;
  bool satisfied_by(std::span<const BigInt> x) const;
};

// A linear cut  coeffs . x + constant >= 0  (or == 0).
struct Cut {
  IntVector coeffs;
  BigInt constant;
  bool equality = false;
};

// Called with an LP-relaxation point; returns cuts it violates, or nothing.
// Cuts are treated as globally valid.
using Separator = std::function<std::vector<Cut>(const RatVector&)>;

struct IlpOptions {
  std::optional<IntVector> objective;  // minimized
  Separator separator;
  std::optional<std::uint64_t> node_limit;  // default Budget::branch_nodes
};

enum class IlpStatus { kOptimal, kInfeasible };

struct IlpResult {
  IlpStatus status = IlpStatus::kInfeasible;
  IntVector solution;
  std::uint64_t nodes = 0;
  std::size_t cuts = 0;
};

// Depth-first branch-and-bound over the exact LP relaxation. Branches on the
// lowest-index fractional variable, floor side first. `box` supplies upper
// bounds and overrides ilp.upper where given. Throws BudgetExceeded when the
// node limit is hit.
IlpResult solve_ilp(const FeasIlp& ilp, const IntVector& box,
                    const IlpOptions& options = {});

// Every integer point of the (finitely boxed) system, lexicographically
// sorted. Uses a meet-in-the-middle join on partial row sums, so the cost is
// about the square root of the box volume plus the output size.
std::vector<IntVector> enumerate_feasible(
    const FeasIlp& ilp, std::optional<std::uint64_t> work_limit = std::nullopt);

// Same search, stopping at the first point found.
std::optional<IntVector> find_feasible_point(
    const FeasIlp& ilp, std::optional<std::uint64_t> work_limit = std::nullopt);

}  // namespace instakernel

#endif  // INSTAKERNEL_ILP_HPP_
