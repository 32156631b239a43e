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

#include "instakernel/knapfam.hpp"

#include <algorithm>

#include "instakernel/simd/kernels.hpp"

namespace instakernel {
namespace {

void require_positive(const IntVector& v, const char* what) {
  for (const auto& x : v) {
    if (x <= 0) throw InputError(std::string(what) + " must be positive");
  }
}

void require_nonnegative(const IntVector& v, const char* what) {
  for (const auto& x : v) {
    if (x < 0) throw InputError(std::string(what) + " must be nonnegative");
  }
}

BigInt sum_of(const IntVector& v) {
  BigInt s = 0;
  for (const auto& x : v) s += x;
  return s;
}

BigInt selected_sum(std::span<const BigInt> v, const std::vector<bool>& pick) {
  BigInt s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (pick[i]) s += v[i];
  }
  return s;
}

// Reduces the row (coeffs; rhs) at radius 1 and splits the result.
std::pair<IntVector, BigInt> reduce_row(std::span<const BigInt> coeffs,
                                        const BigInt& rhs,
                                        const ReduceOptions& options,
                                        bool& minimal) {
  IntVector w(coeffs.begin(), coeffs.end());
  w.push_back(rhs);
  ReducedVector r = reduce_vector(w, BigInt(1), options);
  minimal = minimal && r.minimal;
  BigInt last = r.reduced.back();
  r.reduced.pop_back();
  return {std::move(r.reduced), std::move(last)};
}

template <typename F>
std::vector<std::uint32_t> scan_subsets(std::size_t n, F&& feasible) {
  if (n > 30) throw BudgetExceeded("subset scan: more than 30 items");
  require_within(std::uint64_t{1} << n, Budget::defaults().feasible_search,
                 "subset scan");
  std::vector<std::uint32_t> out;
  std::vector<bool> pick(n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) pick[i] = (mask >> i) & 1U;
    if (feasible(pick)) out.push_back(mask);
  }
  return out;
}

std::size_t dp_cells(const BigInt& capacity) {
  const BigInt cells = capacity + 1;
  if (cells > Budget::defaults().enumeration) {
    throw BudgetExceeded("dynamic program: " + cells.get_str() +
                         " cells exceed budget " +
                         std::to_string(Budget::defaults().enumeration));
  }
  return static_cast<std::size_t>(cells.get_ui());
}

}  // namespace

void KnapsackInstance::validate() const {
  if (weights.size() != profits.size()) throw DimensionError("knapsack: weights and profits differ in length");
  require_positive(weights, "knapsack weights");
  require_nonnegative(profits, "knapsack profits");
  if (capacity < 0) throw InputError("knapsack capacity must be nonnegative");
}

std::size_t KnapsackInstance::bit_size() const {
  return instakernel::bit_size(weights) + instakernel::bit_size(profits) +
         instakernel::bit_size(capacity) + instakernel::bit_size(target);
}

bool KnapsackInstance::feasible(const std::vector<bool>& pick) const {
  return selected_sum(weights, pick) <= capacity &&
         selected_sum(profits, pick) >= target;
}

void SubsetSumInstance::validate() const { require_positive(values, "subset-sum values"); }

std::size_t SubsetSumInstance::bit_size() const {
  return instakernel::bit_size(values) + instakernel::bit_size(target);
}

bool SubsetSumInstance::feasible(const std::vector<bool>& pick) const {
  return selected_sum(values, pick) == target;
}

void UnboundedKnapsackInstance::validate() const {
  if (weights.size() != profits.size()) throw DimensionError("uks: weights and profits differ in length");
  require_positive(weights, "uks weights");
  require_nonnegative(profits, "uks profits");
  if (capacity < 0) throw InputError("uks capacity must be nonnegative");
}

std::size_t UnboundedKnapsackInstance::bit_size() const {
  return instakernel::bit_size(weights) + instakernel::bit_size(profits) +
         instakernel::bit_size(capacity) + instakernel::bit_size(target);
}

void MdKnapsackInstance::validate() const {
  if (weights.cols() != profits.size() || weights.rows() != capacities.size()) {
    throw DimensionError("md-knapsack: inconsistent dimensions");
  }
  require_nonnegative(weights.entries(), "md-knapsack weights");
  require_nonnegative(profits, "md-knapsack profits");
  require_nonnegative(capacities, "md-knapsack capacities");
}

std::size_t MdKnapsackInstance::bit_size() const {
  return instakernel::bit_size(weights) + instakernel::bit_size(profits) +
         instakernel::bit_size(capacities) + instakernel::bit_size(target);
}

bool MdKnapsackInstance::feasible(const std::vector<bool>& pick) const {
  for (std::size_t i = 0; i < weights.rows(); ++i) {
    if (selected_sum(weights.row(i), pick) > capacities[i]) return false;
  }
  return selected_sum(profits, pick) >= target;
}

KnapsackIlp knapsack_to_ilp(const KnapsackInstance& inst) {
  inst.validate();
  const std::size_t n = inst.weights.size();
  KnapsackIlp out;
  out.ilp.a = IntMatrix(2, n + 2);
  for (std::size_t j = 0; j < n; ++j) {
    out.ilp.a(0, j) = inst.weights[j];
    out.ilp.a(1, j) = inst.profits[j];
  }
  out.ilp.a(0, n) = 1;
  out.ilp.a(1, n + 1) = -1;
  out.ilp.b = {inst.capacity, inst.target};
  const BigInt surplus = sum_of(inst.profits) - inst.target;
  out.trivially_infeasible = surplus < 0;
  out.ilp.upper = IntVector(n + 2, BigInt(1));
  (*out.ilp.upper)[n] = inst.capacity;
  (*out.ilp.upper)[n + 1] = surplus > 0 ? surplus : BigInt(0);
  return out;
}

std::size_t knapsack_size_bound(std::size_t rows, std::size_t n) {
  const BigInt b = equivalent_vector_l1_bound(n + 1, BigInt(1));
  return rows * (n + 1) * (1 + bit_length(b));
}

KnapsackReduction static_equiv_knapsack(const KnapsackInstance& inst,
                                        const ReduceOptions& options) {
  inst.validate();
  KnapsackReduction out;
  out.original = inst;
  auto [w, c] = reduce_row(inst.weights, inst.capacity, options, out.minimal);
  auto [p, t] = reduce_row(inst.profits, inst.target, options, out.minimal);
  out.reduced = {std::move(w), std::move(p), std::move(c), std::move(t)};
  out.bits = {inst.bit_size(), out.reduced.bit_size(),
              knapsack_size_bound(2, inst.weights.size())};
  return out;
}

SubsetSumReduction static_equiv_subsetsum(const SubsetSumInstance& inst,
                                          const ReduceOptions& options) {
  inst.validate();
  SubsetSumReduction out;
  out.original = inst;
  auto [v, t] = reduce_row(inst.values, inst.target, options, out.minimal);
  out.reduced = {std::move(v), std::move(t)};
  out.bits = {inst.bit_size(), out.reduced.bit_size(),
              knapsack_size_bound(1, inst.values.size())};
  return out;
}

MdKnapsackReduction static_equiv_mdknapsack(const MdKnapsackInstance& inst,
                                            const ReduceOptions& options) {
  inst.validate();
  MdKnapsackReduction out;
  out.original = inst;
  out.reduced = inst;
  for (std::size_t i = 0; i < inst.weights.rows(); ++i) {
    auto [w, c] = reduce_row(inst.weights.row(i), inst.capacities[i], options,
                             out.minimal);
    for (std::size_t j = 0; j < w.size(); ++j) out.reduced.weights(i, j) = w[j];
    out.reduced.capacities[i] = c;
  }
  auto [p, t] = reduce_row(inst.profits, inst.target, options, out.minimal);
  out.reduced.profits = std::move(p);
  out.reduced.target = std::move(t);
  out.bits = {inst.bit_size(), out.reduced.bit_size(),
              knapsack_size_bound(inst.weights.rows() + 1, inst.profits.size())};
  return out;
}

IntVector UksExpansion::multiplicities(const std::vector<bool>& pick) const {
  if (pick.size() != copies.size()) throw DimensionError("uks: selection size");
  IntVector x(original_items, BigInt(0));
  for (std::size_t c = 0; c < copies.size(); ++c) {
    if (pick[c]) x[copies[c].first] += BigInt(1) << copies[c].second;
  }
  return x;
}

UksExpansion uks_to_knapsack(const UnboundedKnapsackInstance& inst) {
  inst.validate();
  UksExpansion out;
  out.original_items = inst.weights.size();
  out.knapsack.capacity = inst.capacity;
  out.knapsack.target = inst.target;
  for (std::size_t i = 0; i < inst.weights.size(); ++i) {
    if (inst.weights[i] > inst.capacity) continue;
    const BigInt ratio = inst.capacity / inst.weights[i];
    const auto k = static_cast<unsigned>(bit_length(ratio) - 1);
    for (unsigned j = 0; j <= k; ++j) {
      out.knapsack.weights.push_back(inst.weights[i] << j);
      out.knapsack.profits.push_back(inst.profits[i] << j);
      out.copies.emplace_back(i, j);
    }
  }
  return out;
}

UksEquiv equiv_uks(const UnboundedKnapsackInstance& inst,
                   const ReduceOptions& options) {
  UksEquiv out;
  out.expansion = uks_to_knapsack(inst);
  out.reduction = static_equiv_knapsack(out.expansion.knapsack, options);
  return out;
}

KnapsackDp dp_knapsack_oracle(const KnapsackInstance& inst) {
  inst.validate();
  const std::size_t cells = dp_cells(inst.capacity);
  KnapsackDp out;
  if (sum_of(inst.profits) < (BigInt(1) << 62)) {
    std::vector<std::int64_t> cur(cells, 0), next(cells, 0);
    for (std::size_t i = 0; i < inst.weights.size(); ++i) {
      if (inst.weights[i] > inst.capacity) continue;
      simd::knapsack01_step(cur.data(), next.data(), cells,
                            static_cast<std::size_t>(inst.weights[i].get_ui()),
                            to_int64(inst.profits[i]));
      cur.swap(next);
    }
    out.max_profit = BigInt(std::to_string(cur[cells - 1]));
  } else {
    std::vector<BigInt> dp(cells, BigInt(0));
    for (std::size_t i = 0; i < inst.weights.size(); ++i) {
      if (inst.weights[i] > inst.capacity) continue;
      const std::size_t w = inst.weights[i].get_ui();
      for (std::size_t c = cells; c-- > w;) {
        const BigInt take = dp[c - w] + inst.profits[i];
        if (take > dp[c]) dp[c] = take;
      }
    }
    out.max_profit = dp[cells - 1];
  }
  out.feasible_for_target = out.max_profit >= inst.target;
  return out;
}

BigInt dp_uks_oracle(const UnboundedKnapsackInstance& inst) {
  inst.validate();
  const std::size_t cells = dp_cells(inst.capacity);
  const BigInt reach = max_abs(inst.profits) * inst.capacity;
  if (reach < (BigInt(1) << 62)) {
    std::vector<std::int64_t> dp(cells, 0);
    for (std::size_t i = 0; i < inst.weights.size(); ++i) {
      if (inst.weights[i] > inst.capacity) continue;
      simd::knapsack_unbounded_step(dp.data(), cells,
                                    static_cast<std::size_t>(inst.weights[i].get_ui()),
                                    to_int64(inst.profits[i]));
    }
    return BigInt(std::to_string(dp[cells - 1]));
  }
  std::vector<BigInt> dp(cells, BigInt(0));
  for (std::size_t i = 0; i < inst.weights.size(); ++i) {
    if (inst.weights[i] > inst.capacity) continue;
    const std::size_t w = inst.weights[i].get_ui();
    for (std::size_t c = w; c < cells; ++c) {
      const BigInt take = dp[c - w] + inst.profits[i];
      if (take > dp[c]) dp[c] = take;
    }
  }
  return dp[cells - 1];
}

std::vector<std::uint32_t> feasible_subsets(const KnapsackInstance& inst) {
  inst.validate();
  return scan_subsets(inst.weights.size(),
                      [&](const std::vector<bool>& p) { return inst.feasible(p); });
}

std::vector<std::uint32_t> feasible_subsets(const SubsetSumInstance& inst) {
  inst.validate();
  return scan_subsets(inst.values.size(),
                      [&](const std::vector<bool>& p) { return inst.feasible(p); });
}

std::vector<std::uint32_t> feasible_subsets(const MdKnapsackInstance& inst) {
  inst.validate();
  return scan_subsets(inst.profits.size(),
                      [&](const std::vector<bool>& p) { return inst.feasible(p); });
}

}  // namespace instakernel
