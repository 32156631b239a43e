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

#ifndef INSTAKERNEL_KNAPFAM_HPP_
#define INSTAKERNEL_KNAPFAM_HPP_

// Knapsack-family instances, their ILP encodings, coefficient reduction and
// dynamic-programming oracles.
//
// Reduction works on the inequality rows directly: (w; C) is replaced by a
// vector equivalent on [-1, 1]^(n+1). Comparing (x, 0) against (0, 1) for
// 0-1 vectors x keeps both w.x <= C and w.x >= C, so every 0-1 selection
// keeps its status without introducing slack variables.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "instakernel/equivvec.hpp"
#include "instakernel/ilp.hpp"
#include "instakernel/ilpreduce.hpp"

namespace instakernel {

// Select x in {0,1}^n with w.x <= capacity and p.x >= target.
struct KnapsackInstance {
  IntVector weights;
  IntVector profits;
  BigInt capacity;
  BigInt target;
  void validate() const;
  std::size_t bit_size() const;
  bool feasible(const std::vector<bool>& pick) const;
};

// Select x in {0,1}^n with v.x == target.
struct SubsetSumInstance {
  IntVector values;
  BigInt target;
  void validate() const;
  std::size_t bit_size() const;
  bool feasible(const std::vector<bool>& pick) const;
};

// Multiplicities x in N^n with w.x <= capacity and p.x >= target.
struct UnboundedKnapsackInstance {
  IntVector weights;
  IntVector profits;
  BigInt capacity;
  BigInt target;
  void validate() const;
  std::size_t bit_size() const;
};

// Select x in {0,1}^n with W x <= capacities and p.x >= target.
struct MdKnapsackInstance {
  IntMatrix weights;  // M x n
  IntVector profits;
  IntVector capacities;
  BigInt target;
  void validate() const;
  std::size_t bit_size() const;
  bool feasible(const std::vector<bool>& pick) const;
};

struct KnapsackIlp {
  FeasIlp ilp;
  bool trivially_infeasible = false;  // target above the total profit
};

// Rows  w.x + s1 = C  and  p.x - s2 = T,  x in {0,1}^n,
// s1 in [0, C], s2 in [0, max(0, sum p - T)].
KnapsackIlp knapsack_to_ilp(const KnapsackInstance& inst);

struct KnapsackReduction {
  KnapsackInstance original;
  KnapsackInstance reduced;
  BitReport bits;
  bool minimal = true;
};
struct SubsetSumReduction {
  SubsetSumInstance original;
  SubsetSumInstance reduced;
  BitReport bits;
  bool minimal = true;
};
struct MdKnapsackReduction {
  MdKnapsackInstance original;
  MdKnapsackInstance reduced;
  BitReport bits;
  bool minimal = true;
};

// Size guarantee for `rows` reduced rows over n items:
// rows (n+1) (1 + bitlen(B)), B the equivalent-vector l1 bound in dimension
// n+1 at radius 1.
std::size_t knapsack_size_bound(std::size_t rows, std::size_t n);

KnapsackReduction static_equiv_knapsack(const KnapsackInstance& inst,
                                        const ReduceOptions& options = {});
SubsetSumReduction static_equiv_subsetsum(const SubsetSumInstance& inst,
                                          const ReduceOptions& options = {});
MdKnapsackReduction static_equiv_mdknapsack(const MdKnapsackInstance& inst,
                                            const ReduceOptions& options = {});

// Binary copies: item i becomes copies j = 0..K_i with weight 2^j w_i and
// profit 2^j p_i, K_i = floor(log2(C / w_i)). Items heavier than C are
// dropped.
struct UksExpansion {
  KnapsackInstance knapsack;
  std::vector<std::pair<std::size_t, unsigned>> copies;  // (item, j)
  std::size_t original_items = 0;
  // Multiplicities of the original items for a 0-1 choice over copies.
  IntVector multiplicities(const std::vector<bool>& pick) const;
};
UksExpansion uks_to_knapsack(const UnboundedKnapsackInstance& inst);

struct UksEquiv {
  UksExpansion expansion;
  KnapsackReduction reduction;
};
UksEquiv equiv_uks(const UnboundedKnapsackInstance& inst,
                   const ReduceOptions& options = {});

struct KnapsackDp {
  BigInt max_profit;
  bool feasible_for_target = false;
};

// Weight-indexed dynamic programs; capacity + 1 cells must fit the
// enumeration budget.
KnapsackDp dp_knapsack_oracle(const KnapsackInstance& inst);
BigInt dp_uks_oracle(const UnboundedKnapsackInstance& inst);

// All feasible selections, as bitmasks in increasing order (n <= 30).
std::vector<std::uint32_t> feasible_subsets(const KnapsackInstance& inst);
std::vector<std::uint32_t> feasible_subsets(const SubsetSumInstance& inst);
std::vector<std::uint32_t> feasible_subsets(const MdKnapsackInstance& inst);

}  // namespace instakernel

#endif  // INSTAKERNEL_KNAPFAM_HPP_
