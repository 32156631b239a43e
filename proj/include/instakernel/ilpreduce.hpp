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

#ifndef INSTAKERNEL_ILPREDUCE_HPP_
#define INSTAKERNEL_ILPREDUCE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "instakernel/equivvec.hpp"
#include "instakernel/ilp.hpp"
#include "instakernel/lp.hpp"

namespace instakernel {

struct BitReport {
  std::size_t before = 0;
  std::size_t after = 0;
  std::size_t bound = 0;
};

struct StaticEquivIlp {
  FeasIlp original;
  FeasIlp reduced;
  BigInt u_used;
  BitReport bits;
  bool all_rows_minimal = true;
};

// N (M ||A||_inf)^(2M+3) (1 + ||b||_inf): a bound on the entries of some
// solution of any feasible system.
BigInt u_bound(const FeasIlp& ilp);

// Bits of the constraint data (a and b).
std::size_t ilp_bit_size(const FeasIlp& ilp);

// 4 M (N+1)^2 bitlen((N+1) u): the size the per-row reduction guarantees.
std::size_t static_size_bound(std::size_t m, std::size_t n, const BigInt& u);

// Replaces each row (a_i; b_i) by a small vector equivalent on [-u, u]^(N+1),
// which keeps every solution with entries in [-u, u]. When u is not given the
// finite box of the ILP is used, else u_bound(ilp).
StaticEquivIlp static_equiv_ilp(const FeasIlp& ilp,
                                std::optional<BigInt> u = std::nullopt,
                                const ReduceOptions& options = {});

// M (2 M D + 1)^M.
BigInt proximity_radius(std::size_t m_rows, const BigInt& delta);

enum class KernelVerdict { kReduced, kInfeasible };

struct ProximityKernel {
  KernelVerdict verdict = KernelVerdict::kInfeasible;
  std::string explanation;
  IntVector fixed;
  FeasIlp residual;  // box [0, 2P]
  BigInt proximity;  // P
  LpVertex lp_vertex;
  BitReport bits;
};

// Packs max(0, ceil(x*_i - P)) of every variable of an LP vertex x*; the
// residual keeps a box of 2P per variable. Needs lower bounds 0 and no upper
// bounds.
ProximityKernel kernelize_feasibility(const FeasIlp& ilp);

// 2-stage stochastic structure: block i is [A_i B_i] on (x0, y_i).
struct TwoStageIlp {
  std::size_t first_stage = 0;   // r
  std::size_t second_stage = 0;  // t
  std::vector<IntMatrix> a;      // s x r
  std::vector<IntMatrix> b;      // s x t
  std::vector<IntVector> rhs;    // s
  std::size_t blocks() const { return a.size(); }
  void validate() const;
  FeasIlp assemble() const;  // lower 0, no upper
};

// n-fold structure: linking rows [A_1 ... A_n], then diagonal blocks B_i.
struct NFoldIlp {
  std::size_t block_width = 0;     // t
  std::vector<IntMatrix> a;        // r x t
  std::vector<IntMatrix> b;        // s x t
  IntVector linking_rhs;           // r
  std::vector<IntVector> rhs;      // s per block
  std::size_t blocks() const { return a.size(); }
  void validate() const;
  FeasIlp assemble() const;
};

struct TwoStageEquiv {
  std::vector<StaticEquivIlp> blocks;
  TwoStageIlp reduced;
};

struct NFoldEquiv {
  StaticEquivIlp linking;
  std::vector<StaticEquivIlp> blocks;
  NFoldIlp reduced;
};

TwoStageEquiv equiv_two_stage(const TwoStageIlp& ts, const BigInt& u,
                              const ReduceOptions& options = {});
NFoldEquiv equiv_nfold(const NFoldIlp& nf, const BigInt& u,
                       const ReduceOptions& options = {});

}  // namespace instakernel

#endif  // INSTAKERNEL_ILPREDUCE_HPP_
