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

#ifndef INSTAKERNEL_SCHEDBAL_HPP_
#define INSTAKERNEL_SCHEDBAL_HPP_

// Load balancing on identical machines with count-encoded job types:
// balancing preprocessing, configuration ILP, proximity pre-fixing and
// schedule reconstruction.

#include <optional>
#include <string>
#include <vector>

#include "instakernel/exactmath.hpp"
#include "instakernel/ilp.hpp"
#include "instakernel/ilpreduce.hpp"

namespace instakernel {

enum class Objective { kCmax, kCmin, kCenvy, kLoadBalancing };

const char* objective_name(Objective obj);
Objective parse_objective(std::string_view name);

// n_j jobs of processing time p_j, m machines, every load in [l, u].
struct LoadBalancingInstance {
  IntVector p;
  IntVector n;
  BigInt m;
  BigInt l;
  BigInt u;
  std::size_t d() const { return p.size(); }
  BigInt pmax() const;
  BigInt total_work() const;
  void validate() const;  // p distinct and positive, n >= 0, m > 0, 0 <= l <= u
  std::size_t bit_size() const;
};

// Cmax drops the lower threshold, Cmin lifts u to the total work.
LoadBalancingInstance normalize(const LoadBalancingInstance& inst, Objective obj);

// `count` machines that each receive `jobs` (one multiplicity per type).
struct MachineGroup {
  BigInt count;
  IntVector jobs;
};
using Schedule = std::vector<MachineGroup>;

BigInt machine_load(std::span<const BigInt> p, std::span<const BigInt> jobs);

// Throws InputError naming the first violating machine (0-based) or the
// mismatching job type.
void validate_schedule(const LoadBalancingInstance& inst, const Schedule& s);

// 2 pmax + 1 for Cmax and Cmin, (4 pmax + 1)^2 otherwise.
BigInt graver_norm_bound(Objective obj, const BigInt& pmax);

struct Balancing {
  LoadBalancingInstance reduced;  // n', l' = max(0, l - s), u' = u - s
  IntVector q;                    // per type, on every machine
  BigInt shift;                   // s = q.p
  BigInt g;
  BigInt cap;                     // 4 d g
  bool infeasible = false;        // s > u: the average load is above u
};

// q_j = max(0, floor(n_j / m) - 2 d g).
Balancing balance_preprocess(const LoadBalancingInstance& inst, Objective obj);

// All c >= 0 with l <= p.c <= u, c_j <= cap and c_j <= limits[j] (when
// given), ordered by the last coordinate first.
std::vector<IntVector> enumerate_configurations(std::span<const BigInt> p,
                                                const BigInt& l, const BigInt& u,
                                                const BigInt& cap,
                                                std::span<const BigInt> limits = {});

struct ConfIlp {
  FeasIlp ilp;  // rows: sum c x_c = n', sum x_c = m'
  bool trivially_infeasible = false;
};
ConfIlp build_conf_ilp(const std::vector<IntVector>& configs,
                       std::span<const BigInt> n_eff, const BigInt& m_eff);

struct PreSolution {
  IntVector per_machine;             // balancing preassignment q
  std::vector<MachineGroup> groups;  // pre-fixed configurations
};

enum class LbVerdict { kReduced, kInfeasible };

struct EquivBundle {
  LbVerdict verdict = LbVerdict::kReduced;
  std::string explanation;
  Objective objective = Objective::kLoadBalancing;
  LoadBalancingInstance original;  // after normalize
  LoadBalancingInstance residual;
  PreSolution pre;
  BigInt g;
  BigInt cap;
  BigInt proximity;  // K = (d+1) (2 (d+1) cap + 1)^(d+1)
  std::vector<IntVector> configs;
  RatVector conf_vertex;
  std::size_t vertex_support = 0;
  BitReport bits;
};

// d (bits(pmax) + bits(m'' cap)) + bits(m'') + 2 bits(d pmax cap), with
// m'' = (d+1) K: the largest residual the pipeline can emit.
std::size_t loadbalance_size_bound(std::size_t d, const BigInt& pmax, Objective obj);

EquivBundle equiv_loadbalancing(const LoadBalancingInstance& inst,
                                Objective obj = Objective::kLoadBalancing);

// Adds the pre-fixed groups and q on every machine to a residual schedule;
// validates both the input and the result.
Schedule reconstruct_schedule(const EquivBundle& bundle, const Schedule& residual);

// Memoized search over (remaining jobs, machines left, first configuration);
// no per-type caps.
std::optional<Schedule> brute_force_loadbalance(const LoadBalancingInstance& inst);

}  // namespace instakernel

#endif  // INSTAKERNEL_SCHEDBAL_HPP_
