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

#include "instakernel/schedbal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "instakernel/lp.hpp"

namespace instakernel {
namespace {

BigInt min_of(const BigInt& a, const BigInt& b) { return a < b ? a : b; }
BigInt max_of(const BigInt& a, const BigInt& b) { return a < b ? b : a; }

// Infeasible stand-in: one machine, a single job of type 0, window [0, 0].
LoadBalancingInstance infeasible_residual(const LoadBalancingInstance& inst) {
  LoadBalancingInstance r;
  r.p = inst.p;
  r.n.assign(inst.d(), BigInt(0));
  r.n[0] = 1;
  r.m = 1;
  r.l = 0;
  r.u = 0;
  return r;
}

struct ConfigWalk {
  std::span<const BigInt> p;
  BigInt l, u;
  std::vector<BigInt> hi;         // per-type upper limit
  std::vector<BigInt> suffix_hi;  // max load of types [0, j)
  std::vector<IntVector> out;
  std::uint64_t budget;
  std::uint64_t visited = 0;
  IntVector c;

  // Fills types j-1 .. 0 given the load of the types above.
  void run(std::size_t j, const BigInt& load) {
    require_within(++visited, budget, "configuration enumeration");
    if (j == 0) {
      if (load >= l && load <= u) {
        out.push_back(c);
        require_within(out.size(), budget, "configuration enumeration");
      }
      return;
    }
    const std::size_t t = j - 1;
    BigInt top = (u - load) / p[t];
    if (top > hi[t]) top = hi[t];
    for (BigInt v = 0; v <= top; ++v) {
      const BigInt next = load + v * p[t];
      if (next + suffix_hi[t] < l) continue;
      c[t] = v;
      run(t, next);
    }
    c[t] = 0;
  }
};

}  // namespace

const char* objective_name(Objective obj) {
  switch (obj) {
    case Objective::kCmax: return "Cmax";
    case Objective::kCmin: return "Cmin";
    case Objective::kCenvy: return "Cenvy";
    case Objective::kLoadBalancing: return "LoadBalancing";
  }
  return "LoadBalancing";
}

Objective parse_objective(std::string_view name) {
  if (name == "Cmax") return Objective::kCmax;
  if (name == "Cmin") return Objective::kCmin;
  if (name == "Cenvy") return Objective::kCenvy;
  if (name == "LoadBalancing") return Objective::kLoadBalancing;
  throw InputError("unknown objective '" + std::string(name) + "'");
}

BigInt LoadBalancingInstance::pmax() const { return max_abs(p); }

BigInt LoadBalancingInstance::total_work() const { return dot(p, n); }

void LoadBalancingInstance::validate() const {
  if (p.empty()) throw InputError("loadbalance: no job types");
  if (n.size() != p.size()) throw DimensionError("loadbalance: p and n differ in length");
  std::set<BigInt> seen;
  for (const auto& x : p) {
    if (x <= 0) throw InputError("loadbalance: processing times must be positive");
    if (!seen.insert(x).second) throw InputError("loadbalance: processing times must be distinct");
  }
  for (const auto& x : n) {
    if (x < 0) throw InputError("loadbalance: job counts must be nonnegative");
  }
  if (m <= 0) throw InputError("loadbalance: machine count must be positive");
  if (l < 0 || l > u) throw InputError("loadbalance: need 0 <= l <= u");
}

std::size_t LoadBalancingInstance::bit_size() const {
  return instakernel::bit_size(p) + instakernel::bit_size(n) + instakernel::bit_size(m) +
         instakernel::bit_size(l) + instakernel::bit_size(u);
}

LoadBalancingInstance normalize(const LoadBalancingInstance& inst, Objective obj) {
  LoadBalancingInstance out = inst;
  if (obj == Objective::kCmax) out.l = 0;
  if (obj == Objective::kCmin) out.u = max_of(inst.total_work(), inst.l);
  return out;
}

BigInt machine_load(std::span<const BigInt> p, std::span<const BigInt> jobs) {
  return dot(p, jobs);
}

void validate_schedule(const LoadBalancingInstance& inst, const Schedule& s) {
  BigInt machine = 0;
  IntVector total(inst.d(), BigInt(0));
  for (const auto& g : s) {
    if (g.count < 0) throw InputError("schedule: negative machine count");
    if (g.jobs.size() != inst.d()) throw DimensionError("schedule: wrong number of job types");
    for (std::size_t j = 0; j < inst.d(); ++j) {
      if (g.jobs[j] < 0) throw InputError("schedule: negative job count on machine " + machine.get_str());
      total[j] += g.count * g.jobs[j];
    }
    if (g.count > 0) {
      const BigInt load = machine_load(inst.p, g.jobs);
      if (load < inst.l || load > inst.u) {
        throw InputError("schedule: machine " + machine.get_str() + " has load " +
                         load.get_str() + " outside [" + inst.l.get_str() + ", " +
                         inst.u.get_str() + "]");
      }
    }
    machine += g.count;
  }
  if (machine != inst.m) {
    throw InputError("schedule: uses " + machine.get_str() + " machines, expected " +
                     inst.m.get_str());
  }
  for (std::size_t j = 0; j < inst.d(); ++j) {
    if (total[j] != inst.n[j]) {
      throw InputError("schedule: job type " + std::to_string(j) + " scheduled " +
                       total[j].get_str() + " times, expected " + inst.n[j].get_str());
    }
  }
}

BigInt graver_norm_bound(Objective obj, const BigInt& pmax) {
  if (pmax < 1) throw InputError("graver_norm_bound: pmax must be >= 1");
  if (obj == Objective::kCmax || obj == Objective::kCmin) return 2 * pmax + 1;
  const BigInt t = 4 * pmax + 1;
  return t * t;
}

Balancing balance_preprocess(const LoadBalancingInstance& inst, Objective obj) {
  inst.validate();
  const std::size_t d = inst.d();
  Balancing out;
  out.g = graver_norm_bound(obj, inst.pmax());
  out.cap = 4 * BigInt(static_cast<unsigned long>(d)) * out.g;
  const BigInt margin = 2 * BigInt(static_cast<unsigned long>(d)) * out.g;
  out.reduced = inst;
  out.q.assign(d, BigInt(0));
  out.shift = 0;
  for (std::size_t j = 0; j < d; ++j) {
    const BigInt q = inst.n[j] / inst.m - margin;
    if (q > 0) {
      out.q[j] = q;
      out.reduced.n[j] -= inst.m * q;
      out.shift += q * inst.p[j];
    }
  }
  if (out.shift > inst.u) {
    out.infeasible = true;
    return out;
  }
  out.reduced.l = max_of(BigInt(0), inst.l - out.shift);
  out.reduced.u = inst.u - out.shift;
  return out;
}

std::vector<IntVector> enumerate_configurations(std::span<const BigInt> p,
                                                const BigInt& l, const BigInt& u,
                                                const BigInt& cap,
                                                std::span<const BigInt> limits) {
  const std::size_t d = p.size();
  if (!limits.empty() && limits.size() != d) throw DimensionError("configurations: limits size");
  if (l > u || u < 0) return {};
  ConfigWalk walk{p, l, u, {}, {}, {}, Budget::defaults().enumeration, 0, IntVector(d, BigInt(0))};
  walk.hi.resize(d);
  walk.suffix_hi.assign(d, BigInt(0));
  for (std::size_t j = 0; j < d; ++j) {
    if (p[j] <= 0) throw InputError("configurations: processing times must be positive");
    walk.hi[j] = limits.empty() ? cap : min_of(cap, limits[j]);
    if (walk.hi[j] < 0) walk.hi[j] = 0;
  }
  for (std::size_t j = 1; j < d; ++j) {
    walk.suffix_hi[j] = walk.suffix_hi[j - 1] + walk.hi[j - 1] * p[j - 1];
  }
  walk.run(d, BigInt(0));
  return std::move(walk.out);
}

ConfIlp build_conf_ilp(const std::vector<IntVector>& configs,
                       std::span<const BigInt> n_eff, const BigInt& m_eff) {
  const std::size_t d = n_eff.size();
  ConfIlp out;
  out.ilp.a = IntMatrix(d + 1, configs.size());
  for (std::size_t c = 0; c < configs.size(); ++c) {
    if (configs[c].size() != d) throw DimensionError("conf ilp: configuration size");
    for (std::size_t j = 0; j < d; ++j) out.ilp.a(j, c) = configs[c][j];
    out.ilp.a(d, c) = 1;
  }
  out.ilp.b.assign(n_eff.begin(), n_eff.end());
  out.ilp.b.push_back(m_eff);
  if (configs.empty()) {
    out.trivially_infeasible = m_eff != 0 || std::any_of(n_eff.begin(), n_eff.end(),
                                                         [](const BigInt& v) { return v != 0; });
  }
  return out;
}

std::size_t loadbalance_size_bound(std::size_t d, const BigInt& pmax, Objective obj) {
  const BigInt dd(static_cast<unsigned long>(d));
  const BigInt cap = 4 * dd * graver_norm_bound(obj, pmax);
  const BigInt m2 = (dd + 1) * proximity_radius(d + 1, cap);
  return d * (bit_size(pmax) + bit_size(BigInt(m2 * cap))) + bit_size(m2) +
         2 * bit_size(BigInt(dd * pmax * cap));
}

EquivBundle equiv_loadbalancing(const LoadBalancingInstance& inst, Objective obj) {
  EquivBundle out;
  out.objective = obj;
  out.original = normalize(inst, obj);
  out.original.validate();
  const LoadBalancingInstance& orig = out.original;
  const std::size_t d = orig.d();
  out.bits.before = orig.bit_size();
  out.bits.bound = loadbalance_size_bound(d, orig.pmax(), obj);
  auto infeasible = [&](std::string why) {
    out.verdict = LbVerdict::kInfeasible;
    out.explanation = std::move(why);
    out.residual = infeasible_residual(orig);
    out.pre = {};
    out.bits.after = out.residual.bit_size();
    return out;
  };

  const Balancing bal = balance_preprocess(orig, obj);
  out.g = bal.g;
  out.cap = bal.cap;
  out.proximity = proximity_radius(d + 1, bal.cap);
  if (bal.infeasible) return infeasible("preassigned load exceeds u");
  out.pre.per_machine = bal.q;

  BigInt psum = 0;
  for (const auto& x : orig.p) psum += x;
  const BigInt u_eff = min_of(bal.reduced.u, bal.cap * psum);
  const BigInt& l_eff = bal.reduced.l;
  if (l_eff > u_eff) return infeasible("load window empty after preassignment");

  out.configs = enumerate_configurations(orig.p, l_eff, u_eff, bal.cap, bal.reduced.n);
  const ConfIlp conf = build_conf_ilp(out.configs, bal.reduced.n, orig.m);
  if (out.configs.empty()) return infeasible("no configuration fits the load window");

  const LpResult lp = solve_vertex(StandardLp{conf.ilp.a, conf.ilp.b, std::nullopt, std::nullopt});
  if (lp.status != LpStatus::kFeasible) return infeasible("LP relaxation infeasible");
  out.conf_vertex = lp.vertex.values;

  IntVector n2 = bal.reduced.n;
  BigInt m2 = orig.m;
  for (std::size_t c = 0; c < out.configs.size(); ++c) {
    const Rat& x = out.conf_vertex[c];
    if (x != Rat(0)) ++out.vertex_support;
    const BigInt fix = (x - Rat(out.proximity)).ceil();
    if (fix <= 0) continue;
    out.pre.groups.push_back({fix, out.configs[c]});
    m2 -= fix;
    for (std::size_t j = 0; j < d; ++j) n2[j] -= fix * out.configs[c][j];
  }
  if (out.vertex_support > d + 1) {
    throw InternalInconsistency("equiv_loadbalancing: vertex support above d+1");
  }
  out.residual = {orig.p, std::move(n2), std::move(m2), l_eff, u_eff};
  out.residual.validate();
  out.verdict = LbVerdict::kReduced;
  out.explanation = "reduced";
  out.bits.after = out.residual.bit_size();
  if (out.bits.after > out.bits.bound) {
    throw InternalInconsistency("equiv_loadbalancing: residual size above bound");
  }
  return out;
}

Schedule reconstruct_schedule(const EquivBundle& bundle, const Schedule& residual) {
  if (bundle.verdict != LbVerdict::kReduced) {
    throw InputError("reconstruct_schedule: the instance was reported infeasible");
  }
  validate_schedule(bundle.residual, residual);
  const std::size_t d = bundle.original.d();
  Schedule out;
  auto add = [&](const MachineGroup& g) {
    if (g.count == 0) return;
    MachineGroup full = g;
    for (std::size_t j = 0; j < d; ++j) full.jobs[j] += bundle.pre.per_machine[j];
    out.push_back(std::move(full));
  };
  for (const auto& g : bundle.pre.groups) add(g);
  for (const auto& g : residual) add(g);
  validate_schedule(bundle.original, out);
  return out;
}

std::optional<Schedule> brute_force_loadbalance(const LoadBalancingInstance& inst) {
  inst.validate();
  const std::size_t d = inst.d();
  const std::uint64_t budget = Budget::defaults().enumeration;
  if (inst.m > 4096) throw BudgetExceeded("brute force: more than 4096 machines");
  const BigInt total = inst.total_work();
  if (total > inst.m * inst.u || total < inst.m * inst.l) return std::nullopt;

  BigInt nmax = 0;
  for (const auto& x : inst.n) nmax = max_of(nmax, x);
  const std::vector<IntVector> configs =
      enumerate_configurations(inst.p, inst.l, inst.u, nmax, inst.n);
  const std::size_t machines = inst.m.get_ui();

  std::vector<std::int64_t> p64(d);
  for (std::size_t j = 0; j < d; ++j) p64[j] = to_int64(inst.p[j]);
  std::vector<std::vector<std::int64_t>> conf64;
  std::vector<std::int64_t> load64;
  for (const auto& c : configs) {
    std::vector<std::int64_t> v(d);
    for (std::size_t j = 0; j < d; ++j) v[j] = to_int64(c[j]);
    conf64.push_back(std::move(v));
    load64.push_back(to_int64(machine_load(inst.p, c)));
  }
  const std::int64_t l = to_int64(inst.l);
  const std::int64_t u = to_int64(inst.u);

  std::map<std::vector<std::int64_t>, bool> memo;
  std::vector<std::size_t> chosen;
  std::vector<std::int64_t> rem(d);
  for (std::size_t j = 0; j < d; ++j) rem[j] = to_int64(inst.n[j]);

  // Assigns configurations with index >= first to `left` machines.
  std::function<bool(std::size_t, std::size_t, std::int64_t)> solve =
      [&](std::size_t left, std::size_t first, std::int64_t work) -> bool {
    if (left == 0) return work == 0;
    const auto k = static_cast<std::int64_t>(left);
    if (work > k * u || work < k * l) return false;
    std::vector<std::int64_t> key = rem;
    key.push_back(static_cast<std::int64_t>(left));
    key.push_back(static_cast<std::int64_t>(first));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    require_within(memo.size() + 1, budget, "brute-force memo");
    bool ok = false;
    for (std::size_t c = first; c < conf64.size() && !ok; ++c) {
      bool fits = true;
      for (std::size_t j = 0; j < d; ++j) fits = fits && conf64[c][j] <= rem[j];
      if (!fits) continue;
      for (std::size_t j = 0; j < d; ++j) rem[j] -= conf64[c][j];
      chosen.push_back(c);
      ok = solve(left - 1, c, work - load64[c]);
      if (!ok) chosen.pop_back();
      for (std::size_t j = 0; j < d; ++j) rem[j] += conf64[c][j];
    }
    memo.emplace(std::move(key), ok);
    return ok;
  };
  if (!solve(machines, 0, to_int64(total))) return std::nullopt;

  Schedule out;
  for (std::size_t c : chosen) {
    if (!out.empty() && out.back().jobs == configs[c]) {
      out.back().count += 1;
    } else {
      out.push_back({BigInt(1), configs[c]});
    }
  }
  validate_schedule(inst, out);
  return out;
}

}  // namespace instakernel
