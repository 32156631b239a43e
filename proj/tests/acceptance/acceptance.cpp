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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "../unit/test_util.hpp"
#include "instakernel/equivvec.hpp"
#include "instakernel/ilpreduce.hpp"
#include "instakernel/knapfam.hpp"
#include "instakernel/schedbal.hpp"

using namespace instakernel;
using testutil::dot;
using testutil::for_each_point;
using testutil::rand_big;
using testutil::rand_int;
using testutil::rand_matrix;
using testutil::rand_vector;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::size_t checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void note(const std::string& s) {
    if (ok) detail += (detail.empty() ? "" : "; ") + s;
  }
};

std::string str(std::span<const BigInt> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

// ---------------------------------------------------------------------------

void equivalent_vectors(Outcome& o) {
  std::size_t cases = 0;
  auto check = [&](const IntVector& w, long delta) {
    const ReducedVector r = reduce_vector(w, delta);
    const std::string tag = str(w) + " D=" + std::to_string(delta);
    o.expect(check_equivalent(w, r.reduced, delta), "check_equivalent fails for " + tag);
    o.expect(testutil::pairwise_equivalent(w, r.reduced, delta), "pairwise oracle fails for " + tag);
    o.expect(l1_norm(r.reduced) <= equivalent_vector_l1_bound(w.size(), delta),
             "l1 bound exceeded for " + tag);
    for (std::size_t i = 0; i < w.size(); ++i) {
      o.expect(testutil::sign(w[i]) == testutil::sign(r.reduced[i]), "sign changed for " + tag);
    }
    ++cases;
  };
  for (std::size_t n = 1; n <= 2; ++n) {
    for (long delta = 1; delta <= 2; ++delta) {
      for_each_point(IntVector(n, BigInt(-3)), IntVector(n, BigInt(3)),
                     [&](const IntVector& w) { check(w, delta); });
    }
  }
  std::mt19937_64 rng(1001);
  for (int t = 0; t < 200; ++t) check(rand_vector(rng, 3, -1000000, 1000000), 1);
  o.note(std::to_string(cases) + " vectors");
}

// Least l1 norm over all vectors pairwise-equivalent to w, searched directly.
BigInt direct_min_norm(const IntVector& w, long delta) {
  const std::size_t n = w.size();
  for (long t = 0;; ++t) {
    bool found = false;
    for_each_point(IntVector(n, BigInt(-t)), IntVector(n, BigInt(t)), [&](const IntVector& v) {
      if (!found && l1_norm(v) == t && testutil::pairwise_equivalent(w, v, delta)) found = true;
    });
    if (found) return t;
  }
}

void lower_bounds(Outcome& o) {
  for (auto [n, delta] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    IntVector w;
    BigInt power = 1;
    for (int i = 0; i < n; ++i) {
      w.push_back(power);
      power *= delta;
    }
    const BigInt got = min_equivalent_norm(w, delta);
    const BigInt floor_value = pow(BigInt(delta), n - 1);
    const std::string tag = "(N,D)=(" + std::to_string(n) + "," + std::to_string(delta) + ")";
    o.expect(got >= floor_value, tag + " below D^(N-1)");
    o.expect(got == direct_min_norm(w, delta), tag + " disagrees with direct search");
    o.note(tag + "->" + got.get_str());
  }
}

void generator_bound(Outcome& o) {
  std::mt19937_64 rng(1003);
  std::size_t total = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 3, m = 1 + rng() % 3;
    const IntMatrix a = rand_matrix(rng, m, n, -2, 2);
    const BigInt bound = hadamard_l1_bound(n, std::max(a.max_abs(), BigInt(1)));
    for (const auto& v : enumerate_generators(a)) {
      ++total;
      o.expect(l1_norm(v) <= bound, "generator " + str(v) + " above the bound");
      for (std::size_t i = 0; i < m; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < n; ++j) s += Rat(a(i, j)) * Rat(v[j]);
        o.expect(s >= Rat(0), "generator " + str(v) + " outside the cone");
      }
    }
  }
  o.note(std::to_string(total) + " generators");
}

// Feasibility of {A x = b, x >= 0 integral} by breadth-first search over
// partial sums A x'. Some ordering of any solution's columns keeps every
// partial sum within M * max|a| of the segment [0, b]; the search box is wider
// than that, and every path it finds is an actual solution.
bool reachable(const IntMatrix& a, const IntVector& b) {
  const std::size_t m = a.rows(), n = a.cols();
  const long delta = a.max_abs().get_si();
  std::vector<long> lo(m), hi(m), target(m);
  std::size_t states = 1;
  for (std::size_t i = 0; i < m; ++i) {
    target[i] = b[i].get_si();
    lo[i] = std::min(0L, target[i]) - 2 * static_cast<long>(m) * delta - 2;
    hi[i] = std::max(0L, target[i]) + 2 * static_cast<long>(m) * delta + 2;
    states *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  }
  auto index = [&](const std::vector<long>& y) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < m; ++i) k = k * static_cast<std::size_t>(hi[i] - lo[i] + 1) + static_cast<std::size_t>(y[i] - lo[i]);
    return k;
  };
  std::vector<char> seen(states, 0);
  std::vector<std::vector<long>> queue = {std::vector<long>(m, 0)};
  seen[index(queue[0])] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (queue[head] == target) return true;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<long> y = queue[head];
      bool inside = true;
      for (std::size_t i = 0; i < m; ++i) {
        y[i] += a(i, j).get_si();
        inside = inside && y[i] >= lo[i] && y[i] <= hi[i];
      }
      if (inside && !seen[index(y)]) {
        seen[index(y)] = 1;
        queue.push_back(y);
      }
    }
  }
  return false;
}

void proximity_kernel(Outcome& o) {
  std::mt19937_64 rng(1004);
  int feasible = 0, reduced = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + rng() % 2, n = 1 + rng() % 4;
    FeasIlp ilp{rand_matrix(rng, m, n, -2, 2), rand_vector(rng, m, -6, 6), {}, std::nullopt};
    const ProximityKernel k = kernelize_feasibility(ilp);
    const BigInt delta = ilp.a.max_abs();
    const BigInt p = proximity_radius(m, delta);
    const std::string tag = "ilp #" + std::to_string(t);
    o.expect(p == BigInt(static_cast<unsigned long>(m)) *
                      pow(2 * BigInt(static_cast<unsigned long>(m)) * delta + 1, m),
             tag + ": proximity constant");

    const bool original_feasible = reachable(ilp.a, ilp.b);
    feasible += original_feasible;

    if (k.verdict == KernelVerdict::kInfeasible) {
      o.expect(!original_feasible, tag + ": LP infeasible but the ILP has a solution");
      continue;
    }
    ++reduced;
    o.expect(*k.residual.upper == IntVector(n, BigInt(2 * p)), tag + ": residual box is not 2P");
    const BigInt cap = BigInt(static_cast<unsigned long>(n)) * delta * p;
    for (const auto& bi : k.residual.b) o.expect(abs(bi) <= cap, tag + ": |b'| above N D P");

    const auto witness = find_feasible_point(k.residual);
    o.expect(witness.has_value() == original_feasible, tag + ": residual feasibility differs");
    std::vector<IntVector> all;
    try {
      all = enumerate_feasible(k.residual, 2'000'000);
    } catch (const BudgetExceeded&) {
      if (witness) all.push_back(*witness);
    }
    o.expect(all.empty() == !witness.has_value(), tag + ": enumeration and search disagree");
    for (const auto& x : all) {
      IntVector full(n);
      for (std::size_t j = 0; j < n; ++j) full[j] = x[j] + k.fixed[j];
      o.expect(ilp.satisfied_by(full), tag + ": fixed + residual witness fails");
    }
  }
  o.note(std::to_string(feasible) + " feasible, " + std::to_string(reduced) + " LP-feasible");
}

void static_equivalence(Outcome& o) {
  std::mt19937_64 rng(1005);
  std::size_t points = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = 1 + rng() % 2, n = 1 + rng() % 3;
    const long u = 1 + static_cast<long>(rng() % 3);
    FeasIlp ilp{rand_matrix(rng, m, n, -1000, 1000), {}, {}, IntVector(n, BigInt(u))};
    const IntVector x0 = rand_vector(rng, n, 0, u);
    ilp.b = ilp.a.multiply(x0);
    if (t % 3 == 0) ilp.b[0] += rand_int(rng, -3, 3);
    const StaticEquivIlp r = static_equiv_ilp(ilp, BigInt(u));
    const auto a = enumerate_feasible(ilp);
    const auto b = enumerate_feasible(r.reduced);
    o.expect(a == b, "solution sets differ for ilp #" + std::to_string(t));
    o.expect(r.bits.after <= r.bits.bound, "size bound exceeded for ilp #" + std::to_string(t));
    points += a.size();
  }
  o.note(std::to_string(points) + " solutions compared");
}

void knapsack_family(Outcome& o) {
  std::mt19937_64 rng(1006);
  auto subset_sum = [](const IntVector& v, std::uint32_t mask) {
    BigInt s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (mask >> i & 1U) s += v[i];
    }
    return s;
  };
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 10;
    KnapsackInstance k;
    for (std::size_t i = 0; i < n; ++i) {
      k.weights.push_back(rand_big(rng, 65 + rng() % 8));
      k.profits.push_back(rand_big(rng, 65 + rng() % 8));
    }
    const std::uint32_t pick = static_cast<std::uint32_t>(rng() % (1U << n));
    k.capacity = subset_sum(k.weights, pick) + rand_int(rng, -2, 2);
    if (k.capacity < 0) k.capacity = 0;
    k.target = subset_sum(k.profits, pick) + rand_int(rng, -2, 2);
    const KnapsackReduction r = static_equiv_knapsack(k);
    const std::string tag = "knapsack #" + std::to_string(t);
    // Independent 2^n scan against the definitions.
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      const bool a = subset_sum(k.weights, mask) <= k.capacity &&
                     subset_sum(k.profits, mask) >= k.target;
      const bool b = subset_sum(r.reduced.weights, mask) <= r.reduced.capacity &&
                     subset_sum(r.reduced.profits, mask) >= r.reduced.target;
      o.expect(a == b, tag + ": selection " + std::to_string(mask) + " changes status");
    }
    o.expect(r.bits.after < r.bits.before, tag + ": not smaller");
  }

  std::function<BigInt(const UnboundedKnapsackInstance&, std::size_t, BigInt)> uks_brute =
      [&](const UnboundedKnapsackInstance& k, std::size_t i, BigInt cap) -> BigInt {
    if (i == k.weights.size()) return 0;
    BigInt best = 0;
    for (BigInt x = 0; x * k.weights[i] <= cap; ++x) {
      best = std::max(best, BigInt(x * k.profits[i] + uks_brute(k, i + 1, cap - x * k.weights[i])));
    }
    return best;
  };
  int uks_reduced = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 5;
    UnboundedKnapsackInstance k{rand_vector(rng, n, 1, 15), rand_vector(rng, n, 0, 20),
                                rand_int(rng, 0, 50), 0};
    const BigInt best = uks_brute(k, 0, k.capacity);
    k.target = best + rand_int(rng, -1, 1);
    const std::string tag = "uks #" + std::to_string(t);
    const UksExpansion x = uks_to_knapsack(k);
    o.expect(dp_uks_oracle(k) == best, tag + ": unbounded DP");
    o.expect(dp_knapsack_oracle(x.knapsack).max_profit == best, tag + ": 0-1 expansion value");
    // Reducing the expansion needs the exact equivalence check, which is
    // exponential in the item count.
    if (x.copies.size() > 10) continue;
    const UksEquiv e = equiv_uks(k);
    ++uks_reduced;
    o.expect(dp_knapsack_oracle(e.reduction.reduced).feasible_for_target == (best >= k.target),
             tag + ": reduced decision");
  }
  o.note(std::to_string(uks_reduced) + " of 100 unbounded instances reduced");

  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 6;
    MdKnapsackInstance k;
    k.weights = IntMatrix(2, n);
    for (std::size_t j = 0; j < n; ++j) {
      k.weights(0, j) = rand_big(rng, 50 + rng() % 20);
      k.weights(1, j) = rand_big(rng, 50 + rng() % 20);
      k.profits.push_back(rand_big(rng, 60));
    }
    const std::uint32_t pick = static_cast<std::uint32_t>(rng() % (1U << n));
    k.capacities = {subset_sum(k.weights.row_vector(0), pick), subset_sum(k.weights.row_vector(1), pick)};
    k.target = subset_sum(k.profits, pick) - rand_int(rng, 0, 1);
    const MdKnapsackReduction r = static_equiv_mdknapsack(k);
    o.expect(feasible_subsets(r.reduced) == feasible_subsets(k), "mdks #" + std::to_string(t));
  }
}

void loadbalancing_pipeline(Outcome& o) {
  const std::vector<IntVector> type_sets = {make_vector({1}), make_vector({2}), make_vector({3}),
                                            make_vector({1, 2}), make_vector({1, 3}),
                                            make_vector({2, 3})};
  const std::vector<std::pair<long, long>> windows = {
      {0, 0}, {0, 2}, {0, 5}, {1, 3}, {2, 2}, {2, 4}, {3, 3}, {3, 6}, {4, 8}, {5, 5},
      {6, 9}, {8, 12}, {10, 20}, {0, 40}};
  const std::vector<Objective> objectives = {Objective::kLoadBalancing, Objective::kCmax,
                                             Objective::kCmin, Objective::kCenvy};
  std::size_t cases = 0, feasible = 0;
  for (const auto& p : type_sets) {
    const std::size_t d = p.size();
    IntVector lo(d, BigInt(0)), hi(d, BigInt(8));
    for_each_point(lo, hi, [&](const IntVector& n) {
      for (long m = 1; m <= 4; ++m) {
        for (std::size_t w = 0; w < windows.size(); ++w) {
          const Objective obj = objectives[(w + static_cast<std::size_t>(m)) % objectives.size()];
          LoadBalancingInstance inst{p, n, m, windows[w].first, windows[w].second};
          const std::string tag = "p=" + str(p) + " n=" + str(n) + " m=" + std::to_string(m) +
                                  " [" + std::to_string(windows[w].first) + "," +
                                  std::to_string(windows[w].second) + "] " + objective_name(obj);
          const EquivBundle b = equiv_loadbalancing(inst, obj);
          const auto truth = brute_force_loadbalance(normalize(inst, obj));
          ++cases;
          feasible += truth.has_value();
          o.expect(b.vertex_support <= d + 1, tag + ": vertex support");
          const bool reduced_ok = b.verdict == LbVerdict::kReduced;
          const auto res = reduced_ok ? brute_force_loadbalance(b.residual) : std::nullopt;
          o.expect(res.has_value() == truth.has_value(), tag + ": verdict differs");
          if (!res) continue;
          for (const auto& g : *res) {
            for (const auto& c : g.jobs) o.expect(c <= b.cap, tag + ": per-type cap");
          }
          try {
            reconstruct_schedule(b, *res);
          } catch (const InputError& e) {
            o.expect(false, tag + ": reconstruction " + e.what());
          }
        }
      }
    });
  }
  int balanced = 0;
  for (long n = 20; n <= 40; ++n) {
    for (long u = n / 2 - 2; u <= n / 2 + 2; ++u) {
      LoadBalancingInstance inst{make_vector({1}), IntVector{BigInt(n)}, 2, 0, u};
      const EquivBundle b = equiv_loadbalancing(inst, Objective::kCmax);
      const bool truth = 2 * u >= n;
      const std::string tag = "balancing n=" + std::to_string(n) + " u=" + std::to_string(u);
      o.expect(b.pre.per_machine.empty() || b.pre.per_machine[0] > 0 || b.verdict != LbVerdict::kReduced,
               tag + ": preassignment not triggered");
      balanced += !b.pre.per_machine.empty() && b.pre.per_machine[0] > 0;
      o.expect(brute_force_loadbalance(inst).has_value() == truth, tag + ": oracle");
      const auto res = b.verdict == LbVerdict::kReduced ? brute_force_loadbalance(b.residual)
                                                        : std::nullopt;
      o.expect(res.has_value() == truth, tag + ": residual verdict");
      if (res) {
        try {
          reconstruct_schedule(b, *res);
        } catch (const InputError& e) {
          o.expect(false, tag + ": reconstruction " + e.what());
        }
      }
    }
  }
  o.expect(balanced > 50, "balancing family rarely preassigned");
  o.note(std::to_string(cases) + " grid instances (" + std::to_string(feasible) + " feasible), " +
         std::to_string(balanced) + " balanced");
}

// Fixed once: the largest ratio of the closed-form residual size to
// d^2 log2(pmax+1) over d <= 3, pmax <= 5.
constexpr unsigned long kSizeConstant = 66;

void loadbalancing_size(Outcome& o) {
  std::size_t instances = 0;
  for (long pmax = 1; pmax <= 5; ++pmax) {
    for (long d = 1; d <= std::min(3L, pmax); ++d) {
      const std::size_t du = static_cast<std::size_t>(d);
      const BigInt dd(d), pm(pmax);
      const BigInt g = graver_norm_bound(Objective::kLoadBalancing, pm);
      const BigInt cap = 4 * dd * g;
      const BigInt k = (dd + 1) * pow(2 * (dd + 1) * cap + 1, du + 1);
      const BigInt m2_max = (dd + 1) * k;
      const BigInt per_machine = 4 * dd * dd * (4 * pm + 1) * (4 * pm + 1);
      const BigInt t2_max = 4 * dd * dd * pm * (4 * pm + 1) * (4 * pm + 1);
      // p = (pmax - d + 1, ..., pmax).
      IntVector p;
      for (long j = pmax - d + 1; j <= pmax; ++j) p.push_back(j);
      BigInt others = 0;
      for (std::size_t j = 0; j + 1 < du; ++j) others += p[j];
      for (const BigInt& m : {BigInt(3), BigInt(10 * k), BigInt(k * k)}) {
        IntVector n(du, m / 2);
        n[du - 1] = m;
        LoadBalancingInstance inst{p, n, m, pm, pm + others};
        const EquivBundle b = equiv_loadbalancing(inst, Objective::kLoadBalancing);
        const std::string tag = "d=" + std::to_string(d) + " pmax=" + std::to_string(pmax) +
                                " m=" + m.get_str();
        ++instances;
        o.expect(b.verdict == LbVerdict::kReduced, tag + ": not reduced");
        if (b.verdict != LbVerdict::kReduced) continue;
        o.expect(b.proximity == k, tag + ": K differs from the closed form");
        o.expect(b.residual.m <= m2_max, tag + ": m'' above (d+1) K");
        for (const auto& x : b.residual.n) {
          o.expect(x <= b.residual.m * per_machine, tag + ": n'' above m'' 4d^2(4pmax+1)^2");
        }
        o.expect(b.residual.l <= t2_max && b.residual.u <= t2_max, tag + ": thresholds above bound");
        if (m > 2 * m2_max) o.expect(!b.pre.groups.empty(), tag + ": pre-fixing not triggered");
        // bits <= c d^2 log2(pmax+1)  <=>  2^bits <= (pmax+1)^(c d^2).
        const std::size_t bits = b.residual.bit_size();
        o.expect(BigInt(1) << bits <= pow(BigInt(pmax + 1), kSizeConstant * du * du),
                 tag + ": " + std::to_string(bits) + " bits above c d^2 log2(pmax+1)");
        o.expect(bits <= loadbalance_size_bound(du, pm, Objective::kLoadBalancing),
                 tag + ": above the closed-form size");
      }
    }
  }
  o.note(std::to_string(instances) + " instances, c=" + std::to_string(kSizeConstant));
}

void prefix_branch(Outcome& o) {
  LoadBalancingInstance inst{make_vector({1}), IntVector{BigInt(5000000)}, BigInt(2000000), 2, 3};
  const EquivBundle b = equiv_loadbalancing(inst);
  o.expect(b.verdict == LbVerdict::kReduced, "not reduced");
  o.expect(!b.pre.groups.empty(), "pre-fixing did not trigger");
  BigInt placed = 0, machines = 0;
  for (const auto& g : b.pre.groups) {
    placed += g.count * g.jobs[0];
    machines += g.count;
  }
  o.expect(b.residual.n[0] == inst.n[0] - placed, "n'' != n' - sum prefixed c");
  o.expect(machines + b.residual.m == inst.m, "machine groups do not add up to m");
  o.expect(b.residual.m <= 2 * b.proximity, "m'' above (d+1) K");
  o.note("K=" + b.proximity.get_str() + " m''=" + b.residual.m.get_str() + " groups=" +
         std::to_string(b.pre.groups.size()));
}

void exact_math(Outcome& o) {
  std::mt19937_64 rng(1010);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix m = rand_matrix(rng, n, n, -9, 9);
    const BigInt d = det(m);
    o.expect(d == testutil::laplace_det(m), "det differs from cofactor expansion");
    o.expect(d == det_cofactor(m), "det differs from det_cofactor");
    // Hadamard: |det| <= prod of row 2-norms.
    BigInt prod_sq = 1;
    for (std::size_t i = 0; i < n; ++i) prod_sq *= dot(m.row_vector(i), m.row_vector(i));
    o.expect(d * d <= prod_sq, "Hadamard inequality violated");
    if (d == 0) continue;
    const IntVector rhs = rand_vector(rng, n, -9, 9);
    const CramerSolution s = cramer_solve(m, rhs);
    o.expect(s.scale == abs(d), "scale != |det|");
    for (std::size_t i = 0; i < n; ++i) {
      Rat r = 0;
      for (std::size_t j = 0; j < n; ++j) r += Rat(m(i, j)) * s.rat_solution[j];
      o.expect(r == Rat(rhs[i]), "Cramer residual is not zero");
      o.expect(dot(m.row_vector(i), s.scaled_int_solution) == s.scale * rhs[i],
               "scaled Cramer residual is not zero");
    }
    for (std::size_t j = 0; j < n; ++j) {
      IntVector e(n, BigInt(0));
      e[j] = 1;
      const CramerSolution u = cramer_solve(m, e);
      o.expect(l1_norm(u.scaled_int_solution) <= hadamard_l1_bound(n, m.max_abs()),
               "adjugate column above hadamard_l1_bound");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"equivalent-vector soundness", equivalent_vectors},
      {"lower-bound reproduction", lower_bounds},
      {"generator bound", generator_bound},
      {"proximity kernel equivalence", proximity_kernel},
      {"static-equivalence solution sets", static_equivalence},
      {"knapsack-family oracles", knapsack_family},
      {"load-balancing pipeline", loadbalancing_pipeline},
      {"load-balancing size formula", loadbalancing_size},
      {"proximity pre-fix branch", prefix_branch},
      {"exact-math backbone", exact_math},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::printf("%s criterion %zu: %s (%zu checks, %.1fs) %s\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.checks, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
