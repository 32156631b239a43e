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

#include "instakernel/equivvec.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "difference_scan.hpp"
#include "instakernel/ilp.hpp"
#include "instakernel/lp.hpp"
#include "instakernel/simd/kernels.hpp"

namespace instakernel {
namespace {

void require_radius(const BigInt& delta) {
  if (delta < 1) throw InputError("delta must be >= 1");
}

// (4D+1)^N as a BigInt.
BigInt full_box_size(std::size_t n, const BigInt& delta) {
  return pow(4 * delta + 1, n);
}

// Calls f(z) for every z in [-r, r]^n in odometer order.
template <typename F>
void for_each_box_point(std::size_t n, long r, F&& f) {
  IntVector z(n, BigInt(-r));
  for (;;) {
    f(z);
    std::size_t t = 0;
    for (; t < n; ++t) {
      if (z[t] < r) {
        ++z[t];
        break;
      }
      z[t] = -r;
    }
    if (t == n) break;
  }
}

IntVector primitive(IntVector v) {
  const BigInt g = gcd_of(v);
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

BigInt lcm_of_denominators(const RatVector& y) {
  BigInt l = 1;
  for (const auto& v : y) {
    const BigInt d = v.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

IntVector scaled(const RatVector& y, const BigInt& l) {
  IntVector out;
  out.reserve(y.size());
  for (const auto& v : y) out.push_back(v.num() * (l / v.den()));
  return out;
}

std::vector<Cut> to_cuts(const std::vector<detail::DifferenceScan::Violation>& vs) {
  std::vector<Cut> cuts;
  cuts.reserve(vs.size());
  for (const auto& v : vs) {
    // strict: z.y >= 1;  null: z.y == 0
    cuts.push_back({v.z, v.null ? BigInt(0) : BigInt(-1), v.null});
  }
  return cuts;
}

// Brute-force scan with the SIMD sign kernel. Inner block: the leading
// coordinates, laid out as arrays; outer odometer supplies offsets.
std::optional<IntVector> brute_witness(const IntVector& w, const IntVector& w_bar,
                                       const BigInt& delta) {
  const std::size_t n = w.size();
  const long r = 2 * delta.get_si();
  const std::size_t side = static_cast<std::size_t>(2 * r + 1);
  std::size_t inner = 0;
  std::size_t inner_count = 1;
  while (inner < n && inner_count * side <= 65536) {
    inner_count *= side;
    ++inner;
  }
  std::vector<std::int64_t> wa(n), wb(n);
  for (std::size_t j = 0; j < n; ++j) {
    wa[j] = to_int64(w[j]);
    wb[j] = to_int64(w_bar[j]);
  }
  std::vector<std::int64_t> a_in, b_in;
  a_in.reserve(inner_count);
  b_in.reserve(inner_count);
  std::vector<std::vector<long>> inner_points;
  {
    std::vector<long> z(inner, -r);
    for (;;) {
      std::int64_t a = 0, b = 0;
      for (std::size_t j = 0; j < inner; ++j) {
        a += wa[j] * z[j];
        b += wb[j] * z[j];
      }
      a_in.push_back(a);
      b_in.push_back(b);
      inner_points.push_back(z);
      std::size_t t = 0;
      for (; t < inner; ++t) {
        if (z[t] < r) {
          ++z[t];
          break;
        }
        z[t] = -r;
      }
      if (t == inner) break;
    }
  }
  std::vector<long> outer(n - inner, -r);
  for (;;) {
    std::int64_t a_off = 0, b_off = 0;
    for (std::size_t j = 0; j < outer.size(); ++j) {
      a_off += wa[inner + j] * outer[j];
      b_off += wb[inner + j] * outer[j];
    }
    const std::size_t hit =
        simd::sign_mismatch(a_in.data(), b_in.data(), a_in.size(), a_off, b_off);
    if (hit < a_in.size()) {
      IntVector z;
      for (long v : inner_points[hit]) z.emplace_back(v);
      for (long v : outer) z.emplace_back(v);
      return z;
    }
    std::size_t t = 0;
    for (; t < outer.size(); ++t) {
      if (outer[t] < r) {
        ++outer[t];
        break;
      }
      outer[t] = -r;
    }
    if (t == outer.size()) break;
  }
  return std::nullopt;
}

}  // namespace

EquivCone build_cone(const IntVector& w, const BigInt& delta) {
  require_radius(delta);
  const std::size_t n = w.size();
  const BigInt normals = full_box_size(n, delta);
  if (normals > Budget::defaults().enumeration) {
    throw BudgetExceeded("build_cone: " + normals.get_str() +
                         " normals exceed budget " +
                         std::to_string(Budget::defaults().enumeration));
  }
  EquivCone cone;
  cone.dim = n;
  cone.radius = delta;
  cone.base = w;
  for_each_box_point(n, 2 * delta.get_si(), [&](const IntVector& z) {
    const int s = sgn(dot(w, z));
    if (s > 0) {
      cone.strict_normals.push_back(z);
    } else if (s == 0 && std::any_of(z.begin(), z.end(),
                                     [](const BigInt& v) { return v != 0; })) {
      cone.null_normals.push_back(z);
    }
  });
  std::sort(cone.strict_normals.begin(), cone.strict_normals.end());
  std::sort(cone.null_normals.begin(), cone.null_normals.end());
  return cone;
}

std::vector<IntVector> enumerate_generators(const IntMatrix& a) {
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();
  if (n == 0) throw DimensionError("enumerate_generators: zero columns");
  BigInt subsets;
  mpz_bin_uiui(subsets.get_mpz_t(), m + n, n);
  const BigInt work = subsets * static_cast<unsigned long>(2 * n);
  if (work > Budget::defaults().enumeration) {
    throw BudgetExceeded("enumerate_generators: " + work.get_str() +
                         " systems exceed budget");
  }
  IntMatrix stacked = a;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n, BigInt(0));
    e[j] = 1;
    stacked.append_row(e);
  }
  BigInt norm = a.max_abs();
  if (norm < 1) norm = 1;
  const BigInt bound = hadamard_l1_bound(n, norm);

  std::set<IntVector> found;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  const std::size_t total = m + n;
  for (;;) {
    IntMatrix b(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) b(r, c) = stacked(pick[r], c);
    }
    if (det(b) != 0) {
      for (std::size_t j = 0; j < n; ++j) {
        IntVector rhs(n, BigInt(0));
        rhs[j] = 1;
        const CramerSolution sol = cramer_solve(b, rhs);
        for (int sign : {1, -1}) {
          IntVector v = sol.scaled_int_solution;
          if (sign < 0) {
            for (auto& x : v) x = -x;
          }
          bool inside = true;
          for (std::size_t r = 0; r < m && inside; ++r) inside = dot(a.row(r), v) >= 0;
          if (!inside) continue;
          if (l1_norm(v) > bound) {
            throw InternalInconsistency("generator exceeds the Hadamard l1 bound");
          }
          found.insert(primitive(std::move(v)));
        }
      }
    }
    // Next n-subset of [0, total) in lexicographic order.
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == total - n + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < n; ++k) pick[k] = pick[k - 1] + 1;
  }
  return {found.begin(), found.end()};
}

std::optional<IntVector> find_inequivalence_witness(const IntVector& w,
                                                    const IntVector& w_bar,
                                                    const BigInt& delta) {
  require_radius(delta);
  if (w.size() != w_bar.size()) throw DimensionError("check_equivalent: size mismatch");
  const std::size_t n = w.size();
  if (n == 0) return std::nullopt;
  const BigInt box = full_box_size(n, delta);
  const BigInt reach = (max_abs(w) + max_abs(w_bar)) * 2 * delta *
                       static_cast<unsigned long>(n + 1);
  if (box <= Budget::defaults().enumeration && reach < (BigInt(1) << 62)) {
    return brute_witness(w, w_bar, delta);
  }
  // Meet-in-the-middle: a differing sign pattern exists iff some z has
  // w.z > 0 with w_bar.z <= 0, or w.z == 0 with w_bar.z != 0.
  const detail::DifferenceScan scan(w, delta);
  auto v = scan.find(w_bar, BigInt(1), 1);
  if (v.empty()) return std::nullopt;
  return v.front().z;
}

bool check_equivalent(const IntVector& w, const IntVector& w_bar,
                      const BigInt& delta) {
  return !find_inequivalence_witness(w, w_bar, delta).has_value();
}

ReducedVector reduce_vector(const IntVector& w, const BigInt& delta,
                            const ReduceOptions& options) {
  require_radius(delta);
  const std::size_t n = w.size();
  if (n == 0) throw DimensionError("reduce_vector: empty vector");
  ReducedVector out;
  out.original = w;
  out.radius = delta;
  out.l1_bound = equivalent_vector_l1_bound(n, delta);
  out.reduced.assign(n, BigInt(0));

  // Zeros stay zero and signs are fixed, so work with |w| on the support.
  std::vector<std::size_t> support;
  IntVector positive;
  for (std::size_t j = 0; j < n; ++j) {
    if (w[j] != 0) {
      support.push_back(j);
      positive.push_back(abs(w[j]));
    }
  }
  const std::size_t k = support.size();
  IntVector y;
  if (k > 0) {
    const detail::DifferenceScan scan(positive, delta);
    const std::size_t per_round = std::max<std::size_t>(1, options.cuts_per_round);
    auto separate = [&](const RatVector& point) {
      const BigInt l = lcm_of_denominators(point);
      return to_cuts(scan.find(scaled(point, l), l, per_round));
    };

    auto run_minimal = [&](std::optional<std::uint64_t> node_limit) {
      FeasIlp ilp;
      ilp.a = IntMatrix(0, k);
      ilp.lower.assign(k, BigInt(1));
      ilp.upper = IntVector(k, equivalent_vector_l1_bound(k, delta));
      IlpOptions o;
      o.objective = IntVector(k, BigInt(1));
      o.separator = separate;
      o.node_limit = node_limit;
      const IlpResult r = solve_ilp(ilp, {}, o);
      if (r.status != IlpStatus::kOptimal) {
        throw InternalInconsistency("reduce_vector: equivalence system has no integer point");
      }
      out.nodes = r.nodes;
      out.cuts = r.cuts;
      return r.solution;
    };

    auto run_lp_vertex = [&]() {
      Simplex s(k);
      IntVector unit(k, BigInt(0));
      for (std::size_t j = 0; j < k; ++j) {
        unit[j] = 1;
        s.add_inequality(unit, BigInt(-1));
        unit[j] = 0;
      }
      const IntVector ones(k, BigInt(1));
      std::size_t cuts = 0;
      for (;;) {
        if (s.minimize(ones) != Simplex::Status::kOptimal) {
          throw InternalInconsistency("reduce_vector: equivalence LP not solvable");
        }
        const std::vector<Cut> fresh = separate(s.sample());
        if (fresh.empty()) break;
        for (const Cut& c : fresh) {
          if (c.equality) {
            s.add_equality(c.coeffs, c.constant);
          } else {
            s.add_inequality(c.coeffs, c.constant);
          }
        }
        cuts += fresh.size();
      }
      const RatVector point = s.sample();
      out.cuts = cuts;
      return scaled(point, lcm_of_denominators(point));
    };

    switch (options.strategy) {
      case ReduceStrategy::kMinimal:
        y = run_minimal(std::nullopt);
        out.minimal = true;
        break;
      case ReduceStrategy::kLpVertex:
        y = run_lp_vertex();
        break;
      case ReduceStrategy::kAuto:
        try {
          y = run_minimal(options.minimal_node_limit);
          out.minimal = true;
        } catch (const BudgetExceeded&) {
          y = run_lp_vertex();
        }
        break;
    }
    for (std::size_t t = 0; t < k; ++t) {
      out.reduced[support[t]] = sgn(w[support[t]]) > 0 ? y[t] : BigInt(-y[t]);
    }
  } else {
    out.minimal = true;
  }
  out.l1_norm = l1_norm(out.reduced);
  if (out.l1_norm > out.l1_bound) {
    throw InternalInconsistency("reduce_vector: l1 norm " + out.l1_norm.get_str() +
                                " above bound " + out.l1_bound.get_str());
  }
  out.verified = check_equivalent(w, out.reduced, delta);
  if (!out.verified) {
    throw InternalInconsistency("reduce_vector: result is not equivalent");
  }
  return out;
}

GeneratorSum reduce_vector_generator_sum(const IntVector& w, const BigInt& delta) {
  const EquivCone cone = build_cone(w, delta);
  const std::size_t n = w.size();
  // Halfspaces z.x >= 0 for every normal with w.z >= 0, one per direction.
  std::set<IntVector> rows;
  for (const auto& z : cone.strict_normals) rows.insert(primitive(z));
  for (const auto& z : cone.null_normals) rows.insert(primitive(z));
  IntMatrix a(0, n);
  for (const auto& z : rows) a.append_row(z);
  const std::vector<IntVector> gens = enumerate_generators(a);

  GeneratorSum out;
  out.generators = gens.size();
  out.vector.assign(n, BigInt(0));
  IntMatrix chosen(0, n);
  for (const auto& g : gens) {
    IntMatrix trial = chosen;
    trial.append_row(g);
    if (rank(trial) == trial.rows()) {
      chosen = std::move(trial);
      for (std::size_t j = 0; j < n; ++j) out.vector[j] += g[j];
    }
  }
  out.summed = chosen.rows();
  out.l1_norm = l1_norm(out.vector);
  out.equivalent = check_equivalent(w, out.vector, delta);
  return out;
}

BigInt min_equivalent_norm(const IntVector& w, const BigInt& delta) {
  require_radius(delta);
  const std::size_t n = w.size();
  if (n == 0) return 0;
  const BigInt cap = l1_norm(w);
  const std::uint64_t limit = Budget::defaults().enumeration;
  std::uint64_t tried = 0;
  IntVector v(n);
  // All integer vectors with l1 norm exactly `remaining` over coords >= j.
  std::function<bool(std::size_t, long)> walk = [&](std::size_t j, long remaining) {
    if (j + 1 == n) {
      for (long s : {1L, -1L}) {
        if (remaining == 0 && s < 0) break;
        v[j] = s * remaining;
        require_within(++tried, limit, "min_equivalent_norm candidates");
        if (check_equivalent(w, v, delta)) return true;
      }
      return false;
    }
    for (long t = 0; t <= remaining; ++t) {
      for (long s : {1L, -1L}) {
        if (t == 0 && s < 0) break;
        v[j] = s * t;
        if (walk(j + 1, remaining - t)) return true;
      }
    }
    return false;
  };
  for (long norm = 0; BigInt(norm) <= cap; ++norm) {
    if (walk(0, norm)) return norm;
  }
  throw InternalInconsistency("min_equivalent_norm: w itself was not found");
}

}  // namespace instakernel
