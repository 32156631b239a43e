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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "instakernel/equivvec.hpp"
#include "test_util.hpp"

using namespace instakernel;

namespace {

// Swaps the process budget for the lifetime of the guard.
class BudgetGuard {
 public:
  explicit BudgetGuard(std::uint64_t enumeration) : saved_(Budget::defaults()) {
    Budget b = saved_;
    b.enumeration = enumeration;
    Budget::set_process_default(b);
  }
  ~BudgetGuard() { Budget::set_process_default(saved_); }

 private:
  Budget saved_;
};

bool contains(const std::vector<IntVector>& v, const IntVector& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST_CASE("build_cone examples") {
  const EquivCone one = build_cone(make_vector({1}), 1);
  CHECK(one.strict_normals == std::vector<IntVector>{make_vector({1}), make_vector({2})});
  CHECK(one.null_normals.empty());

  const EquivCone zero = build_cone(make_vector({0, 0}), 1);
  CHECK(zero.strict_normals.empty());
  CHECK(zero.null_normals.size() == 24);

  const EquivCone c = build_cone(make_vector({1, 2}), 1);
  CHECK(contains(c.null_normals, make_vector({2, -1})));
  CHECK(contains(c.null_normals, make_vector({-2, 1})));
  CHECK(contains(c.strict_normals, make_vector({0, 1})));
  CHECK(contains(c.strict_normals, make_vector({1, 0})));
  CHECK(contains(c.strict_normals, make_vector({1, 1})));
  CHECK(std::is_sorted(c.strict_normals.begin(), c.strict_normals.end()));
  for (const auto& z : c.strict_normals) CHECK(testutil::dot(make_vector({1, 2}), z) > 0);
}

TEST_CASE("build_cone respects the budget") {
  BudgetGuard g(100);
  CHECK_THROWS_AS(build_cone(make_vector({1, 2, 3}), 1), BudgetExceeded);
}

TEST_CASE("enumerate_generators examples") {
  CHECK(enumerate_generators(IntMatrix::identity(2)) ==
        std::vector<IntVector>{make_vector({0, 1}), make_vector({1, 0})});
  CHECK(enumerate_generators(IntMatrix{{1, -1}, {0, 1}}) ==
        std::vector<IntVector>{make_vector({1, 0}), make_vector({1, 1})});
  CHECK(enumerate_generators(IntMatrix{{1}}) == std::vector<IntVector>{make_vector({1})});
}

TEST_CASE("generators lie in the cone and respect the l1 bound") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 3, m = 1 + (t / 3) % 3;
    const IntMatrix a = testutil::rand_matrix(rng, m, n, -2, 2);
    const BigInt bound = hadamard_l1_bound(n, std::max(a.max_abs(), BigInt(1)));
    for (const auto& v : enumerate_generators(a)) {
      CHECK(gcd_of(v) == 1);
      CHECK(l1_norm(v) <= bound);
      for (std::size_t i = 0; i < m; ++i) CHECK(testutil::dot(a.row_vector(i), v) >= 0);
    }
  }
}

TEST_CASE("reduce_vector examples") {
  CHECK(reduce_vector(make_vector({1, 2}), 1).reduced == make_vector({1, 2}));
  const ReducedVector r = reduce_vector(make_vector({3, 5}), 1);
  CHECK(r.reduced == make_vector({2, 3}));
  CHECK(r.l1_norm == 5);
  CHECK(r.verified);
  CHECK(reduce_vector(make_vector({1, 1000000}), 1).reduced == make_vector({1, 3}));
  CHECK(reduce_vector(make_vector({0, 0, 0}), 1).reduced == make_vector({0, 0, 0}));
  CHECK(reduce_vector(make_vector({-3, 0, 2}), 1).reduced == make_vector({-3, 0, 2}));
  CHECK_THROWS_AS(reduce_vector(make_vector({1}), 0), InputError);
}

TEST_CASE("reduce_vector is pairwise equivalent, sign preserving and bounded") {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + t % 3;
    const long delta = 1 + (t / 3) % 2;
    const IntVector w = testutil::rand_vector(rng, n, -40, 40);
    const ReducedVector r = reduce_vector(w, delta);
    CHECK(testutil::pairwise_equivalent(w, r.reduced, delta));
    for (std::size_t i = 0; i < n; ++i) CHECK(testutil::sign(w[i]) == testutil::sign(r.reduced[i]));
    CHECK(l1_norm(r.reduced) <= equivalent_vector_l1_bound(n, delta));
    CHECK(l1_norm(r.reduced) <= l1_norm(w));
  }
}

TEST_CASE("reduce_vector strategies agree on equivalence") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 40; ++t) {
    const IntVector w = testutil::rand_vector(rng, 3, -1000, 1000);
    ReduceOptions lp;
    lp.strategy = ReduceStrategy::kLpVertex;
    ReduceOptions minimal;
    minimal.strategy = ReduceStrategy::kMinimal;
    const ReducedVector a = reduce_vector(w, 1, lp);
    const ReducedVector b = reduce_vector(w, 1, minimal);
    CHECK(testutil::pairwise_equivalent(w, a.reduced, 1));
    CHECK(testutil::pairwise_equivalent(w, b.reduced, 1));
    CHECK(b.minimal);
    CHECK(l1_norm(b.reduced) <= l1_norm(a.reduced));
  }
}

TEST_CASE("reduce_vector reaches larger dimensions") {
  std::mt19937_64 rng(54);
  IntVector w;
  for (int i = 0; i < 8; ++i) w.push_back(testutil::rand_big(rng, 70));
  const ReducedVector r = reduce_vector(w, 1);
  CHECK(r.verified);
  CHECK(l1_norm(r.reduced) <= equivalent_vector_l1_bound(8, 1));
  CHECK(check_equivalent(w, r.reduced, 1));
}

TEST_CASE("check_equivalent examples") {
  CHECK(check_equivalent(make_vector({1, 2}), make_vector({2, 4}), 1));
  CHECK_FALSE(check_equivalent(make_vector({1, 2}), make_vector({1, 1}), 1));
  CHECK(check_equivalent(make_vector({3, 5}), make_vector({2, 3}), 1));
  CHECK_THROWS_AS(check_equivalent(make_vector({1}), make_vector({1, 2}), 1), DimensionError);
}

TEST_CASE("check_equivalent matches the pairwise definition") {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 3;
    const long delta = 1 + t % 2;
    const IntVector w = testutil::rand_vector(rng, n, -6, 6);
    const IntVector wb = testutil::rand_vector(rng, n, -6, 6);
    const bool expect = testutil::pairwise_equivalent(w, wb, delta);
    CHECK(check_equivalent(w, wb, delta) == expect);
    const auto z = find_inequivalence_witness(w, wb, delta);
    CHECK(z.has_value() == !expect);
    if (z) {
      CHECK(max_abs(*z) <= 2 * delta);
      CHECK(testutil::sign(testutil::dot(w, *z)) != testutil::sign(testutil::dot(wb, *z)));
    }
  }
}

TEST_CASE("meet-in-the-middle scan agrees with the direct scan") {
  std::mt19937_64 rng(56);
  std::vector<std::pair<IntVector, IntVector>> cases;
  for (int t = 0; t < 200; ++t) {
    IntVector w = testutil::rand_vector(rng, 4, -9, 9);
    IntVector wb = (t % 2 == 0) ? reduce_vector(w, 1).reduced : testutil::rand_vector(rng, 4, -9, 9);
    cases.emplace_back(std::move(w), std::move(wb));
  }
  std::vector<bool> direct;
  for (const auto& [w, wb] : cases) direct.push_back(check_equivalent(w, wb, 1));
  BudgetGuard g(100);  // 5^4 points exceed it, 5^2 do not
  for (std::size_t i = 0; i < cases.size(); ++i) {
    CHECK(check_equivalent(cases[i].first, cases[i].second, 1) == direct[i]);
  }
}

TEST_CASE("reduce_vector_generator_sum") {
  const GeneratorSum one = reduce_vector_generator_sum(make_vector({1}), 1);
  CHECK(one.vector == make_vector({1}));
  CHECK(one.equivalent);
  const GeneratorSum diag = reduce_vector_generator_sum(make_vector({1, 1}), 1);
  CHECK(diag.equivalent);
  CHECK(check_equivalent(make_vector({1, 1}), diag.vector, 1));
  const GeneratorSum two = reduce_vector_generator_sum(make_vector({1, 2}), 2);
  if (two.equivalent) CHECK(check_equivalent(make_vector({1, 2}), two.vector, 2));
}

TEST_CASE("min_equivalent_norm values") {
  CHECK(min_equivalent_norm(make_vector({1}), 3) == 1);
  CHECK(min_equivalent_norm(make_vector({1, 2}), 2) == 3);
  CHECK(min_equivalent_norm(make_vector({1, 3}), 3) == 4);
  CHECK(min_equivalent_norm(make_vector({1, 2, 4}), 2) == 7);
  CHECK(min_equivalent_norm(make_vector({0, 0}), 1) == 0);
}

TEST_CASE("minimal strategy attains the exhaustive minimum") {
  std::mt19937_64 rng(57);
  ReduceOptions minimal;
  minimal.strategy = ReduceStrategy::kMinimal;
  for (int t = 0; t < 30; ++t) {
    const IntVector w = testutil::rand_vector(rng, 2 + t % 2, -30, 30);
    CHECK(l1_norm(reduce_vector(w, 1, minimal).reduced) == min_equivalent_norm(w, 1));
  }
}
