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

#include <set>

#include "doctest.h"
#include "instakernel/ilp.hpp"
#include "test_util.hpp"

using namespace instakernel;

namespace {

std::vector<IntVector> filter_box(const FeasIlp& ilp) {
  std::vector<IntVector> out;
  testutil::for_each_point(ilp.lower_or_zero(), *ilp.upper, [&](const IntVector& x) {
    for (std::size_t i = 0; i < ilp.rows(); ++i) {
      if (testutil::dot(ilp.a.row_vector(i), x) != ilp.b[i]) return;
    }
    out.push_back(x);
  });
  return out;
}

}  // namespace

TEST_CASE("solve_ilp: forced optimum") {
  FeasIlp ilp{IntMatrix{{1, 1}}, make_vector({2}), {}, std::nullopt};
  IlpOptions o;
  o.objective = make_vector({1, 0});
  const IlpResult r = solve_ilp(ilp, make_vector({2, 2}), o);
  REQUIRE(r.status == IlpStatus::kOptimal);
  CHECK(r.solution == make_vector({0, 2}));
}

TEST_CASE("solve_ilp: infeasible box") {
  FeasIlp ilp{IntMatrix{{1, 1}}, make_vector({5}), {}, std::nullopt};
  CHECK(solve_ilp(ilp, make_vector({2, 2})).status == IlpStatus::kInfeasible);
}

TEST_CASE("solve_ilp: integrality forces branching") {
  FeasIlp ilp{IntMatrix{{2, 3}}, make_vector({7}), {}, std::nullopt};
  IlpOptions o;
  o.objective = make_vector({1, 1});
  const IlpResult r = solve_ilp(ilp, make_vector({3, 3}), o);
  REQUIRE(r.status == IlpStatus::kOptimal);
  CHECK(r.solution == make_vector({2, 1}));
  FeasIlp parity{IntMatrix{{2, 2}}, make_vector({3}), {}, std::nullopt};
  CHECK(solve_ilp(parity, make_vector({5, 5})).status == IlpStatus::kInfeasible);
}

TEST_CASE("solve_ilp: node limit") {
  FeasIlp ilp{IntMatrix{{2, 2, 2, 2}}, make_vector({7}), {}, std::nullopt};
  IlpOptions o;
  o.node_limit = 3;
  CHECK_THROWS_AS(solve_ilp(ilp, make_vector({9, 9, 9, 9}), o), BudgetExceeded);
}

TEST_CASE("solve_ilp agrees with a box filter on random systems") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 150; ++t) {
    const std::size_t m = 1 + t % 2, n = 2 + t % 3;
    FeasIlp ilp{testutil::rand_matrix(rng, m, n, -2, 2), testutil::rand_vector(rng, m, -4, 4),
                {}, IntVector(n, BigInt(2))};
    const auto pts = filter_box(ilp);
    IlpOptions o;
    o.objective = testutil::rand_vector(rng, n, -2, 2);
    const IlpResult r = solve_ilp(ilp, *ilp.upper, o);
    CHECK((r.status == IlpStatus::kOptimal) == !pts.empty());
    if (pts.empty()) continue;
    BigInt best = testutil::dot(*o.objective, pts[0]);
    for (const auto& p : pts) best = std::min(best, BigInt(testutil::dot(*o.objective, p)));
    CHECK(ilp.satisfied_by(r.solution));
    CHECK(testutil::dot(*o.objective, r.solution) == best);
  }
}

TEST_CASE("enumerate_feasible small cases") {
  FeasIlp one{IntMatrix{{1, 1}}, make_vector({1}), {}, make_vector({1, 1})};
  CHECK(enumerate_feasible(one) == std::vector<IntVector>{make_vector({0, 1}), make_vector({1, 0})});
  FeasIlp diag{IntMatrix{{1, -1}}, make_vector({0}), {}, make_vector({2, 2})};
  CHECK(enumerate_feasible(diag) ==
        std::vector<IntVector>{make_vector({0, 0}), make_vector({1, 1}), make_vector({2, 2})});
  FeasIlp open{IntMatrix{{1, 1}}, make_vector({1}), {}, std::nullopt};
  CHECK_THROWS_AS(enumerate_feasible(open), InputError);
}

TEST_CASE("enumerate_feasible matches an independent filter loop") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + t % 2, n = 1 + t % 4;
    FeasIlp ilp{testutil::rand_matrix(rng, m, n, -2, 2), testutil::rand_vector(rng, m, -3, 3),
                {}, IntVector(n, BigInt(3))};
    if (t % 5 == 0) {
      ilp.lower = IntVector(n, BigInt(-1));
    }
    CHECK(enumerate_feasible(ilp) == filter_box(ilp));
    const auto any = find_feasible_point(ilp);
    CHECK(any.has_value() == !filter_box(ilp).empty());
    if (any) CHECK(ilp.satisfied_by(*any));
  }
}

TEST_CASE("enumerate_feasible with huge coefficients uses exact arithmetic") {
  const BigInt big = BigInt(1) << 80;
  FeasIlp ilp{IntMatrix(1, 3), IntVector{big * 3}, {}, make_vector({2, 2, 2})};
  ilp.a(0, 0) = big;
  ilp.a(0, 1) = big * 2;
  ilp.a(0, 2) = big * 3;
  CHECK(enumerate_feasible(ilp) ==
        std::vector<IntVector>{make_vector({0, 0, 1}), make_vector({1, 1, 0})});
}

TEST_CASE("enumerate_feasible work limit") {
  FeasIlp ilp{IntMatrix(1, 6), make_vector({0}), {}, IntVector(6, BigInt(9))};
  CHECK_THROWS_AS(enumerate_feasible(ilp, 100), BudgetExceeded);
}

TEST_CASE("FeasIlp validation") {
  FeasIlp bad{IntMatrix{{1, 1}}, make_vector({1, 2}), {}, std::nullopt};
  CHECK_THROWS_AS(bad.validate(), DimensionError);
  FeasIlp box{IntMatrix{{1}}, make_vector({1}), make_vector({2}), make_vector({1})};
  CHECK_THROWS_AS(box.validate(), InputError);
}
