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
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "instakernel/simd/kernels.hpp"

using namespace instakernel::simd;

namespace {

int sgn(std::int64_t v) { return (v > 0) - (v < 0); }

std::size_t naive_mismatch(const std::vector<std::int64_t>& a,
                           const std::vector<std::int64_t>& b, std::int64_t ao,
                           std::int64_t bo) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i] + ao) != sgn(b[i] + bo)) return i;
  }
  return a.size();
}

}  // namespace

TEST_CASE("isa reporting") {
  CHECK(std::string(isa_name(Isa::kScalar)) == "scalar");
  if (!avx2_available()) CHECK(active_isa() == Isa::kScalar);
}

TEST_CASE("sign_mismatch: scalar, avx2 and a naive loop agree") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = rng() % 70;
    std::vector<std::int64_t> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<std::int64_t>(rng() % 7) - 3;
      b[i] = a[i] * 2 + ((rng() % 23 == 0) ? 1 : 0);
    }
    const std::int64_t ao = static_cast<std::int64_t>(rng() % 3) - 1;
    const std::int64_t bo = 2 * ao;
    const std::size_t expect = naive_mismatch(a, b, ao, bo);
    CHECK(scalar::sign_mismatch(a.data(), b.data(), n, ao, bo) == expect);
    CHECK(sign_mismatch(a.data(), b.data(), n, ao, bo) == expect);
    if (avx2_available()) {
      CHECK(avx2::sign_mismatch(a.data(), b.data(), n, ao, bo) == expect);
    }
  }
}

TEST_CASE("sign_mismatch near the int64 range") {
  const std::int64_t big = std::int64_t{1} << 61;
  std::vector<std::int64_t> a = {big, -big, 0, big, -1};
  std::vector<std::int64_t> b = {1, -1, 0, 5, 3};
  CHECK(scalar::sign_mismatch(a.data(), b.data(), a.size(), 0, 0) == 4);
  if (avx2_available()) CHECK(avx2::sign_mismatch(a.data(), b.data(), a.size(), 0, 0) == 4);
}

TEST_CASE("knapsack01_step: scalar and avx2 agree") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 500; ++t) {
    const std::size_t len = 1 + rng() % 90;
    const std::size_t w = 1 + rng() % 20;
    const std::int64_t p = static_cast<std::int64_t>(rng() % 1000);
    std::vector<std::int64_t> in(len);
    for (auto& x : in) x = static_cast<std::int64_t>(rng() % 5000);
    std::vector<std::int64_t> expect(len);
    for (std::size_t c = 0; c < len; ++c) {
      expect[c] = c >= w ? std::max(in[c], in[c - w] + p) : in[c];
    }
    std::vector<std::int64_t> s(len), d(len), v(len);
    scalar::knapsack01_step(in.data(), s.data(), len, w, p);
    knapsack01_step(in.data(), d.data(), len, w, p);
    CHECK(s == expect);
    CHECK(d == expect);
    if (avx2_available()) {
      avx2::knapsack01_step(in.data(), v.data(), len, w, p);
      CHECK(v == expect);
    }
  }
}

TEST_CASE("knapsack_unbounded_step: scalar and avx2 agree") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 500; ++t) {
    const std::size_t len = 1 + rng() % 120;
    const std::size_t w = 1 + rng() % 12;
    const std::int64_t p = static_cast<std::int64_t>(rng() % 50);
    std::vector<std::int64_t> base(len);
    for (auto& x : base) x = static_cast<std::int64_t>(rng() % 100);
    std::vector<std::int64_t> expect = base;
    for (std::size_t c = w; c < len; ++c) expect[c] = std::max(expect[c], expect[c - w] + p);
    std::vector<std::int64_t> s = base, d = base, v = base;
    scalar::knapsack_unbounded_step(s.data(), len, w, p);
    knapsack_unbounded_step(d.data(), len, w, p);
    CHECK(s == expect);
    CHECK(d == expect);
    if (avx2_available()) {
      avx2::knapsack_unbounded_step(v.data(), len, w, p);
      CHECK(v == expect);
    }
  }
}
