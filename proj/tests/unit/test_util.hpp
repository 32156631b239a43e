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

#ifndef INSTAKERNEL_TESTS_TEST_UTIL_HPP_
#define INSTAKERNEL_TESTS_TEST_UTIL_HPP_

// Independent oracles and generators for the unit tests. Nothing here calls
// into the library code under test except plain data types.

#include <functional>
#include <random>
#include <vector>

#include "instakernel/exactmath.hpp"

namespace testutil {

using instakernel::BigInt;
using instakernel::IntMatrix;
using instakernel::IntVector;

inline BigInt rand_int(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntVector rand_vector(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  IntVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rand_int(rng, lo, hi));
  return v;
}

inline IntMatrix rand_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c,
                             long lo, long hi) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_int(rng, lo, hi);
  }
  return m;
}

// Random value with exactly `bits` bits.
inline BigInt rand_big(std::mt19937_64& rng, unsigned bits) {
  BigInt v = 1;
  for (unsigned i = 1; i < bits; ++i) v = 2 * v + static_cast<unsigned long>(rng() & 1U);
  return v;
}

// Calls f on every integer point of [lo_i, hi_i] in lexicographic order.
inline void for_each_point(const IntVector& lo, const IntVector& hi,
                           const std::function<void(const IntVector&)>& f) {
  IntVector x = lo;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) return;
  }
  while (true) {
    f(x);
    std::size_t i = x.size();
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (std::size_t k = i + 1; k < x.size(); ++k) x[k] = lo[k];
        break;
      }
      if (i == 0) return;
    }
    if (x.empty()) return;
  }
}

inline BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline int sign(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Pairwise definition: w.x >= w.y <=> w_bar.x >= w_bar.y on [-D, D]^N.
inline bool pairwise_equivalent(const IntVector& w, const IntVector& wb, long delta) {
  const std::size_t n = w.size();
  std::vector<IntVector> pts;
  for_each_point(IntVector(n, BigInt(-delta)), IntVector(n, BigInt(delta)),
                 [&](const IntVector& x) { pts.push_back(x); });
  std::vector<BigInt> a, b;
  for (const auto& x : pts) {
    a.push_back(dot(w, x));
    b.push_back(dot(wb, x));
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if ((a[i] >= a[j]) != (b[i] >= b[j])) return false;
    }
  }
  return true;
}

// Cofactor determinant, written separately from the library's version.
inline BigInt laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) minor(i - 1, cc++) = m(i, j);
      }
    }
    const BigInt t = m(0, c) * laplace_det(minor);
    s += (c % 2 == 0) ? t : BigInt(-t);
  }
  return s;
}

}  // namespace testutil

#endif  // INSTAKERNEL_TESTS_TEST_UTIL_HPP_
