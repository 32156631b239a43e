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

#include "instakernel/simd/kernels.hpp"

namespace instakernel::simd::scalar {
namespace {

inline int sign_of(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

std::size_t sign_mismatch(const std::int64_t* a, const std::int64_t* b,
                          std::size_t n, std::int64_t a_offset,
                          std::int64_t b_offset) {
  for (std::size_t i = 0; i < n; ++i) {
    if (sign_of(a[i] + a_offset) != sign_of(b[i] + b_offset)) return i;
  }
  return n;
}

void knapsack01_step(const std::int64_t* in, std::int64_t* out,
                     std::size_t len, std::size_t w, std::int64_t p) {
  const std::size_t head = std::min(w, len);
  std::copy(in, in + head, out);
  for (std::size_t c = head; c < len; ++c) {
    out[c] = std::max(in[c], in[c - w] + p);
  }
}

void knapsack_unbounded_step(std::int64_t* dp, std::size_t len, std::size_t w,
                             std::int64_t p) {
  if (w == 0) return;
  for (std::size_t c = w; c < len; ++c) {
    dp[c] = std::max(dp[c], dp[c - w] + p);
  }
}

}  // namespace instakernel::simd::scalar
