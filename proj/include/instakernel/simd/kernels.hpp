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

#ifndef INSTAKERNEL_SIMD_KERNELS_HPP_
#define INSTAKERNEL_SIMD_KERNELS_HPP_

// int64 inner loops with a scalar reference and an AVX2 variant. The
// dispatching entry points pick the variant once per process; callers are
// responsible for keeping every intermediate value inside int64.

#include <cstddef>
#include <cstdint>

namespace instakernel::simd {

enum class Isa { kScalar, kAvx2 };

// Best variant supported by this CPU, unless INSTAKERNEL_SIMD=scalar.
Isa active_isa();
bool avx2_available();
const char* isa_name(Isa isa);

// Index of the first i in [0, n) with
//   sign(a[i] + a_offset) != sign(b[i] + b_offset),
// or n when every sign agrees.
std::size_t sign_mismatch(const std::int64_t* a, const std::int64_t* b,
                          std::size_t n, std::int64_t a_offset,
                          std::int64_t b_offset);

// One 0-1 knapsack item: out[c] = max(in[c], in[c - w] + p) for c >= w and
// out[c] = in[c] below w. `in` and `out` must not alias.
void knapsack01_step(const std::int64_t* in, std::int64_t* out,
                     std::size_t len, std::size_t w, std::int64_t p);

// One unbounded knapsack item, in place and ascending:
//   dp[c] = max(dp[c], dp[c - w] + p).
void knapsack_unbounded_step(std::int64_t* dp, std::size_t len, std::size_t w,
                             std::int64_t p);

namespace scalar {
std::size_t sign_mismatch(const std::int64_t* a, const std::int64_t* b,
                          std::size_t n, std::int64_t a_offset,
                          std::int64_t b_offset);
void knapsack01_step(const std::int64_t* in, std::int64_t* out,
                     std::size_t len, std::size_t w, std::int64_t p);
void knapsack_unbounded_step(std::int64_t* dp, std::size_t len, std::size_t w,
                             std::int64_t p);
}  // namespace scalar

namespace avx2 {
std::size_t sign_mismatch(const std::int64_t* a, const std::int64_t* b,
                          std::size_t n, std::int64_t a_offset,
                          std::int64_t b_offset);
void knapsack01_step(const std::int64_t* in, std::int64_t* out,
                     std::size_t len, std::size_t w, std::int64_t p);
void knapsack_unbounded_step(std::int64_t* dp, std::size_t len, std::size_t w,
                             std::int64_t p);
}  // namespace avx2

}  // namespace instakernel::simd

#endif  // INSTAKERNEL_SIMD_KERNELS_HPP_
