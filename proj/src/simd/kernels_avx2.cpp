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

// Compiled with -mavx2. Nothing in here may run before the dispatcher has
// confirmed AVX2 support.

#include <immintrin.h>

#include <algorithm>

#include "instakernel/simd/kernels.hpp"

namespace instakernel::simd::avx2 {
namespace {

// AVX2 has no 64-bit max; emulate with compare + blend.
inline __m256i max_epi64(__m256i x, __m256i y) {
  const __m256i gt = _mm256_cmpgt_epi64(x, y);
  return _mm256_blendv_epi8(y, x, gt);
}

}  // namespace

std::size_t sign_mismatch(const std::int64_t* a, const std::int64_t* b,
                          std::size_t n, std::int64_t a_offset,
                          std::int64_t b_offset) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i va_off = _mm256_set1_epi64x(a_offset);
  const __m256i vb_off = _mm256_set1_epi64x(b_offset);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_add_epi64(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)), va_off);
    const __m256i vb = _mm256_add_epi64(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)), vb_off);
    // Signs agree iff both the "> 0" and the "< 0" masks agree.
    const __m256i pos = _mm256_xor_si256(_mm256_cmpgt_epi64(va, zero),
                                         _mm256_cmpgt_epi64(vb, zero));
    const __m256i neg = _mm256_xor_si256(_mm256_cmpgt_epi64(zero, va),
                                         _mm256_cmpgt_epi64(zero, vb));
    const int mask = _mm256_movemask_pd(
        _mm256_castsi256_pd(_mm256_or_si256(pos, neg)));
    if (mask != 0) return i + static_cast<std::size_t>(__builtin_ctz(mask));
  }
  for (; i < n; ++i) {
    const std::int64_t x = a[i] + a_offset;
    const std::int64_t y = b[i] + b_offset;
    if (((x > 0) - (x < 0)) != ((y > 0) - (y < 0))) return i;
  }
  return n;
}

void knapsack01_step(const std::int64_t* in, std::int64_t* out,
                     std::size_t len, std::size_t w, std::int64_t p) {
  const std::size_t head = std::min(w, len);
  std::copy(in, in + head, out);
  const __m256i vp = _mm256_set1_epi64x(p);
  std::size_t c = head;
  for (; c + 4 <= len; c += 4) {
    const __m256i keep =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + c));
    const __m256i take = _mm256_add_epi64(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + c - w)), vp);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + c),
                        max_epi64(keep, take));
  }
  for (; c < len; ++c) out[c] = std::max(in[c], in[c - w] + p);
}

void knapsack_unbounded_step(std::int64_t* dp, std::size_t len, std::size_t w,
                             std::int64_t p) {
  if (w == 0) return;
  std::size_t c = w;
  // A block of four reads dp[c - w .. c + 3 - w], all already final when
  // w >= 4. Smaller weights carry a dependency inside the block.
  if (w >= 4) {
    const __m256i vp = _mm256_set1_epi64x(p);
    for (; c + 4 <= len; c += 4) {
      const __m256i keep =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dp + c));
      const __m256i take = _mm256_add_epi64(
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dp + c - w)), vp);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dp + c),
                          max_epi64(keep, take));
    }
  }
  for (; c < len; ++c) dp[c] = std::max(dp[c], dp[c - w] + p);
}

}  // namespace instakernel::simd::avx2
