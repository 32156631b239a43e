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

#include <cstdlib>
#include <cstring>

#include "instakernel/simd/kernels.hpp"

namespace instakernel::simd {
namespace {

Isa detect() {
  const char* env = std::getenv("INSTAKERNEL_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::kScalar;
  return avx2_available() ? Isa::kAvx2 : Isa::kScalar;
}

}  // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

const char* isa_name(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

std::size_t sign_mismatch(const std::int64_t* a, const std::int64_t* b,
                          std::size_t n, std::int64_t a_offset,
                          std::int64_t b_offset) {
  if (active_isa() == Isa::kAvx2) {
    return avx2::sign_mismatch(a, b, n, a_offset, b_offset);
  }
  return scalar::sign_mismatch(a, b, n, a_offset, b_offset);
}

void knapsack01_step(const std::int64_t* in, std::int64_t* out,
                     std::size_t len, std::size_t w, std::int64_t p) {
  if (active_isa() == Isa::kAvx2) {
    avx2::knapsack01_step(in, out, len, w, p);
  } else {
    scalar::knapsack01_step(in, out, len, w, p);
  }
}

void knapsack_unbounded_step(std::int64_t* dp, std::size_t len, std::size_t w,
                             std::int64_t p) {
  if (active_isa() == Isa::kAvx2) {
    avx2::knapsack_unbounded_step(dp, len, w, p);
  } else {
    scalar::knapsack_unbounded_step(dp, len, w, p);
  }
}

}  // namespace instakernel::simd
