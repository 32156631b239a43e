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

#include "instakernel/errors.hpp"

#include <cstdlib>
#include <mutex>
#include <optional>

namespace instakernel {
namespace {

std::mutex g_budget_mu;
std::optional<Budget> g_budget;

Budget from_environment() {
  Budget b;
  if (const char* env = std::getenv("INSTAKERNEL_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      b.enumeration = v;
      b.feasible_search = v;
    }
  }
  return b;
}

}  // namespace

Budget Budget::defaults() {
  std::lock_guard<std::mutex> lock(g_budget_mu);
  if (!g_budget) g_budget = from_environment();
  return *g_budget;
}

void Budget::set_process_default(const Budget& b) {
  std::lock_guard<std::mutex> lock(g_budget_mu);
  g_budget = b;
}

void require_within(std::uint64_t count, std::uint64_t limit,
                    const std::string& what) {
  if (count > limit) {
    throw BudgetExceeded(what + ": " + std::to_string(count) +
                         " exceeds budget " + std::to_string(limit));
  }
}

}  // namespace instakernel
