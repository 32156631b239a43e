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

#ifndef INSTAKERNEL_ERRORS_HPP_
#define INSTAKERNEL_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace instakernel {

// Malformed input: wrong dimensions, bad numbers, schema violations.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive procedure would exceed its enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A certificate check that must never fail did fail.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Enumeration caps shared by the exhaustive procedures. The process-wide
// default can be overridden by INSTAKERNEL_BUDGET or the CLI --budget flag.
struct Budget {
  std::uint64_t enumeration = 1'000'000;      // cone normals, configurations, DP cells
  std::uint64_t feasible_search = 10'000'000;  // enumerate_feasible work units
  std::uint64_t branch_nodes = 200'000;        // branch-and-bound nodes

  static Budget defaults();
  static void set_process_default(const Budget& b);
};

// Throws BudgetExceeded with `what` when count > limit.
void require_within(std::uint64_t count, std::uint64_t limit,
                    const std::string& what);

}  // namespace instakernel

#endif  // INSTAKERNEL_ERRORS_HPP_
