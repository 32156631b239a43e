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

#ifndef INSTAKERNEL_PIPELINE_HPP_
#define INSTAKERNEL_PIPELINE_HPP_

// File-level dispatch behind the command-line tool: compress an instance of
// any kind and check a reduced instance against its original.

#include <optional>
#include <string>

#include "instakernel/io.hpp"

namespace instakernel {

enum class CompressMode { kStatic, kKernel };

struct Report {
  std::string kind;
  std::string mode;
  std::size_t original_bits = 0;
  std::size_t reduced_bits = 0;
  std::size_t theoretical_bound_bits = 0;
  double elapsed_ms = 0;
  std::string verdict = "Reduced";       // Reduced | Infeasible | BudgetExceeded
  std::string verification = "Skipped";  // Verified | Skipped | Failed
  std::string message;
  io::Json to_json() const;
};

struct CompressResult {
  io::Instance reduced;
  std::optional<io::PreFile> pre;
  Report report;
};

// Knapsack kinds and loadbalance ignore the mode. With `verify` the result is
// checked by verify_reduction; budget overruns there leave it Skipped.
CompressResult compress(const io::Instance& inst, CompressMode mode, bool verify);

struct VerifyResult {
  std::string status = "Skipped";  // Verified | Skipped | Failed
  std::string message;             // counterexample or reason
};

// Compares solution sets (static kinds), feasibility plus reconstruction of
// every residual witness (kinds with a pre-solution), or optimum values
// (unbounded knapsack). Never throws BudgetExceeded; reports Skipped instead.
VerifyResult verify_reduction(const io::Instance& original, const io::Instance& reduced,
                              const std::optional<io::PreFile>& pre);

}  // namespace instakernel

#endif  // INSTAKERNEL_PIPELINE_HPP_
