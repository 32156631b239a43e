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

#ifndef INSTAKERNEL_IO_HPP_
#define INSTAKERNEL_IO_HPP_

// Instance files: {"kind": str, "version": 1, "payload": {...}} with every
// integer written as a decimal string.

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include "json.hpp"

#include "instakernel/ilpreduce.hpp"
#include "instakernel/knapfam.hpp"
#include "instakernel/schedbal.hpp"

namespace instakernel::io {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

struct IlpFile {
  FeasIlp ilp;
  std::optional<BigInt> scope_u;  // solutions kept on [-u, u]
};
struct TwoStageFile {
  TwoStageIlp ilp;
  std::optional<BigInt> scope_u;
};
struct NFoldFile {
  NFoldIlp ilp;
  std::optional<BigInt> scope_u;
};
struct LoadBalanceFile {
  LoadBalancingInstance instance;
  Objective objective = Objective::kLoadBalancing;
};
struct VectorFile {
  IntVector w;
  BigInt delta = 1;
};

// Fixed part of a solution, keyed by the kind it belongs to.
struct KernelPre {
  IntVector fixed;
  BigInt proximity;
};
struct UksPre {
  std::size_t items = 0;
  std::vector<std::pair<std::size_t, unsigned>> copies;
};
struct LoadBalancePre {
  Objective objective = Objective::kLoadBalancing;
  PreSolution pre;
};
using PreFile = std::variant<KernelPre, UksPre, LoadBalancePre>;

using Instance = std::variant<IlpFile, TwoStageFile, NFoldFile, KnapsackInstance,
                              SubsetSumInstance, UnboundedKnapsackInstance,
                              MdKnapsackInstance, LoadBalanceFile, VectorFile>;

std::string kind_of(const Instance& inst);

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& doc);

Json pre_to_json(const PreFile& pre);
PreFile pre_from_json(const Json& doc);

Json schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const Json& doc);

// Helpers shared with the CLI.
Json to_json(const BigInt& v);
Json to_json(std::span<const BigInt> v);
Json to_json(const IntMatrix& m);
BigInt bigint_from_json(const Json& j, const std::string& what);
IntVector vector_from_json(const Json& j, const std::string& what);

// Throws InputError on unreadable files or malformed JSON.
Json read_json(const std::filesystem::path& path);
std::string dump(const Json& doc);  // two-space indent, trailing newline
// Writes to a sibling temporary file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace instakernel::io

#endif  // INSTAKERNEL_IO_HPP_
