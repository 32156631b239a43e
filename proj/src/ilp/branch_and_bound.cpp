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

#include <utility>
#include <vector>

#include "instakernel/ilp.hpp"
#include "instakernel/lp.hpp"

namespace instakernel {

IntVector FeasIlp::lower_or_zero() const {
  if (lower.empty()) return IntVector(cols(), BigInt(0));
  return lower;
}

void FeasIlp::validate() const {
  if (b.size() != a.rows()) {
    throw DimensionError("ilp: b has " + std::to_string(b.size()) +
                         " entries for " + std::to_string(a.rows()) + " rows");
  }
  if (!lower.empty() && lower.size() != a.cols()) {
    throw DimensionError("ilp: lower has wrong length");
  }
  if (upper) {
    if (upper->size() != a.cols()) throw DimensionError("ilp: upper has wrong length");
    const IntVector lo = lower_or_zero();
    for (std::size_t j = 0; j < lo.size(); ++j) {
      if ((*upper)[j] < lo[j]) {
        throw InputError("ilp: upper bound below lower bound for variable " +
                         std::to_string(j));
      }
    }
  }
}

bool FeasIlp::satisfied_by(std::span<const BigInt> x) const {
  if (x.size() != cols()) return false;
  const IntVector lo = lower_or_zero();
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < lo[j]) return false;
    if (upper && x[j] > (*upper)[j]) return false;
  }
  for (std::size_t i = 0; i < rows(); ++i) {
    if (dot(a.row(i), x) != b[i]) return false;
  }
  return true;
}

namespace {

void apply_cut(Simplex& s, const Cut& c) {
  if (c.equality) {
    s.add_equality(c.coeffs, c.constant);
  } else {
    s.add_inequality(c.coeffs, c.constant);
  }
}

struct Node {
  Simplex simplex;
  std::size_t cuts_applied;
};

}  // namespace

IlpResult solve_ilp(const FeasIlp& ilp, const IntVector& box,
                    const IlpOptions& options) {
  ilp.validate();
  const std::size_t n = ilp.cols();
  if (!box.empty() && box.size() != n) throw DimensionError("solve_ilp: box size");
  if (box.empty() && !ilp.upper) {
    throw InputError("solve_ilp: a finite box is required");
  }
  if (options.objective && options.objective->size() != n) {
    throw DimensionError("solve_ilp: objective size");
  }
  const IntVector lower = ilp.lower_or_zero();
  IntVector upper(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!box.empty() && ilp.upper) {
      upper[j] = box[j] < (*ilp.upper)[j] ? box[j] : (*ilp.upper)[j];
    } else {
      upper[j] = box.empty() ? (*ilp.upper)[j] : box[j];
    }
  }
  const IntVector objective =
      options.objective ? *options.objective : IntVector(n, BigInt(0));
  const std::uint64_t node_limit =
      options.node_limit ? *options.node_limit : Budget::defaults().branch_nodes;

  IlpResult result;
  Simplex root(n);
  IntVector unit(n, BigInt(0));
  for (std::size_t j = 0; j < n; ++j) {
    unit[j] = 1;
    root.add_inequality(unit, BigInt(-lower[j]));
    unit[j] = -1;
    root.add_inequality(unit, upper[j]);
    unit[j] = 0;
  }
  for (std::size_t i = 0; i < ilp.rows(); ++i) {
    root.add_equality(ilp.a.row(i), BigInt(-ilp.b[i]));
  }
  if (root.empty()) return result;

  std::vector<Cut> cuts;
  std::vector<Node> stack;
  stack.push_back({std::move(root), 0});
  std::optional<BigInt> best;
  std::uint64_t tableau_work = 0;

  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    require_within(++result.nodes, node_limit, "branch-and-bound nodes");
    Simplex& s = node.simplex;
    // Branching rows pile up along deep paths; charge the tableau size too.
    tableau_work += static_cast<std::uint64_t>(s.num_constraints()) * (n + 1);
    require_within(tableau_work, Budget::defaults().feasible_search, "branch-and-bound tableau work");

    RatVector x;
    Rat value;
    bool pruned = false;
    for (;;) {
      for (; node.cuts_applied < cuts.size(); ++node.cuts_applied) {
        apply_cut(s, cuts[node.cuts_applied]);
      }
      if (s.empty() || s.minimize(objective) != Simplex::Status::kOptimal) {
        pruned = true;
        break;
      }
      x = s.sample();
      value = Rat(0);
      for (std::size_t j = 0; j < n; ++j) {
        if (objective[j] != 0) value += Rat(objective[j]) * x[j];
      }
      if (best && value.ceil() >= *best) {
        pruned = true;
        break;
      }
      if (!options.separator) break;
      std::vector<Cut> fresh = options.separator(x);
      if (fresh.empty()) break;
      for (auto& c : fresh) {
        if (c.coeffs.size() != n) throw DimensionError("separator cut size");
        cuts.push_back(std::move(c));
      }
    }
    if (pruned) continue;

    std::optional<std::size_t> frac;
    for (std::size_t j = 0; j < n; ++j) {
      if (!x[j].is_integer()) {
        frac = j;
        break;
      }
    }
    if (!frac) {
      result.status = IlpStatus::kOptimal;
      result.solution.clear();
      for (const auto& v : x) result.solution.push_back(v.num());
      best = value.num();
      if (!options.objective) break;
      continue;
    }

    const std::size_t j = *frac;
    Node up{s, node.cuts_applied};
    unit[j] = 1;
    up.simplex.add_inequality(unit, BigInt(-x[j].ceil()));
    unit[j] = -1;
    s.add_inequality(unit, x[j].floor());
    unit[j] = 0;
    if (!up.simplex.empty()) stack.push_back(std::move(up));
    if (!s.empty()) stack.push_back(std::move(node));
  }
  result.cuts = cuts.size();
  return result;
}

}  // namespace instakernel
