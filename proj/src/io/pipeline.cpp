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

#include "instakernel/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <sstream>

namespace instakernel {
namespace {

using io::Instance;

std::string show(std::span<const BigInt> v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i].get_str();
  out << ")";
  return out.str();
}

std::string show_mask(std::uint32_t mask, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += ((mask >> i) & 1U) ? '1' : '0';
  return s;
}

VerifyResult verified() { return {"Verified", ""}; }
VerifyResult failed(std::string why) { return {"Failed", std::move(why)}; }

template <typename T>
VerifyResult compare_sets(const std::vector<T>& a, const std::vector<T>& b,
                          const std::function<std::string(const T&)>& fmt) {
  if (a == b) return verified();
  std::vector<T> only_a, only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  if (!only_a.empty()) return failed("solution " + fmt(only_a.front()) + " of the original is lost");
  return failed("solution " + fmt(only_b.front()) + " appears only in the reduced instance");
}

VerifyResult compare_ilps(FeasIlp a, FeasIlp b, const std::optional<BigInt>& scope) {
  std::optional<IntVector> box = a.upper;
  if (!box) {
    if (!scope) return {"Skipped", "no finite box to enumerate"};
    box = IntVector(a.cols(), *scope);
  }
  if (!a.upper) a.upper = box;
  if (!b.upper) b.upper = box;
  if (b.lower.empty()) b.lower = a.lower;
  if (a.cols() != b.cols()) return failed("column counts differ");
  const auto fmt = std::function<std::string(const IntVector&)>(
      [](const IntVector& v) { return show(v); });
  return compare_sets(enumerate_feasible(a), enumerate_feasible(b), fmt);
}

VerifyResult verify_kernel(const FeasIlp& original, const FeasIlp& residual,
                           const io::KernelPre& pre) {
  if (pre.fixed.size() != original.cols() || residual.cols() != original.cols()) {
    return failed("pre-solution and instance sizes differ");
  }
  const std::vector<IntVector> witnesses = enumerate_feasible(residual);
  for (const auto& x : witnesses) {
    IntVector full(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) full[j] = x[j] + pre.fixed[j];
    if (!original.satisfied_by(full)) {
      return failed("residual witness " + show(x) + " does not extend to a solution");
    }
  }
  if (!witnesses.empty()) return verified();
  IlpResult r = solve_ilp(original, IntVector(original.cols(), u_bound(original)));
  if (r.status == IlpStatus::kOptimal) {
    return failed("original has solution " + show(r.solution) + " but the residual is empty");
  }
  return verified();
}

VerifyResult verify_uks(const UnboundedKnapsackInstance& original,
                        const KnapsackInstance& reduced, const io::UksPre& pre) {
  const UksExpansion e = uks_to_knapsack(original);
  if (pre.items != original.weights.size() || pre.copies != e.copies ||
      reduced.weights.size() != e.copies.size()) {
    return failed("copy layout does not match the binary expansion");
  }
  const BigInt best = dp_uks_oracle(original);
  const KnapsackDp expanded = dp_knapsack_oracle(e.knapsack);
  if (expanded.max_profit != best) {
    return failed("expansion optimum " + expanded.max_profit.get_str() +
                  " differs from unbounded optimum " + best.get_str());
  }
  const bool want = best >= original.target;
  const bool got = dp_knapsack_oracle(reduced).feasible_for_target;
  if (want != got) {
    return failed(std::string("original is ") + (want ? "feasible" : "infeasible") +
                  " but the reduced knapsack is not");
  }
  if (e.copies.size() <= 20 &&
      feasible_subsets(e.knapsack) != feasible_subsets(reduced)) {
    return failed("0-1 selection sets of expansion and reduction differ");
  }
  return verified();
}

VerifyResult verify_loadbalance(const io::LoadBalanceFile& original,
                                const io::LoadBalanceFile& reduced,
                                const io::LoadBalancePre& pre) {
  EquivBundle bundle;
  bundle.objective = pre.objective;
  bundle.original = normalize(original.instance, pre.objective);
  bundle.residual = reduced.instance;
  bundle.pre = pre.pre;
  if (bundle.pre.per_machine.size() != bundle.original.d()) {
    return failed("pre-solution has the wrong number of job types");
  }
  const auto want = brute_force_loadbalance(bundle.original);
  const auto got = brute_force_loadbalance(bundle.residual);
  if (want.has_value() != got.has_value()) {
    return failed(std::string("original is ") + (want ? "feasible" : "infeasible") +
                  " but the residual is " + (got ? "feasible" : "infeasible"));
  }
  if (got) {
    try {
      reconstruct_schedule(bundle, *got);
    } catch (const InputError& e) {
      return failed(std::string("reconstruction: ") + e.what());
    }
  }
  return verified();
}

std::size_t two_stage_bits(const TwoStageIlp& t) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < t.blocks(); ++i) {
    s += bit_size(t.a[i]) + bit_size(t.b[i]) + bit_size(t.rhs[i]);
  }
  return s;
}

std::size_t nfold_bits(const NFoldIlp& t) {
  std::size_t s = bit_size(t.linking_rhs);
  for (std::size_t i = 0; i < t.blocks(); ++i) {
    s += bit_size(t.a[i]) + bit_size(t.b[i]) + bit_size(t.rhs[i]);
  }
  return s;
}

// Kernel result as files; an infeasible verdict gets the system 0 = 1.
void kernel_files(const FeasIlp& ilp, CompressResult& out) {
  ProximityKernel k = kernelize_feasibility(ilp);
  out.report.original_bits = k.bits.before;
  if (k.verdict == KernelVerdict::kInfeasible) {
    FeasIlp none;
    none.a = IntMatrix(1, ilp.cols());
    none.b = {BigInt(1)};
    none.upper = IntVector(ilp.cols(), BigInt(0));
    out.reduced = io::IlpFile{none, std::nullopt};
    out.pre = io::KernelPre{IntVector(ilp.cols(), BigInt(0)), k.proximity};
    out.report.verdict = "Infeasible";
    out.report.message = k.explanation;
    out.report.reduced_bits = ilp_bit_size(none);
    out.report.theoretical_bound_bits = bit_size(ilp.a) + ilp.rows() * bit_size(BigInt(
        BigInt(static_cast<unsigned long>(ilp.cols())) * ilp.a.max_abs() * k.proximity)) +
        ilp.cols() * bit_size(BigInt(2 * k.proximity));
    return;
  }
  out.reduced = io::IlpFile{k.residual, std::nullopt};
  out.pre = io::KernelPre{k.fixed, k.proximity};
  out.report.reduced_bits = k.bits.after;
  out.report.theoretical_bound_bits = k.bits.bound;
}

FeasIlp ilp_of(const Instance& inst) {
  if (const auto* f = std::get_if<io::IlpFile>(&inst)) return f->ilp;
  throw InputError("expected an ilp instance");
}

template <typename T>
const T& as(const Instance& inst) {
  if (const auto* v = std::get_if<T>(&inst)) return *v;
  throw InputError("reduced instance has kind '" + io::kind_of(inst) + "'");
}

template <typename T>
const T& pre_as(const std::optional<io::PreFile>& pre) {
  if (pre) {
    if (const auto* v = std::get_if<T>(&*pre)) return *v;
  }
  throw InputError("a matching pre-solution file is required");
}

VerifyResult verify_dispatch(const Instance& original, const Instance& reduced,
                             const std::optional<io::PreFile>& pre) {
  if (io::instance_to_json(original) == io::instance_to_json(reduced) && !pre) {
    return verified();
  }
  const auto mask_fmt = [](std::size_t n) {
    return std::function<std::string(const std::uint32_t&)>(
        [n](const std::uint32_t& m) { return show_mask(m, n); });
  };
  if (const auto* f = std::get_if<io::IlpFile>(&original)) {
    const FeasIlp red = ilp_of(reduced);
    if (pre) return verify_kernel(f->ilp, red, pre_as<io::KernelPre>(pre));
    return compare_ilps(f->ilp, red, as<io::IlpFile>(reduced).scope_u);
  }
  if (const auto* f = std::get_if<io::TwoStageFile>(&original)) {
    if (pre) return verify_kernel(f->ilp.assemble(), ilp_of(reduced), pre_as<io::KernelPre>(pre));
    const auto& r = as<io::TwoStageFile>(reduced);
    return compare_ilps(f->ilp.assemble(), r.ilp.assemble(), r.scope_u);
  }
  if (const auto* f = std::get_if<io::NFoldFile>(&original)) {
    if (pre) return verify_kernel(f->ilp.assemble(), ilp_of(reduced), pre_as<io::KernelPre>(pre));
    const auto& r = as<io::NFoldFile>(reduced);
    return compare_ilps(f->ilp.assemble(), r.ilp.assemble(), r.scope_u);
  }
  if (const auto* k = std::get_if<KnapsackInstance>(&original)) {
    const auto& r = as<KnapsackInstance>(reduced);
    if (r.weights.size() != k->weights.size()) return failed("item counts differ");
    return compare_sets(feasible_subsets(*k), feasible_subsets(r), mask_fmt(k->weights.size()));
  }
  if (const auto* s = std::get_if<SubsetSumInstance>(&original)) {
    const auto& r = as<SubsetSumInstance>(reduced);
    if (r.values.size() != s->values.size()) return failed("item counts differ");
    return compare_sets(feasible_subsets(*s), feasible_subsets(r), mask_fmt(s->values.size()));
  }
  if (const auto* k = std::get_if<MdKnapsackInstance>(&original)) {
    const auto& r = as<MdKnapsackInstance>(reduced);
    if (r.profits.size() != k->profits.size()) return failed("item counts differ");
    return compare_sets(feasible_subsets(*k), feasible_subsets(r), mask_fmt(k->profits.size()));
  }
  if (const auto* u = std::get_if<UnboundedKnapsackInstance>(&original)) {
    return verify_uks(*u, as<KnapsackInstance>(reduced), pre_as<io::UksPre>(pre));
  }
  if (const auto* l = std::get_if<io::LoadBalanceFile>(&original)) {
    return verify_loadbalance(*l, as<io::LoadBalanceFile>(reduced),
                              pre_as<io::LoadBalancePre>(pre));
  }
  if (const auto* v = std::get_if<io::VectorFile>(&original)) {
    const auto& r = as<io::VectorFile>(reduced);
    if (r.w.size() != v->w.size()) return failed("dimensions differ");
    if (auto z = find_inequivalence_witness(v->w, r.w, v->delta)) {
      return failed("difference " + show(*z) + " is ordered differently");
    }
    return verified();
  }
  throw InputError("verification is not available for this kind");
}

}  // namespace

io::Json Report::to_json() const {
  return io::Json{{"kind", kind},
                  {"mode", mode},
                  {"original_bits", original_bits},
                  {"reduced_bits", reduced_bits},
                  {"theoretical_bound_bits", theoretical_bound_bits},
                  {"elapsed_ms", elapsed_ms},
                  {"verdict", verdict},
                  {"verification", verification},
                  {"message", message}};
}

VerifyResult verify_reduction(const Instance& original, const Instance& reduced,
                              const std::optional<io::PreFile>& pre) {
  try {
    return verify_dispatch(original, reduced, pre);
  } catch (const BudgetExceeded& e) {
    return {"Skipped", e.what()};
  }
}

CompressResult compress(const Instance& inst, CompressMode mode, bool verify) {
  const auto start = std::chrono::steady_clock::now();
  CompressResult out;
  out.report.kind = io::kind_of(inst);
  out.report.mode = mode == CompressMode::kStatic ? "static" : "kernel";
  const bool kernel = mode == CompressMode::kKernel;

  if (const auto* f = std::get_if<io::IlpFile>(&inst)) {
    if (kernel) {
      kernel_files(f->ilp, out);
    } else {
      StaticEquivIlp r = static_equiv_ilp(f->ilp, f->scope_u);
      out.reduced = io::IlpFile{r.reduced, r.u_used};
      out.report.original_bits = r.bits.before;
      out.report.reduced_bits = r.bits.after;
      out.report.theoretical_bound_bits = r.bits.bound;
    }
  } else if (const auto* f = std::get_if<io::TwoStageFile>(&inst)) {
    if (kernel) {
      kernel_files(f->ilp.assemble(), out);
    } else {
      const BigInt u = f->scope_u ? *f->scope_u : u_bound(f->ilp.assemble());
      TwoStageEquiv r = equiv_two_stage(f->ilp, u);
      out.reduced = io::TwoStageFile{r.reduced, u};
      out.report.original_bits = two_stage_bits(f->ilp);
      out.report.reduced_bits = two_stage_bits(r.reduced);
      for (const auto& b : r.blocks) out.report.theoretical_bound_bits += b.bits.bound;
    }
  } else if (const auto* f = std::get_if<io::NFoldFile>(&inst)) {
    if (kernel) {
      kernel_files(f->ilp.assemble(), out);
    } else {
      const BigInt u = f->scope_u ? *f->scope_u : u_bound(f->ilp.assemble());
      NFoldEquiv r = equiv_nfold(f->ilp, u);
      out.reduced = io::NFoldFile{r.reduced, u};
      out.report.original_bits = nfold_bits(f->ilp);
      out.report.reduced_bits = nfold_bits(r.reduced);
      out.report.theoretical_bound_bits = r.linking.bits.bound;
      for (const auto& b : r.blocks) out.report.theoretical_bound_bits += b.bits.bound;
    }
  } else if (const auto* k = std::get_if<KnapsackInstance>(&inst)) {
    KnapsackReduction r = static_equiv_knapsack(*k);
    out.reduced = r.reduced;
    out.report.original_bits = r.bits.before;
    out.report.reduced_bits = r.bits.after;
    out.report.theoretical_bound_bits = r.bits.bound;
  } else if (const auto* s = std::get_if<SubsetSumInstance>(&inst)) {
    SubsetSumReduction r = static_equiv_subsetsum(*s);
    out.reduced = r.reduced;
    out.report.original_bits = r.bits.before;
    out.report.reduced_bits = r.bits.after;
    out.report.theoretical_bound_bits = r.bits.bound;
  } else if (const auto* m = std::get_if<MdKnapsackInstance>(&inst)) {
    MdKnapsackReduction r = static_equiv_mdknapsack(*m);
    out.reduced = r.reduced;
    out.report.original_bits = r.bits.before;
    out.report.reduced_bits = r.bits.after;
    out.report.theoretical_bound_bits = r.bits.bound;
  } else if (const auto* u = std::get_if<UnboundedKnapsackInstance>(&inst)) {
    UksEquiv r = equiv_uks(*u);
    out.reduced = r.reduction.reduced;
    out.pre = io::UksPre{r.expansion.original_items, r.expansion.copies};
    out.report.original_bits = u->bit_size();
    out.report.reduced_bits = r.reduction.bits.after;
    out.report.theoretical_bound_bits = r.reduction.bits.bound;
  } else if (const auto* l = std::get_if<io::LoadBalanceFile>(&inst)) {
    EquivBundle b = equiv_loadbalancing(l->instance, l->objective);
    out.reduced = io::LoadBalanceFile{b.residual, Objective::kLoadBalancing};
    out.pre = io::LoadBalancePre{l->objective, b.pre};
    out.report.mode = "equivalent";
    out.report.original_bits = b.bits.before;
    out.report.reduced_bits = b.bits.after;
    out.report.theoretical_bound_bits = b.bits.bound;
    if (b.verdict == LbVerdict::kInfeasible) {
      out.report.verdict = "Infeasible";
      out.report.message = b.explanation;
    }
  } else if (const auto* v = std::get_if<io::VectorFile>(&inst)) {
    ReducedVector r = reduce_vector(v->w, v->delta);
    out.reduced = io::VectorFile{r.reduced, v->delta};
    out.report.original_bits = bit_size(v->w);
    out.report.reduced_bits = bit_size(r.reduced);
    out.report.theoretical_bound_bits = v->w.size() * bit_size(r.l1_bound);
  }

  if (verify) {
    const VerifyResult vr = verify_reduction(inst, out.reduced, out.pre);
    out.report.verification = vr.status;
    if (!vr.message.empty()) out.report.message = vr.message;
  }
  out.report.elapsed_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace instakernel
