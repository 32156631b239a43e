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

// instakernel: reduce-vector | compress | verify | generate.
// Exit codes: 0 ok, 1 input error, 2 budget exceeded, 3 verification failure.

#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "instakernel/pipeline.hpp"

namespace ik = instakernel;
using ik::io::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerify = 3;

bool g_human = false;

void emit(const Json& doc) {
  if (!g_human) {
    std::cout << ik::io::dump(doc);
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
  }
}

ik::IntVector parse_csv(const std::string& text) {
  ik::IntVector out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(ik::parse_bigint(item));
  if (out.empty()) throw ik::InputError("--w: empty vector");
  return out;
}

// Uniform-ish value with `bits` random bits, top bit set.
ik::BigInt random_big(std::mt19937_64& rng, unsigned bits) {
  ik::BigInt v = 0;
  for (unsigned done = 0; done < bits; done += 32) v = (v << 32) + static_cast<unsigned long>(rng() >> 32);
  v >>= (bits + 31) / 32 * 32 - bits;
  mpz_setbit(v.get_mpz_t(), bits - 1);
  return v;
}

ik::BigInt random_small(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

ik::io::Instance generate(const std::string& kind, std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw ik::InputError("generate: --n must be positive");
  if (kind == "knapsack" || kind == "uks") {
    const bool huge = kind == "knapsack";
    ik::IntVector w, p;
    ik::BigInt sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      w.push_back(huge ? random_big(rng, 70) : random_small(rng, 1, 12));
      p.push_back(huge ? random_big(rng, 68) : random_small(rng, 0, 15));
      sum += w.back();
    }
    ik::BigInt cap = huge ? ik::BigInt(sum / 2) : random_small(rng, 0, 50);
    ik::BigInt target = huge ? ik::BigInt(p[0] + p[n - 1]) : random_small(rng, 0, 40);
    if (huge) return ik::KnapsackInstance{w, p, cap, target};
    return ik::UnboundedKnapsackInstance{w, p, cap, target};
  }
  if (kind == "subsetsum") {
    ik::SubsetSumInstance s;
    s.target = 0;
    for (std::size_t i = 0; i < n; ++i) {
      s.values.push_back(random_big(rng, 66));
      if (rng() & 1U) s.target += s.values.back();
    }
    return s;
  }
  if (kind == "mdks") {
    ik::MdKnapsackInstance k;
    k.weights = ik::IntMatrix(2, n);
    ik::BigInt s0 = 0, s1 = 0;
    for (std::size_t j = 0; j < n; ++j) {
      k.weights(0, j) = random_big(rng, 65);
      k.weights(1, j) = random_big(rng, 64);
      k.profits.push_back(random_big(rng, 66));
      s0 += k.weights(0, j);
      s1 += k.weights(1, j);
    }
    k.capacities = {s0 / 2, s1 / 2};
    k.target = k.profits[0];
    return k;
  }
  if (kind == "ilp") {
    ik::io::IlpFile f;
    f.ilp.a = ik::IntMatrix(2, n);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < n; ++j) f.ilp.a(i, j) = random_small(rng, -2, 2);
      f.ilp.b.push_back(random_small(rng, -6, 6));
    }
    return f;
  }
  if (kind == "loadbalance") {
    ik::io::LoadBalanceFile f;
    const std::size_t d = std::min<std::size_t>(n, 3);
    long p = 0;
    for (std::size_t j = 0; j < d; ++j) {
      p += random_small(rng, 1, 2).get_si();
      f.instance.p.push_back(p);
      f.instance.n.push_back(random_small(rng, 0, 8));
    }
    f.instance.m = random_small(rng, 1, 4);
    f.instance.l = random_small(rng, 0, 4);
    f.instance.u = f.instance.l + random_small(rng, 0, 6);
    return f;
  }
  if (kind == "vector") {
    ik::io::VectorFile v;
    for (std::size_t j = 0; j < n; ++j) {
      ik::BigInt x = random_big(rng, 80);
      v.w.push_back(rng() & 1U ? x : ik::BigInt(-x));
    }
    return v;
  }
  throw ik::InputError("generate: unsupported kind '" + kind + "'");
}

void write_or_print(const std::string& path, const Json& doc) {
  if (path.empty()) {
    std::cout << ik::io::dump(doc);
  } else {
    ik::io::write_atomic(path, ik::io::dump(doc));
  }
}

int cmd_reduce_vector(const std::string& in, const std::string& csv,
                      const std::string& delta_text, bool verify) {
  ik::IntVector w;
  ik::BigInt delta = ik::parse_bigint(delta_text);
  if (!in.empty()) {
    auto inst = ik::io::instance_from_json(ik::io::read_json(in));
    const auto* v = std::get_if<ik::io::VectorFile>(&inst);
    if (!v) throw ik::InputError("reduce-vector: expected a vector file");
    w = v->w;
    delta = v->delta;
  } else if (!csv.empty()) {
    w = parse_csv(csv);
  } else {
    throw ik::InputError("reduce-vector: give --in or --w");
  }
  if (delta < 1) throw ik::InputError("reduce-vector: --delta must be >= 1");
  const ik::ReducedVector r = ik::reduce_vector(w, delta);
  Json out{{"original", ik::io::to_json(r.original)},
           {"reduced", ik::io::to_json(r.reduced)},
           {"delta", ik::io::to_json(r.radius)},
           {"l1", ik::io::to_json(r.l1_norm)},
           {"l1_bound", ik::io::to_json(r.l1_bound)},
           {"minimal", r.minimal},
           {"nodes", r.nodes},
           {"cuts", r.cuts},
           {"self_checked", r.verified},
           {"verification", "Skipped"}};
  int code = kExitOk;
  if (verify) {
    try {
      const auto witness = ik::find_inequivalence_witness(w, r.reduced, delta);
      out["verification"] = witness ? "Failed" : "Verified";
      if (witness) {
        out["counterexample"] = ik::io::to_json(*witness);
        code = kExitVerify;
      }
    } catch (const ik::BudgetExceeded& e) {
      out["message"] = e.what();
    }
  }
  emit(out);
  return code;
}

int cmd_compress(const std::string& in, const std::string& mode_text, bool verify,
                 const std::string& out_path, std::string pre_path) {
  ik::CompressMode mode;
  if (mode_text == "static") {
    mode = ik::CompressMode::kStatic;
  } else if (mode_text == "kernel") {
    mode = ik::CompressMode::kKernel;
  } else {
    throw ik::InputError("--mode must be static or kernel");
  }
  const auto inst = ik::io::instance_from_json(ik::io::read_json(in));
  ik::CompressResult r;
  try {
    r = ik::compress(inst, mode, verify);
  } catch (const ik::BudgetExceeded& e) {
    ik::Report rep;
    rep.kind = ik::io::kind_of(inst);
    rep.mode = mode_text;
    rep.verdict = "BudgetExceeded";
    rep.message = e.what();
    emit(rep.to_json());
    return kExitBudget;
  }
  const Json reduced = ik::io::instance_to_json(r.reduced);
  Json report = r.report.to_json();
  if (out_path.empty()) {
    Json all{{"report", report}, {"reduced", reduced}};
    if (r.pre) all["pre"] = ik::io::pre_to_json(*r.pre);
    if (g_human) {
      emit(report);
      std::cout << "reduced: " << reduced.dump() << "\n";
      if (r.pre) std::cout << "pre: " << all["pre"].dump() << "\n";
    } else {
      std::cout << ik::io::dump(all);
    }
  } else {
    ik::io::write_atomic(out_path, ik::io::dump(reduced));
    report["reduced_file"] = out_path;
    if (r.pre) {
      if (pre_path.empty()) pre_path = out_path + ".pre.json";
      ik::io::write_atomic(pre_path, ik::io::dump(ik::io::pre_to_json(*r.pre)));
      report["pre_file"] = pre_path;
    }
    emit(report);
  }
  return r.report.verification == "Failed" ? kExitVerify : kExitOk;
}

int cmd_verify(const std::string& original, const std::string& reduced,
               const std::string& pre_path) {
  const auto a = ik::io::instance_from_json(ik::io::read_json(original));
  const auto b = ik::io::instance_from_json(ik::io::read_json(reduced));
  std::optional<ik::io::PreFile> pre;
  if (!pre_path.empty()) pre = ik::io::pre_from_json(ik::io::read_json(pre_path));
  const ik::VerifyResult v = ik::verify_reduction(a, b, pre);
  emit(Json{{"kind", ik::io::kind_of(a)}, {"verification", v.status}, {"message", v.message}});
  if (v.status == "Failed") return kExitVerify;
  if (v.status == "Skipped") return kExitBudget;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivalent instances and kernels for integer programs"};
  app.require_subcommand(1);

  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  bool json_flag = false;
  app.add_option("--budget", budget, "Enumeration budget (overrides INSTAKERNEL_BUDGET)");
  app.add_option("--seed", seed, "Seed for generate");
  app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_flag("--human", g_human, "Plain key: value output");

  std::string in, csv, delta = "1", mode = "static", out, pre, original, reduced, kind = "knapsack";
  bool verify = false;
  std::size_t n = 3;

  auto* rv = app.add_subcommand("reduce-vector", "Small equivalent vector");
  rv->add_option("--in", in, "Vector instance file");
  rv->add_option("--w", csv, "Comma-separated integers");
  rv->add_option("--delta", delta, "Radius of the box");
  rv->add_flag("--verify", verify, "Check equivalence exhaustively");

  auto* cp = app.add_subcommand("compress", "Reduce an instance file");
  cp->add_option("--in", in, "Instance file")->required();
  cp->add_option("--mode", mode, "static or kernel");
  cp->add_flag("--verify", verify, "Run the matching oracle");
  cp->add_option("--out", out, "Reduced instance file");
  cp->add_option("--pre", pre, "Pre-solution file (default <out>.pre.json)");

  auto* vf = app.add_subcommand("verify", "Check a reduced instance against its original");
  vf->add_option("--original", original, "Original instance file")->required();
  vf->add_option("--reduced", reduced, "Reduced instance file")->required();
  vf->add_option("--pre", pre, "Pre-solution file");

  auto* gen = app.add_subcommand("generate", "Random instance file");
  gen->add_option("--kind", kind, "knapsack|subsetsum|uks|mdks|ilp|loadbalance|vector");
  gen->add_option("--n", n, "Items, variables or job types");
  gen->add_option("--out", out, "Output file (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  if (json_flag) g_human = false;

  try {
    if (budget > 0) {
      ik::Budget b = ik::Budget::defaults();
      b.enumeration = budget;
      ik::Budget::set_process_default(b);
    }
    if (*rv) return cmd_reduce_vector(in, csv, delta, verify);
    if (*cp) return cmd_compress(in, mode, verify, out, pre);
    if (*vf) return cmd_verify(original, reduced, pre);
    if (*gen) {
      std::mt19937_64 rng(seed);
      write_or_print(out, ik::io::instance_to_json(generate(kind, n, rng)));
      return kExitOk;
    }
  } catch (const ik::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ik::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ik::InternalInconsistency& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
