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

#include "instakernel/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace instakernel::io {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Json& field(const Json& obj, const std::string& key) {
  if (!obj.is_object()) throw InputError("expected an object holding '" + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError("missing field '" + key + "'");
  return *it;
}

std::size_t count_from_json(const Json& j, const std::string& what) {
  const BigInt v = bigint_from_json(j, what);
  if (v < 0 || !v.fits_ulong_p()) throw InputError(what + ": not a valid count");
  return v.get_ui();
}

IntMatrix matrix_from_json(const Json& j, const std::string& what,
                           std::optional<std::size_t> cols = std::nullopt) {
  if (!j.is_array()) throw InputError(what + ": expected an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r, what));
  std::size_t width = cols ? *cols : (rows.empty() ? 0 : rows[0].size());
  for (const auto& r : rows) {
    if (r.size() != width) throw DimensionError(what + ": ragged rows");
  }
  return IntMatrix::from_rows(rows, width);
}

std::vector<IntMatrix> matrices_from_json(const Json& j, const std::string& what,
                                          std::size_t cols) {
  if (!j.is_array()) throw InputError(what + ": expected an array of matrices");
  std::vector<IntMatrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m, what, cols));
  return out;
}

std::vector<IntVector> vectors_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array of vectors");
  std::vector<IntVector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v, what));
  return out;
}

Json matrices_to_json(const std::vector<IntMatrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

Json vectors_to_json(const std::vector<IntVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

std::optional<BigInt> optional_scope(const Json& p) {
  if (!p.contains("scope_u")) return std::nullopt;
  return bigint_from_json(p["scope_u"], "scope_u");
}

Json envelope(const std::string& kind, Json payload) {
  return Json{{"kind", kind}, {"version", kFormatVersion}, {"payload", std::move(payload)}};
}

const Json& open_envelope(const Json& doc, std::string& kind) {
  if (!doc.is_object()) throw InputError("instance file: top level must be an object");
  const Json& k = field(doc, "kind");
  if (!k.is_string()) throw InputError("instance file: kind must be a string");
  kind = k.get<std::string>();
  const Json& v = field(doc, "version");
  if (!v.is_number_integer() || v.get<int>() != kFormatVersion) {
    throw InputError("instance file: unsupported version");
  }
  const Json& p = field(doc, "payload");
  if (!p.is_object()) throw InputError("instance file: payload must be an object");
  return p;
}

Json groups_to_json(const std::vector<MachineGroup>& groups) {
  Json out = Json::array();
  for (const auto& g : groups) {
    out.push_back(Json{{"count", to_json(g.count)}, {"jobs", to_json(g.jobs)}});
  }
  return out;
}

std::vector<MachineGroup> groups_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("groups: expected an array");
  std::vector<MachineGroup> out;
  for (const auto& g : j) {
    out.push_back({bigint_from_json(field(g, "count"), "count"),
                   vector_from_json(field(g, "jobs"), "jobs")});
  }
  return out;
}

}  // namespace

Json to_json(const BigInt& v) { return v.get_str(); }

Json to_json(std::span<const BigInt> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

BigInt bigint_from_json(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + ": integers must be decimal strings");
  try {
    return parse_bigint(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(what + ": " + e.what());
  }
}

IntVector vector_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array");
  IntVector out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(bigint_from_json(x, what));
  return out;
}

std::string kind_of(const Instance& inst) {
  return std::visit(Overloaded{
                        [](const IlpFile&) { return "ilp"; },
                        [](const TwoStageFile&) { return "two_stage"; },
                        [](const NFoldFile&) { return "nfold"; },
                        [](const KnapsackInstance&) { return "knapsack"; },
                        [](const SubsetSumInstance&) { return "subsetsum"; },
                        [](const UnboundedKnapsackInstance&) { return "uks"; },
                        [](const MdKnapsackInstance&) { return "mdks"; },
                        [](const LoadBalanceFile&) { return "loadbalance"; },
                        [](const VectorFile&) { return "vector"; },
                    },
                    inst);
}

Json instance_to_json(const Instance& inst) {
  Json p = std::visit(
      Overloaded{
          [](const IlpFile& f) {
            Json o{{"a", to_json(f.ilp.a)}, {"b", to_json(f.ilp.b)},
                   {"cols", std::to_string(f.ilp.cols())}};
            if (!f.ilp.lower.empty()) o["lower"] = to_json(f.ilp.lower);
            if (f.ilp.upper) o["upper"] = to_json(*f.ilp.upper);
            if (f.scope_u) o["scope_u"] = to_json(*f.scope_u);
            return o;
          },
          [](const TwoStageFile& f) {
            Json o{{"first_stage", std::to_string(f.ilp.first_stage)},
                   {"second_stage", std::to_string(f.ilp.second_stage)},
                   {"a", matrices_to_json(f.ilp.a)},
                   {"b", matrices_to_json(f.ilp.b)},
                   {"rhs", vectors_to_json(f.ilp.rhs)}};
            if (f.scope_u) o["scope_u"] = to_json(*f.scope_u);
            return o;
          },
          [](const NFoldFile& f) {
            Json o{{"block_width", std::to_string(f.ilp.block_width)},
                   {"a", matrices_to_json(f.ilp.a)},
                   {"b", matrices_to_json(f.ilp.b)},
                   {"linking_rhs", to_json(f.ilp.linking_rhs)},
                   {"rhs", vectors_to_json(f.ilp.rhs)}};
            if (f.scope_u) o["scope_u"] = to_json(*f.scope_u);
            return o;
          },
          [](const KnapsackInstance& k) {
            return Json{{"weights", to_json(k.weights)}, {"profits", to_json(k.profits)},
                        {"capacity", to_json(k.capacity)}, {"target", to_json(k.target)}};
          },
          [](const SubsetSumInstance& s) {
            return Json{{"values", to_json(s.values)}, {"target", to_json(s.target)}};
          },
          [](const UnboundedKnapsackInstance& k) {
            return Json{{"weights", to_json(k.weights)}, {"profits", to_json(k.profits)},
                        {"capacity", to_json(k.capacity)}, {"target", to_json(k.target)}};
          },
          [](const MdKnapsackInstance& k) {
            return Json{{"weights", to_json(k.weights)},
                        {"profits", to_json(k.profits)},
                        {"capacities", to_json(k.capacities)},
                        {"target", to_json(k.target)}};
          },
          [](const LoadBalanceFile& f) {
            const auto& i = f.instance;
            return Json{{"p", to_json(i.p)}, {"n", to_json(i.n)}, {"m", to_json(i.m)},
                        {"l", to_json(i.l)}, {"u", to_json(i.u)},
                        {"objective", objective_name(f.objective)}};
          },
          [](const VectorFile& v) {
            return Json{{"w", to_json(v.w)}, {"delta", to_json(v.delta)}};
          },
      },
      inst);
  return envelope(kind_of(inst), std::move(p));
}

Instance instance_from_json(const Json& doc) {
  std::string kind;
  const Json& p = open_envelope(doc, kind);
  if (kind == "ilp") {
    IlpFile f;
    f.ilp.b = vector_from_json(field(p, "b"), "b");
    std::optional<std::size_t> cols;
    if (p.contains("cols")) cols = count_from_json(p["cols"], "cols");
    f.ilp.a = matrix_from_json(field(p, "a"), "a", cols);
    if (p.contains("lower")) f.ilp.lower = vector_from_json(p["lower"], "lower");
    if (p.contains("upper")) f.ilp.upper = vector_from_json(p["upper"], "upper");
    f.scope_u = optional_scope(p);
    f.ilp.validate();
    return f;
  }
  if (kind == "two_stage") {
    TwoStageFile f;
    f.ilp.first_stage = count_from_json(field(p, "first_stage"), "first_stage");
    f.ilp.second_stage = count_from_json(field(p, "second_stage"), "second_stage");
    f.ilp.a = matrices_from_json(field(p, "a"), "a", f.ilp.first_stage);
    f.ilp.b = matrices_from_json(field(p, "b"), "b", f.ilp.second_stage);
    f.ilp.rhs = vectors_from_json(field(p, "rhs"), "rhs");
    f.scope_u = optional_scope(p);
    f.ilp.validate();
    return f;
  }
  if (kind == "nfold") {
    NFoldFile f;
    f.ilp.block_width = count_from_json(field(p, "block_width"), "block_width");
    f.ilp.a = matrices_from_json(field(p, "a"), "a", f.ilp.block_width);
    f.ilp.b = matrices_from_json(field(p, "b"), "b", f.ilp.block_width);
    f.ilp.linking_rhs = vector_from_json(field(p, "linking_rhs"), "linking_rhs");
    f.ilp.rhs = vectors_from_json(field(p, "rhs"), "rhs");
    f.scope_u = optional_scope(p);
    f.ilp.validate();
    return f;
  }
  if (kind == "knapsack" || kind == "uks") {
    IntVector w = vector_from_json(field(p, "weights"), "weights");
    IntVector pr = vector_from_json(field(p, "profits"), "profits");
    BigInt c = bigint_from_json(field(p, "capacity"), "capacity");
    BigInt t = bigint_from_json(field(p, "target"), "target");
    if (kind == "knapsack") {
      KnapsackInstance k{std::move(w), std::move(pr), std::move(c), std::move(t)};
      k.validate();
      return k;
    }
    UnboundedKnapsackInstance k{std::move(w), std::move(pr), std::move(c), std::move(t)};
    k.validate();
    return k;
  }
  if (kind == "subsetsum") {
    SubsetSumInstance s{vector_from_json(field(p, "values"), "values"),
                        bigint_from_json(field(p, "target"), "target")};
    s.validate();
    return s;
  }
  if (kind == "mdks") {
    MdKnapsackInstance k;
    k.profits = vector_from_json(field(p, "profits"), "profits");
    k.weights = matrix_from_json(field(p, "weights"), "weights", k.profits.size());
    k.capacities = vector_from_json(field(p, "capacities"), "capacities");
    k.target = bigint_from_json(field(p, "target"), "target");
    k.validate();
    return k;
  }
  if (kind == "loadbalance") {
    LoadBalanceFile f;
    f.instance = {vector_from_json(field(p, "p"), "p"), vector_from_json(field(p, "n"), "n"),
                  bigint_from_json(field(p, "m"), "m"), bigint_from_json(field(p, "l"), "l"),
                  bigint_from_json(field(p, "u"), "u")};
    if (p.contains("objective")) {
      if (!p["objective"].is_string()) throw InputError("objective must be a string");
      f.objective = parse_objective(p["objective"].get<std::string>());
    }
    f.instance.validate();
    return f;
  }
  if (kind == "vector") {
    VectorFile v{vector_from_json(field(p, "w"), "w"), BigInt(1)};
    if (p.contains("delta")) v.delta = bigint_from_json(p["delta"], "delta");
    if (v.delta < 1) throw InputError("vector: delta must be >= 1");
    return v;
  }
  throw InputError("unknown instance kind '" + kind + "'");
}

Json pre_to_json(const PreFile& pre) {
  Json p = std::visit(
      Overloaded{
          [](const KernelPre& k) {
            return Json{{"for", "ilp"}, {"fixed", to_json(k.fixed)},
                        {"proximity", to_json(k.proximity)}};
          },
          [](const UksPre& u) {
            Json copies = Json::array();
            for (const auto& [item, j] : u.copies) {
              copies.push_back(Json::array({std::to_string(item), std::to_string(j)}));
            }
            return Json{{"for", "uks"}, {"items", std::to_string(u.items)}, {"copies", copies}};
          },
          [](const LoadBalancePre& l) {
            return Json{{"for", "loadbalance"},
                        {"objective", objective_name(l.objective)},
                        {"per_machine", to_json(l.pre.per_machine)},
                        {"groups", groups_to_json(l.pre.groups)}};
          },
      },
      pre);
  return envelope("presolution", std::move(p));
}

PreFile pre_from_json(const Json& doc) {
  std::string kind;
  const Json& p = open_envelope(doc, kind);
  if (kind != "presolution") throw InputError("expected a presolution file, got '" + kind + "'");
  const Json& f = field(p, "for");
  const std::string target = f.is_string() ? f.get<std::string>() : "";
  if (target == "ilp") {
    return KernelPre{vector_from_json(field(p, "fixed"), "fixed"),
                     bigint_from_json(field(p, "proximity"), "proximity")};
  }
  if (target == "uks") {
    UksPre u;
    u.items = count_from_json(field(p, "items"), "items");
    const Json& copies = field(p, "copies");
    if (!copies.is_array()) throw InputError("copies: expected an array");
    for (const auto& c : copies) {
      if (!c.is_array() || c.size() != 2) throw InputError("copies: expected pairs");
      const std::size_t item = count_from_json(c[0], "copies");
      if (item >= u.items) throw InputError("copies: item index out of range");
      u.copies.emplace_back(item, static_cast<unsigned>(count_from_json(c[1], "copies")));
    }
    return u;
  }
  if (target == "loadbalance") {
    LoadBalancePre l;
    if (!field(p, "objective").is_string()) throw InputError("objective must be a string");
    l.objective = parse_objective(p["objective"].get<std::string>());
    l.pre.per_machine = vector_from_json(field(p, "per_machine"), "per_machine");
    l.pre.groups = groups_from_json(field(p, "groups"));
    return l;
  }
  throw InputError("presolution: unknown target kind");
}

Json schedule_to_json(const Schedule& s) {
  return envelope("schedule", Json{{"groups", groups_to_json(s)}});
}

Schedule schedule_from_json(const Json& doc) {
  std::string kind;
  const Json& p = open_envelope(doc, kind);
  if (kind != "schedule") throw InputError("expected a schedule file");
  return groups_from_json(field(p, "groups"));
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path.string() + "': " + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + tmp.string() + "'");
    out << text;
    out.flush();
    if (!out) throw InputError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InputError("cannot rename into '" + path.string() + "': " + ec.message());
  }
}

}  // namespace instakernel::io
