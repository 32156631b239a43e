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

#include "instakernel/ilpreduce.hpp"

namespace instakernel {

BigInt u_bound(const FeasIlp& ilp) {
  const auto n = static_cast<unsigned long>(ilp.cols());
  const auto m = static_cast<unsigned long>(ilp.rows());
  return BigInt(n) * pow(BigInt(m) * ilp.a.max_abs(), 2 * m + 3) *
         (1 + max_abs(ilp.b));
}

std::size_t ilp_bit_size(const FeasIlp& ilp) {
  return bit_size(ilp.a) + bit_size(ilp.b);
}

std::size_t static_size_bound(std::size_t m, std::size_t n, const BigInt& u) {
  const std::size_t k = n + 1;
  const BigInt d = u < 1 ? BigInt(1) : u;
  return 4 * m * k * k * bit_length(BigInt(static_cast<unsigned long>(k)) * d);
}

StaticEquivIlp static_equiv_ilp(const FeasIlp& ilp, std::optional<BigInt> u,
                                const ReduceOptions& options) {
  ilp.validate();
  const std::size_t n = ilp.cols();
  const std::size_t m = ilp.rows();
  BigInt scope;
  if (u) {
    if (*u < 0) throw InputError("static_equiv_ilp: u must be >= 0");
    scope = *u;
  } else if (ilp.upper) {
    scope = max_abs(*ilp.upper);
    const BigInt lo = max_abs(ilp.lower_or_zero());
    if (lo > scope) scope = lo;
  } else {
    scope = u_bound(ilp);
  }
  const BigInt delta = scope < 1 ? BigInt(1) : scope;

  StaticEquivIlp out;
  out.original = ilp;
  out.u_used = scope;
  out.reduced = ilp;
  for (std::size_t i = 0; i < m; ++i) {
    IntVector w(ilp.a.row(i).begin(), ilp.a.row(i).end());
    w.push_back(ilp.b[i]);
    const ReducedVector r = reduce_vector(w, delta, options);
    for (std::size_t j = 0; j < n; ++j) out.reduced.a(i, j) = r.reduced[j];
    out.reduced.b[i] = r.reduced[n];
    out.all_rows_minimal = out.all_rows_minimal && r.minimal;
  }
  out.bits.before = ilp_bit_size(ilp);
  out.bits.after = ilp_bit_size(out.reduced);
  out.bits.bound = static_size_bound(m, n, delta);
  if (out.bits.after > out.bits.bound) {
    throw InternalInconsistency("static_equiv_ilp: reduced size above bound");
  }
  return out;
}

BigInt proximity_radius(std::size_t m_rows, const BigInt& delta) {
  const auto m = static_cast<unsigned long>(m_rows);
  return BigInt(m) * pow(2 * BigInt(m) * delta + 1, m);
}

ProximityKernel kernelize_feasibility(const FeasIlp& ilp) {
  ilp.validate();
  if (ilp.upper) throw InputError("kernelize_feasibility: upper bounds are not supported");
  for (const auto& l : ilp.lower) {
    if (l != 0) throw InputError("kernelize_feasibility: lower bounds must be 0");
  }
  const std::size_t n = ilp.cols();
  const std::size_t m = ilp.rows();
  ProximityKernel out;
  const LpResult lp = solve_vertex(StandardLp{ilp.a, ilp.b, std::nullopt, std::nullopt});
  const BigInt delta = ilp.a.max_abs();
  out.proximity = proximity_radius(m, delta);
  out.bits.before = ilp_bit_size(ilp);
  if (lp.status != LpStatus::kFeasible) {
    out.verdict = KernelVerdict::kInfeasible;
    out.explanation = "LP relaxation infeasible";
    return out;
  }
  out.verdict = KernelVerdict::kReduced;
  out.lp_vertex = lp.vertex;
  const BigInt& p = out.proximity;
  out.fixed.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const BigInt f = (lp.vertex.values[j] - Rat(p)).ceil();
    out.fixed[j] = f > 0 ? f : BigInt(0);
  }
  out.residual.a = ilp.a;
  out.residual.b = ilp.b;
  const IntVector packed = ilp.a.multiply(out.fixed);
  const BigInt rhs_cap = BigInt(static_cast<unsigned long>(n)) * delta * p;
  for (std::size_t i = 0; i < m; ++i) {
    out.residual.b[i] -= packed[i];
    if (abs(out.residual.b[i]) > rhs_cap) {
      throw InternalInconsistency("kernelize_feasibility: residual rhs above N*D*P");
    }
  }
  out.residual.lower.assign(n, BigInt(0));
  out.residual.upper = IntVector(n, 2 * p);
  out.bits.after = ilp_bit_size(out.residual) + bit_size(*out.residual.upper);
  out.bits.bound = bit_size(ilp.a) + m * bit_size(rhs_cap) + n * bit_size(BigInt(2 * p));
  return out;
}

void TwoStageIlp::validate() const {
  if (a.size() != b.size() || a.size() != rhs.size() || a.empty()) {
    throw DimensionError("two-stage: block lists differ in length or are empty");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].cols() != first_stage || b[i].cols() != second_stage ||
        a[i].rows() != b[i].rows() || rhs[i].size() != a[i].rows() ||
        a[i].rows() != a[0].rows()) {
      throw DimensionError("two-stage: block " + std::to_string(i) + " has wrong shape");
    }
  }
}

FeasIlp TwoStageIlp::assemble() const {
  validate();
  const std::size_t s = a[0].rows();
  const std::size_t n = first_stage + blocks() * second_stage;
  FeasIlp out;
  out.a = IntMatrix(s * blocks(), n);
  for (std::size_t i = 0; i < blocks(); ++i) {
    for (std::size_t r = 0; r < s; ++r) {
      for (std::size_t c = 0; c < first_stage; ++c) out.a(i * s + r, c) = a[i](r, c);
      for (std::size_t c = 0; c < second_stage; ++c) {
        out.a(i * s + r, first_stage + i * second_stage + c) = b[i](r, c);
      }
      out.b.push_back(rhs[i][r]);
    }
  }
  return out;
}

void NFoldIlp::validate() const {
  if (a.size() != b.size() || a.size() != rhs.size() || a.empty()) {
    throw DimensionError("n-fold: block lists differ in length or are empty");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].cols() != block_width || b[i].cols() != block_width ||
        a[i].rows() != linking_rhs.size() || b[i].rows() != b[0].rows() ||
        rhs[i].size() != b[i].rows()) {
      throw DimensionError("n-fold: block " + std::to_string(i) + " has wrong shape");
    }
  }
}

FeasIlp NFoldIlp::assemble() const {
  validate();
  const std::size_t r = linking_rhs.size();
  const std::size_t s = b[0].rows();
  const std::size_t t = block_width;
  FeasIlp out;
  out.a = IntMatrix(r + s * blocks(), t * blocks());
  for (std::size_t i = 0; i < blocks(); ++i) {
    for (std::size_t row = 0; row < r; ++row) {
      for (std::size_t c = 0; c < t; ++c) out.a(row, i * t + c) = a[i](row, c);
    }
    for (std::size_t row = 0; row < s; ++row) {
      for (std::size_t c = 0; c < t; ++c) out.a(r + i * s + row, i * t + c) = b[i](row, c);
    }
  }
  out.b = linking_rhs;
  for (const auto& v : rhs) out.b.insert(out.b.end(), v.begin(), v.end());
  return out;
}

TwoStageEquiv equiv_two_stage(const TwoStageIlp& ts, const BigInt& u,
                              const ReduceOptions& options) {
  ts.validate();
  TwoStageEquiv out;
  out.reduced = ts;
  const std::size_t r = ts.first_stage;
  for (std::size_t i = 0; i < ts.blocks(); ++i) {
    FeasIlp block;
    const std::size_t s = ts.a[i].rows();
    block.a = IntMatrix(s, r + ts.second_stage);
    for (std::size_t row = 0; row < s; ++row) {
      for (std::size_t c = 0; c < r; ++c) block.a(row, c) = ts.a[i](row, c);
      for (std::size_t c = 0; c < ts.second_stage; ++c) block.a(row, r + c) = ts.b[i](row, c);
    }
    block.b = ts.rhs[i];
    StaticEquivIlp red = static_equiv_ilp(block, u, options);
    for (std::size_t row = 0; row < s; ++row) {
      for (std::size_t c = 0; c < r; ++c) out.reduced.a[i](row, c) = red.reduced.a(row, c);
      for (std::size_t c = 0; c < ts.second_stage; ++c) {
        out.reduced.b[i](row, c) = red.reduced.a(row, r + c);
      }
    }
    out.reduced.rhs[i] = red.reduced.b;
    out.blocks.push_back(std::move(red));
  }
  return out;
}

NFoldEquiv equiv_nfold(const NFoldIlp& nf, const BigInt& u,
                       const ReduceOptions& options) {
  nf.validate();
  NFoldEquiv out;
  out.reduced = nf;
  const std::size_t t = nf.block_width;
  const std::size_t r = nf.linking_rhs.size();
  FeasIlp linking;
  linking.a = IntMatrix(r, t * nf.blocks());
  for (std::size_t i = 0; i < nf.blocks(); ++i) {
    for (std::size_t row = 0; row < r; ++row) {
      for (std::size_t c = 0; c < t; ++c) linking.a(row, i * t + c) = nf.a[i](row, c);
    }
  }
  linking.b = nf.linking_rhs;
  out.linking = static_equiv_ilp(linking, u, options);
  for (std::size_t i = 0; i < nf.blocks(); ++i) {
    for (std::size_t row = 0; row < r; ++row) {
      for (std::size_t c = 0; c < t; ++c) {
        out.reduced.a[i](row, c) = out.linking.reduced.a(row, i * t + c);
      }
    }
  }
  out.reduced.linking_rhs = out.linking.reduced.b;
  for (std::size_t i = 0; i < nf.blocks(); ++i) {
    FeasIlp block{nf.b[i], nf.rhs[i], {}, std::nullopt};
    StaticEquivIlp red = static_equiv_ilp(block, u, options);
    out.reduced.b[i] = red.reduced.a;
    out.reduced.rhs[i] = red.reduced.b;
    out.blocks.push_back(std::move(red));
  }
  return out;
}

}  // namespace instakernel
