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

#include "instakernel/lp.hpp"

namespace instakernel {
namespace {

// Compares c1/d1 with c2/d2 for positive d1, d2.
int compare_ratio(const BigInt& c1, const BigInt& d1, const BigInt& c2,
                  const BigInt& d2) {
  return cmp(c1 * d2, c2 * d1);
}

}  // namespace

Simplex::Simplex(std::size_t num_vars) : num_vars_(num_vars) {
  unknowns_.reserve(num_vars);
  col_unknown_.reserve(num_vars);
  for (std::size_t j = 0; j < num_vars; ++j) {
    unknowns_.push_back({Kind::kVar, false, false, j});
    col_unknown_.push_back(j);
  }
}

void Simplex::normalize(Row& r) {
  BigInt g = r.denom;
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.constant.get_mpz_t());
  for (const auto& c : r.coeff) {
    if (g == 1) return;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g <= 1) return;
  mpz_divexact(r.denom.get_mpz_t(), r.denom.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(r.constant.get_mpz_t(), r.constant.get_mpz_t(), g.get_mpz_t());
  for (auto& c : r.coeff) {
    if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

std::size_t Simplex::add_row(std::span<const BigInt> coeffs,
                             const BigInt& constant, Kind kind,
                             bool restricted) {
  if (coeffs.size() != num_vars_) {
    throw DimensionError("constraint has " + std::to_string(coeffs.size()) +
                         " coefficients, expected " + std::to_string(num_vars_));
  }
  Row r;
  r.denom = 1;
  r.constant = constant;
  r.coeff.assign(col_unknown_.size(), BigInt(0));
  for (std::size_t j = 0; j < num_vars_; ++j) {
    if (coeffs[j] == 0) continue;
    const Unknown& u = unknowns_[j];
    if (!u.in_row) {
      r.coeff[u.pos] += coeffs[j] * r.denom;
      continue;
    }
    // r += coeffs[j] * (row / row.denom), over a common denominator.
    const Row& src = rows_[u.pos];
    BigInt l;
    mpz_lcm(l.get_mpz_t(), r.denom.get_mpz_t(), src.denom.get_mpz_t());
    const BigInt scale_r = l / r.denom;
    const BigInt scale_s = coeffs[j] * (l / src.denom);
    if (scale_r != 1) {
      r.constant *= scale_r;
      for (auto& c : r.coeff) c *= scale_r;
    }
    r.constant += scale_s * src.constant;
    for (std::size_t k = 0; k < r.coeff.size(); ++k) {
      if (src.coeff[k] != 0) r.coeff[k] += scale_s * src.coeff[k];
    }
    r.denom = l;
  }
  normalize(r);
  const std::size_t unknown = unknowns_.size();
  r.unknown = unknown;
  unknowns_.push_back({kind, restricted, true, rows_.size()});
  rows_.push_back(std::move(r));
  return rows_.size() - 1;
}

void Simplex::pivot(std::size_t row, std::size_t col) {
  ++pivots_;
  Row& pr = rows_[row];
  const BigInt a = pr.coeff[col];
  const std::size_t u = pr.unknown;
  const std::size_t v = col_unknown_[col];

  // Solve the pivot row for the column unknown.
  Row nr;
  nr.unknown = v;
  nr.denom = a;
  nr.constant = -pr.constant;
  nr.coeff.resize(pr.coeff.size());
  for (std::size_t k = 0; k < pr.coeff.size(); ++k) nr.coeff[k] = -pr.coeff[k];
  nr.coeff[col] = pr.denom;
  if (a < 0) {
    nr.denom = -nr.denom;
    nr.constant = -nr.constant;
    for (auto& c : nr.coeff) c = -c;
  }
  normalize(nr);

  for (std::size_t s = 0; s < rows_.size(); ++s) {
    if (s == row) continue;
    Row& sr = rows_[s];
    if (sr.coeff[col] == 0) continue;
    const BigInt b = sr.coeff[col];
    sr.denom *= nr.denom;
    sr.constant = sr.constant * nr.denom + b * nr.constant;
    for (std::size_t k = 0; k < sr.coeff.size(); ++k) {
      if (k == col) {
        sr.coeff[k] = b * nr.coeff[k];
      } else if (nr.coeff[k] != 0) {
        sr.coeff[k] = sr.coeff[k] * nr.denom + b * nr.coeff[k];
      } else if (sr.coeff[k] != 0) {
        sr.coeff[k] *= nr.denom;
      }
    }
    normalize(sr);
  }

  rows_[row] = std::move(nr);
  col_unknown_[col] = u;
  unknowns_[u].in_row = false;
  unknowns_[u].pos = col;
  unknowns_[v].in_row = true;
  unknowns_[v].pos = row;
}

std::optional<std::size_t> Simplex::blocking_row(
    std::size_t col, int direction, std::optional<std::size_t> extra) const {
  std::optional<std::size_t> best;
  auto better = [&](std::size_t s) {
    if (!best) return true;
    const Row& x = rows_[s];
    const Row& y = rows_[*best];
    const BigInt ax = abs(x.coeff[col]);
    const BigInt ay = abs(y.coeff[col]);
    // Limit for a blocking row is constant/|coeff|; for the extra (target)
    // row it is -constant/|coeff|.
    const BigInt cx = (extra && s == *extra) ? BigInt(-x.constant) : x.constant;
    const BigInt cy = (extra && *best == *extra) ? BigInt(-y.constant) : y.constant;
    const int c = compare_ratio(cx, ax, cy, ay);
    if (c != 0) return c < 0;
    return x.unknown < y.unknown;
  };
  for (std::size_t s = 0; s < rows_.size(); ++s) {
    const Row& r = rows_[s];
    const BigInt& a = r.coeff[col];
    if (a == 0) continue;
    if (extra && s == *extra) {
      if (better(s)) best = s;
      continue;
    }
    const Unknown& u = unknowns_[r.unknown];
    if (!u.restricted) continue;
    if (direction * sgn(a) >= 0) continue;
    if (better(s)) best = s;
  }
  return best;
}

bool Simplex::restore_row(std::size_t row) {
  while (rows_[row].constant < 0) {
    const Row& r = rows_[row];
    std::optional<std::size_t> col;
    int direction = 0;
    for (std::size_t k = 0; k < r.coeff.size(); ++k) {
      const int s = sgn(r.coeff[k]);
      if (s == 0) continue;
      const Unknown& cu = unknowns_[col_unknown_[k]];
      if (cu.restricted && s < 0) continue;
      if (!col || col_unknown_[k] < col_unknown_[*col]) {
        col = k;
        direction = cu.restricted ? 1 : s;
      }
    }
    if (!col) {
      empty_ = true;
      return false;
    }
    const std::optional<std::size_t> target = blocking_row(*col, direction, row);
    pivot(*target, *col);
    if (*target == row) return true;
  }
  return true;
}

bool Simplex::add_inequality(std::span<const BigInt> coeffs,
                             const BigInt& constant) {
  if (empty_) {
    if (coeffs.size() != num_vars_) throw DimensionError("constraint size");
    con_unknown_.push_back(unknowns_.size());
    unknowns_.push_back({Kind::kConstraint, true, false, 0});
    return false;
  }
  const std::size_t row = add_row(coeffs, constant, Kind::kConstraint, true);
  con_unknown_.push_back(rows_[row].unknown);
  return restore_row(row);
}

bool Simplex::add_equality(std::span<const BigInt> coeffs,
                           const BigInt& constant) {
  IntVector neg(coeffs.begin(), coeffs.end());
  for (auto& c : neg) c = -c;
  add_inequality(coeffs, constant);
  return add_inequality(neg, BigInt(-constant));
}

void Simplex::to_vertex() {
  if (empty_) return;
  for (std::size_t k = 0; k < col_unknown_.size(); ++k) {
    if (unknowns_[col_unknown_[k]].restricted) continue;
    const auto up = blocking_row(k, 1, std::nullopt);
    const auto down = blocking_row(k, -1, std::nullopt);
    if (!up && !down) {
      throw InputError("feasible region contains a line; no vertex exists");
    }
    std::size_t target;
    if (!up) {
      target = *down;
    } else if (!down) {
      target = *up;
    } else {
      const Row& x = rows_[*up];
      const Row& y = rows_[*down];
      const int c = compare_ratio(x.constant, abs(x.coeff[k]), y.constant,
                                  abs(y.coeff[k]));
      target = (c < 0 || (c == 0 && x.unknown < y.unknown)) ? *up : *down;
    }
    pivot(target, k);
  }
}

Simplex::Status Simplex::minimize(std::span<const BigInt> objective) {
  if (empty_) return Status::kEmpty;
  to_vertex();
  const std::size_t obj = add_row(objective, BigInt(0), Kind::kObjective, false);
  Status status = Status::kOptimal;
  for (;;) {
    const Row& r = rows_[obj];
    std::optional<std::size_t> col;
    for (std::size_t k = 0; k < r.coeff.size(); ++k) {
      if (r.coeff[k] >= 0) continue;
      if (!col || col_unknown_[k] < col_unknown_[*col]) col = k;
    }
    if (!col) break;
    const auto leave = blocking_row(*col, 1, std::nullopt);
    if (!leave) {
      status = Status::kUnbounded;
      break;
    }
    pivot(*leave, *col);
  }
  // The objective row is never pivoted, so it is still the last row.
  rows_.pop_back();
  unknowns_.pop_back();
  return status;
}

Rat Simplex::sample_value(std::size_t var) const {
  const Unknown& u = unknowns_.at(var);
  if (!u.in_row) return Rat(0);
  const Row& r = rows_[u.pos];
  return Rat(r.constant, r.denom);
}

RatVector Simplex::sample() const {
  RatVector out;
  out.reserve(num_vars_);
  for (std::size_t j = 0; j < num_vars_; ++j) out.push_back(sample_value(j));
  return out;
}

bool Simplex::constraint_is_basic(std::size_t constraint) const {
  return unknowns_[con_unknown_.at(constraint)].in_row;
}

LpResult solve_vertex(const StandardLp& lp) {
  const std::size_t m = lp.a.rows();
  const std::size_t n = lp.a.cols();
  if (lp.b.size() != m) throw DimensionError("solve_vertex: b has wrong length");
  if (lp.upper && lp.upper->size() != n) {
    throw DimensionError("solve_vertex: upper has wrong length");
  }
  if (lp.objective && lp.objective->size() != n) {
    throw DimensionError("solve_vertex: objective has wrong length");
  }
  Simplex s(n);
  IntVector unit(n, BigInt(0));
  for (std::size_t j = 0; j < n; ++j) {
    unit[j] = 1;
    s.add_inequality(unit, BigInt(0));
    unit[j] = 0;
  }
  for (std::size_t i = 0; i < m; ++i) s.add_equality(lp.a.row(i), BigInt(-lp.b[i]));
  if (lp.upper) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((*lp.upper)[j] < 0) throw InputError("solve_vertex: negative upper bound");
      unit[j] = -1;
      s.add_inequality(unit, (*lp.upper)[j]);
      unit[j] = 0;
    }
  }
  LpResult result;
  if (s.empty()) return result;
  if (lp.objective) {
    const auto st = s.minimize(*lp.objective);
    if (st == Simplex::Status::kUnbounded) {
      result.status = LpStatus::kUnbounded;
      return result;
    }
  } else {
    s.to_vertex();
  }
  result.status = LpStatus::kFeasible;
  result.vertex.values = s.sample();
  for (std::size_t j = 0; j < n; ++j) {
    if (s.constraint_is_basic(j)) result.vertex.basis.push_back(j);
  }
  return result;
}

}  // namespace instakernel
