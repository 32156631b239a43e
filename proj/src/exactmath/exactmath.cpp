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

#include "instakernel/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

namespace instakernel {

Rat::Rat(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw SingularMatrixError("rational with zero denominator");
  value_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.sign() == 0) throw SingularMatrixError("division by zero");
  value_ /= o.value_;
  return *this;
}

BigInt Rat::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rat::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rat::to_string() const { return value_.get_str(); }

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows,
                               std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void IntMatrix::append_row(std::span<const BigInt> values) {
  if (values.size() != cols_) {
    throw DimensionError("append_row: expected " + std::to_string(cols_) +
                         " entries, got " + std::to_string(values.size()));
  }
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

BigInt IntMatrix::max_abs() const { return instakernel::max_abs(entries_); }

IntVector IntMatrix::multiply(std::span<const BigInt> x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), x);
  return out;
}

BigInt det(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<BigInt> a = m.entries();
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * n + c]; };
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  BigInt d = at(n - 1, n - 1);
  return sign > 0 ? d : BigInt(-d);
}

namespace {

BigInt cofactor_rec(const std::vector<BigInt>& a, std::size_t n,
                    std::vector<std::size_t>& cols, std::size_t row) {
  if (row == n) return 1;
  BigInt total = 0;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    const BigInt& entry = a[row * n + c];
    if (entry != 0) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      BigInt minor = cofactor_rec(a, n, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      if (sign > 0) total += entry * minor; else total -= entry * minor;
    }
    sign = -sign;
  }
  return total;
}

}  // namespace

BigInt det_cofactor(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("det of non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return cofactor_rec(m.entries(), m.rows(), cols, 0);
}

CramerSolution cramer_solve(const IntMatrix& m, std::span<const BigInt> rhs) {
  if (!m.is_square()) throw DimensionError("cramer_solve: non-square matrix");
  if (rhs.size() != m.rows()) throw DimensionError("cramer_solve: rhs size");
  const BigInt d = det(m);
  if (d == 0) throw SingularMatrixError("cramer_solve: singular matrix");
  const std::size_t n = m.rows();
  CramerSolution out;
  out.scale = abs(d);
  out.rat_solution.reserve(n);
  out.scaled_int_solution.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix replaced = m;
    for (std::size_t r = 0; r < n; ++r) replaced(r, i) = rhs[r];
    const BigInt di = det(replaced);
    out.rat_solution.emplace_back(di, d);
    out.scaled_int_solution.push_back(sgn(d) > 0 ? di : BigInt(-di));
  }
  return out;
}

std::size_t rank(const IntMatrix& m) {
  std::vector<BigInt> a = m.entries();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * cols + c]; };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(r, k), at(pivot, k));
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      const BigInt f = at(i, c);
      const BigInt p = at(r, c);
      for (std::size_t k = c; k < cols; ++k) at(i, k) = at(i, k) * p - at(r, k) * f;
      const BigInt g = gcd_of(std::span<const BigInt>(a.data() + i * cols, cols));
      if (g > 1) {
        for (std::size_t k = c; k < cols; ++k) {
          mpz_divexact(at(i, k).get_mpz_t(), at(i, k).get_mpz_t(), g.get_mpz_t());
        }
      }
    }
    ++r;
  }
  return r;
}

BigInt ceil_sqrt(const BigInt& x) {
  if (x < 0) throw InputError("ceil_sqrt of negative value");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  if (r * r < x) ++r;
  return r;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt hadamard_l1_bound(std::size_t n_dim, const BigInt& a_inf) {
  if (n_dim == 0) throw InputError("hadamard_l1_bound: dimension must be >= 1");
  if (a_inf < 0) throw InputError("hadamard_l1_bound: negative norm");
  // (N (sqrt(N) a)^(N-1))^2 = N^(N+1) a^(2N-2)
  const BigInt n(static_cast<unsigned long>(n_dim));
  return ceil_sqrt(pow(n, n_dim + 1) * pow(a_inf, 2 * (n_dim - 1)));
}

BigInt equivalent_vector_l1_bound(std::size_t n_dim, const BigInt& delta) {
  if (n_dim == 0) throw InputError("equivalent_vector_l1_bound: dimension must be >= 1");
  // (N^2 (2 sqrt(N) delta)^(N-1))^2 = N^(N+3) 4^(N-1) delta^(2N-2)
  const BigInt n(static_cast<unsigned long>(n_dim));
  return ceil_sqrt(pow(n, n_dim + 3) * pow(BigInt(4), n_dim - 1) *
                   pow(delta, 2 * (n_dim - 1)));
}

std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::size_t bit_size(const BigInt& v) { return 1 + bit_length(v); }

std::size_t bit_size(std::span<const BigInt> v) {
  std::size_t total = 0;
  for (const auto& x : v) total += bit_size(x);
  return total;
}

std::size_t bit_size(const IntMatrix& m) { return bit_size(m.entries()); }

BigInt l1_norm(std::span<const BigInt> v) {
  BigInt s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

BigInt max_abs(std::span<const BigInt> v) {
  BigInt best = 0;
  for (const auto& x : v) {
    if (mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(x);
  }
  return best;
}

BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b) {
  if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

BigInt gcd_of(std::span<const BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InputError("not an integer: '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw InputError("not an integer: '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

std::string to_string(const BigInt& v) { return v.get_str(); }

bool fits_int64(const BigInt& v) {
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return v >= lo && v <= hi;
}

std::int64_t to_int64(const BigInt& v) {
  if (!fits_int64(v)) throw InputError("integer does not fit in 64 bits");
  if (v.fits_slong_p()) return v.get_si();
  return static_cast<std::int64_t>(std::stoll(v.get_str()));
}

}  // namespace instakernel
