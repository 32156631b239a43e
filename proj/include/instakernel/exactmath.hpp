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

#ifndef INSTAKERNEL_EXACTMATH_HPP_
#define INSTAKERNEL_EXACTMATH_HPP_

// Exact integer and rational arithmetic plus the fraction-free linear algebra
// used by every reduction in the library. Integers are GMP-backed; there is no
// floating-point path anywhere in this header.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "instakernel/errors.hpp"

namespace instakernel {

using BigInt = mpz_class;

// A rational number kept in canonical form: positive denominator and
// gcd(|num|, den) = 1. Zero is 0/1.
class Rat {
 public:
  Rat() = default;
  Rat(const BigInt& n) : value_(n) {}  // NOLINT(runtime/explicit)
  Rat(long n) : value_(n) {}           // NOLINT(runtime/explicit)
  Rat(const BigInt& num, const BigInt& den);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  BigInt floor() const;
  BigInt ceil() const;

  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { Rat r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.value_ >= b.value_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.value_ != b.value_; }

  std::string to_string() const;

 private:
  mpq_class value_;
};

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<Rat>;

IntVector make_vector(std::initializer_list<long> values);

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  std::span<const BigInt> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<BigInt> row(std::size_t r) {
    return {entries_.data() + r * cols_, cols_};
  }
  IntVector row_vector(std::size_t r) const {
    return IntVector(row(r).begin(), row(r).end());
  }
  const std::vector<BigInt>& entries() const { return entries_; }

  void append_row(std::span<const BigInt> values);

  // Largest absolute entry (0 for an empty matrix).
  BigInt max_abs() const;

  IntVector multiply(std::span<const BigInt> x) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

// Exact determinant by Bareiss fraction-free elimination.
BigInt det(const IntMatrix& m);

// Determinant by cofactor expansion. Exponential; only meant as a cross-check
// for small matrices.
BigInt det_cofactor(const IntMatrix& m);

struct CramerSolution {
  RatVector rat_solution;
  IntVector scaled_int_solution;  // |det| * rat_solution
  BigInt scale;                   // |det|
};

// Solves m * x = rhs for square nonsingular m via Cramer's rule.
CramerSolution cramer_solve(const IntMatrix& m, std::span<const BigInt> rhs);

// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

// Smallest integer r with r*r >= x (x >= 0).
BigInt ceil_sqrt(const BigInt& x);

BigInt pow(const BigInt& base, unsigned long exponent);

// ceil(N * (sqrt(N) * a_inf)^(N-1)), the Hadamard-type l1 bound for an
// integral cone generator whose defining rows have entries bounded by a_inf.
BigInt hadamard_l1_bound(std::size_t n_dim, const BigInt& a_inf);

// ceil(N^2 * (2 * sqrt(N) * delta)^(N-1)), the l1 bound on a reduced
// equivalent vector.
BigInt equivalent_vector_l1_bound(std::size_t n_dim, const BigInt& delta);

// Bit length of |v| (0 for v = 0).
std::size_t bit_length(const BigInt& v);

// Encoding size: 1 + ceil(log2(|v| + 1)) per scalar.
std::size_t bit_size(const BigInt& v);
std::size_t bit_size(std::span<const BigInt> v);
std::size_t bit_size(const IntMatrix& m);

BigInt l1_norm(std::span<const BigInt> v);
BigInt max_abs(std::span<const BigInt> v);
BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b);
BigInt gcd_of(std::span<const BigInt> v);

// Parses a decimal integer with optional sign; throws InputError otherwise.
BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& v);

// Exact conversion to int64 when it fits.
bool fits_int64(const BigInt& v);
std::int64_t to_int64(const BigInt& v);

}  // namespace instakernel

#endif  // INSTAKERNEL_EXACTMATH_HPP_
