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

#include <algorithm>
#include <numeric>

#include "instakernel/ilp.hpp"

namespace instakernel {
namespace {

// Odometer over offsets k_j in [0, range_j] for one half of the variables.
// Keys are the partial row sums  sum_j a_ij k_j  in the arithmetic type T.
template <typename T>
struct Half {
  std::vector<std::size_t> vars;
  std::vector<std::uint32_t> offsets;  // points x vars.size(), row-major
  std::vector<T> keys;                 // points x rows, row-major
  std::size_t count = 0;
};

template <typename T>
T convert(const BigInt& v);
template <>
std::int64_t convert<std::int64_t>(const BigInt& v) { return to_int64(v); }
template <>
BigInt convert<BigInt>(const BigInt& v) { return v; }

template <typename T>
Half<T> expand(const IntMatrix& a, const std::vector<std::size_t>& vars,
               const std::vector<std::uint32_t>& range) {
  const std::size_t m = a.rows();
  Half<T> h;
  h.vars = vars;
  std::vector<std::uint32_t> k(vars.size(), 0);
  std::vector<T> sum(m, T(0));
  std::vector<std::vector<T>> col(vars.size(), std::vector<T>(m));
  for (std::size_t t = 0; t < vars.size(); ++t) {
    for (std::size_t i = 0; i < m; ++i) col[t][i] = convert<T>(a(i, vars[t]));
  }
  for (;;) {
    h.offsets.insert(h.offsets.end(), k.begin(), k.end());
    h.keys.insert(h.keys.end(), sum.begin(), sum.end());
    ++h.count;
    std::size_t t = 0;
    for (; t < vars.size(); ++t) {
      if (k[t] < range[vars[t]]) {
        ++k[t];
        for (std::size_t i = 0; i < m; ++i) sum[i] += col[t][i];
        break;
      }
      for (std::size_t i = 0; i < m; ++i) sum[i] -= col[t][i] * T(k[t]);
      k[t] = 0;
    }
    if (t == vars.size()) break;
  }
  return h;
}

template <typename T>
std::vector<IntVector> join(const FeasIlp& ilp, const IntVector& lower,
                            const std::vector<std::uint32_t>& range,
                            const std::vector<T>& target, bool first_only,
                            std::uint64_t work_limit, std::uint64_t work) {
  const std::size_t n = ilp.cols();
  const std::size_t m = ilp.rows();
  std::vector<std::size_t> left_vars(n / 2), right_vars(n - n / 2);
  std::iota(left_vars.begin(), left_vars.end(), 0);
  std::iota(right_vars.begin(), right_vars.end(), n / 2);
  const Half<T> left = expand<T>(ilp.a, left_vars, range);
  const Half<T> right = expand<T>(ilp.a, right_vars, range);

  std::vector<std::uint32_t> order(left.count);
  std::iota(order.begin(), order.end(), 0);
  auto key_less = [&](const T* x, const T* y) {
    return std::lexicographical_compare(x, x + m, y, y + m);
  };
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t p, std::uint32_t q) {
    return key_less(&left.keys[p * m], &left.keys[q * m]);
  });

  std::vector<IntVector> out;
  std::vector<T> need(m);
  for (std::size_t r = 0; r < right.count; ++r) {
    for (std::size_t i = 0; i < m; ++i) need[i] = target[i] - right.keys[r * m + i];
    auto lo = std::lower_bound(order.begin(), order.end(), need.data(),
                               [&](std::uint32_t p, const T* key) {
                                 return key_less(&left.keys[p * m], key);
                               });
    for (auto it = lo; it != order.end(); ++it) {
      if (key_less(need.data(), &left.keys[*it * m])) break;
      require_within(++work, work_limit, "enumerate_feasible work");
      IntVector x(n);
      for (std::size_t t = 0; t < left_vars.size(); ++t) {
        x[left_vars[t]] = lower[left_vars[t]] + left.offsets[*it * left_vars.size() + t];
      }
      for (std::size_t t = 0; t < right_vars.size(); ++t) {
        x[right_vars[t]] = lower[right_vars[t]] + right.offsets[r * right_vars.size() + t];
      }
      out.push_back(std::move(x));
      if (first_only) return out;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> search(const FeasIlp& ilp, bool first_only,
                              std::optional<std::uint64_t> work_limit) {
  ilp.validate();
  if (!ilp.upper) throw InputError("enumerate_feasible: a finite box is required");
  const std::uint64_t limit =
      work_limit ? *work_limit : Budget::defaults().feasible_search;
  const std::size_t n = ilp.cols();
  const std::size_t m = ilp.rows();
  const IntVector lower = ilp.lower_or_zero();

  std::vector<std::uint32_t> range(n);
  BigInt left_volume = 1, right_volume = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const BigInt r = (*ilp.upper)[j] - lower[j];
    if (r > limit) {
      throw BudgetExceeded("enumerate_feasible: variable range exceeds budget");
    }
    range[j] = static_cast<std::uint32_t>(r.get_ui());
    (j < n / 2 ? left_volume : right_volume) *= r + 1;
  }
  const BigInt work = left_volume + right_volume;
  if (work > limit) {
    throw BudgetExceeded("enumerate_feasible: " + work.get_str() +
                         " work units exceed budget " + std::to_string(limit));
  }

  // target_i = b_i - sum_j a_ij lower_j; the search matches offset sums.
  IntVector target(m);
  bool int64_safe = true;
  for (std::size_t i = 0; i < m; ++i) {
    target[i] = ilp.b[i] - dot(ilp.a.row(i), lower);
    BigInt reach = 0;
    for (std::size_t j = 0; j < n; ++j) reach += abs(ilp.a(i, j)) * range[j];
    if (reach >= (BigInt(1) << 62)) int64_safe = false;
  }
  if (int64_safe) {
    std::vector<std::int64_t> t64(m);
    for (std::size_t i = 0; i < m; ++i) {
      // An offset sum never leaves (-2^62, 2^62); a larger target has no match.
      if (abs(target[i]) >= (BigInt(1) << 62)) return {};
      t64[i] = to_int64(target[i]);
    }
    return join<std::int64_t>(ilp, lower, range, t64, first_only, limit,
                              work.get_ui());
  }
  return join<BigInt>(ilp, lower, range, target, first_only, limit, work.get_ui());
}

}  // namespace

std::vector<IntVector> enumerate_feasible(const FeasIlp& ilp,
                                          std::optional<std::uint64_t> work_limit) {
  return search(ilp, false, work_limit);
}

std::optional<IntVector> find_feasible_point(
    const FeasIlp& ilp, std::optional<std::uint64_t> work_limit) {
  auto found = search(ilp, true, work_limit);
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace instakernel
