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

#include "difference_scan.hpp"

namespace instakernel::detail {
namespace {

std::vector<std::vector<std::int32_t>> box_points(std::size_t dims,
                                                  std::int32_t r) {
  std::vector<std::vector<std::int32_t>> out;
  std::vector<std::int32_t> z(dims, -r);
  for (;;) {
    out.push_back(z);
    std::size_t t = 0;
    for (; t < dims; ++t) {
      if (z[t] < r) {
        ++z[t];
        break;
      }
      z[t] = -r;
    }
    if (t == dims) break;
  }
  return out;
}

template <typename T>
T to_t(const BigInt& v);
template <>
std::int64_t to_t<std::int64_t>(const BigInt& v) { return to_int64(v); }
template <>
BigInt to_t<BigInt>(const BigInt& v) { return v; }

template <typename T>
BigInt to_big(const T& v) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return v;
  } else {
    return BigInt(std::to_string(v));
  }
}

}  // namespace

DifferenceScan::DifferenceScan(const IntVector& w, const BigInt& delta)
    : n_(w.size()), split_(w.size() / 2), radius_(2 * delta) {
  if (delta < 1) throw InputError("difference scan: delta must be >= 1");
  const BigInt side = radius_ * 2 + 1;
  const BigInt larger = pow(side, n_ - split_);
  if (larger > Budget::defaults().enumeration) {
    throw BudgetExceeded("difference scan: " + larger.get_str() +
                         " half-box points exceed budget " +
                         std::to_string(Budget::defaults().enumeration));
  }
  const auto r = static_cast<std::int32_t>(radius_.get_si());
  for (auto& d : box_points(split_, r)) {
    BigInt a = 0;
    for (std::size_t j = 0; j < split_; ++j) {
      if (d[j] != 0) a += w[j] * d[j];
    }
    low_.push_back({std::move(d), std::move(a)});
  }
  for (auto& d : box_points(n_ - split_, r)) {
    BigInt a = 0;
    for (std::size_t j = 0; j < n_ - split_; ++j) {
      if (d[j] != 0) a += w[split_ + j] * d[j];
    }
    high_.push_back({std::move(d), std::move(a)});
  }
  std::stable_sort(low_.begin(), low_.end(),
                   [](const Part& x, const Part& y) { return x.a < y.a; });
  auto by_a = [](const Part& p, const BigInt& key) { return p.a < key; };
  auto a_below = [](const BigInt& key, const Part& p) { return key < p.a; };
  for (const Part& h : high_) {
    const BigInt need = 1 - h.a;
    strict_start_.push_back(static_cast<std::size_t>(
        std::lower_bound(low_.begin(), low_.end(), need, by_a) - low_.begin()));
    const BigInt opp = -h.a;
    const auto lo = std::lower_bound(low_.begin(), low_.end(), opp, by_a);
    const auto hi = std::upper_bound(lo, low_.end(), opp, a_below);
    group_begin_.push_back(static_cast<std::size_t>(lo - low_.begin()));
    group_end_.push_back(static_cast<std::size_t>(hi - low_.begin()));
  }
}

IntVector DifferenceScan::assemble(std::size_t low, std::size_t high) const {
  IntVector z;
  z.reserve(n_);
  for (auto d : low_[low].digits) z.emplace_back(d);
  for (auto d : high_[high].digits) z.emplace_back(d);
  return z;
}

template <typename T>
std::vector<DifferenceScan::Violation> DifferenceScan::find_typed(
    const IntVector& v, const BigInt& denom, std::size_t limit) const {
  std::vector<T> vt(n_);
  for (std::size_t j = 0; j < n_; ++j) vt[j] = to_t<T>(v[j]);
  const T d = to_t<T>(denom);

  std::vector<T> b_low(low_.size()), b_high(high_.size());
  for (std::size_t i = 0; i < low_.size(); ++i) {
    T s = 0;
    for (std::size_t j = 0; j < split_; ++j) s += vt[j] * T(low_[i].digits[j]);
    b_low[i] = s;
  }
  for (std::size_t i = 0; i < high_.size(); ++i) {
    T s = 0;
    for (std::size_t j = 0; j < n_ - split_; ++j) {
      s += vt[split_ + j] * T(high_[i].digits[j]);
    }
    b_high[i] = s;
  }

  // suffix_min[i]: position of the least b over low_[i..].
  std::vector<std::size_t> suffix_min(low_.size() + 1, low_.size());
  for (std::size_t i = low_.size(); i-- > 0;) {
    const std::size_t next = suffix_min[i + 1];
    suffix_min[i] = (next == low_.size() || b_low[i] < b_low[next]) ? i : next;
  }
  // Per equal-a group: positions of the least and greatest b.
  std::vector<std::size_t> group_min(low_.size()), group_max(low_.size());
  for (std::size_t i = 0; i < low_.size();) {
    std::size_t e = i + 1;
    while (e < low_.size() && low_[e].a == low_[i].a) ++e;
    std::size_t mn = i, mx = i;
    for (std::size_t k = i + 1; k < e; ++k) {
      if (b_low[k] < b_low[mn]) mn = k;
      if (b_low[mx] < b_low[k]) mx = k;
    }
    for (std::size_t k = i; k < e; ++k) {
      group_min[k] = mn;
      group_max[k] = mx;
    }
    i = e;
  }

  struct Candidate {
    bool null;
    T excess;
    std::size_t high, low;
  };
  std::vector<Candidate> found;
  for (std::size_t h = 0; h < high_.size(); ++h) {
    if (group_begin_[h] < group_end_[h]) {
      const std::size_t g = group_begin_[h];
      const T lo_sum = b_low[group_min[g]] + b_high[h];
      const T hi_sum = b_low[group_max[g]] + b_high[h];
      if (lo_sum != 0) {
        found.push_back({true, lo_sum < 0 ? T(-lo_sum) : lo_sum, h, group_min[g]});
      } else if (hi_sum != 0) {
        found.push_back({true, hi_sum, h, group_max[g]});
      }
    }
    const std::size_t s = strict_start_[h];
    if (s < low_.size()) {
      const std::size_t l = suffix_min[s];
      const T excess = b_low[l] + b_high[h] - d;
      if (excess < 0) found.push_back({false, excess, h, l});
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const Candidate& x, const Candidate& y) {
                     if (x.null != y.null) return x.null;
                     if (x.null) return y.excess < x.excess;
                     return x.excess < y.excess;
                   });
  if (found.size() > limit) found.resize(limit);
  std::vector<Violation> out;
  out.reserve(found.size());
  for (const auto& c : found) {
    out.push_back({assemble(c.low, c.high), c.null, to_big(c.excess)});
  }
  return out;
}

std::vector<DifferenceScan::Violation> DifferenceScan::find(
    const IntVector& v, const BigInt& denom, std::size_t limit) const {
  if (v.size() != n_) throw DimensionError("difference scan: size mismatch");
  const BigInt reach = max_abs(v) * radius_ * static_cast<unsigned long>(n_ + 1);
  const BigInt cap = BigInt(1) << 61;
  if (reach < cap && abs(denom) < cap) {
    return find_typed<std::int64_t>(v, denom, limit);
  }
  return find_typed<BigInt>(v, denom, limit);
}

}  // namespace instakernel::detail
