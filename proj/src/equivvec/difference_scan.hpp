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

#ifndef INSTAKERNEL_SRC_EQUIVVEC_DIFFERENCE_SCAN_HPP_
#define INSTAKERNEL_SRC_EQUIVVEC_DIFFERENCE_SCAN_HPP_

#include <cstdint>
#include <vector>

#include "instakernel/exactmath.hpp"

namespace instakernel::detail {

// Searches z in [-2D, 2D]^N for
//   strict violations:  w.z > 0  and  v.z < denom
//   null violations:    w.z == 0 and  v.z != 0
// without listing the whole box. The coordinates are split into a low and a
// high half; low halves are sorted by w.z once, and each query walks the high
// halves against suffix minima (strict) or equal-w.z groups (null).
class DifferenceScan {
 public:
  DifferenceScan(const IntVector& w, const BigInt& delta);

  struct Violation {
    IntVector z;
    bool null = false;
    BigInt excess;  // v.z - denom for strict, |v.z| for null
  };

  // At most `limit` violations, null ones first, then most violated first.
  std::vector<Violation> find(const IntVector& v, const BigInt& denom,
                              std::size_t limit) const;

  std::size_t half_points() const { return low_.size() + high_.size(); }

 private:
  struct Part {
    std::vector<std::int32_t> digits;  // coordinates of this half of z
    BigInt a;                          // w.z over this half
  };

  template <typename T>
  std::vector<Violation> find_typed(const IntVector& v, const BigInt& denom,
                                    std::size_t limit) const;
  IntVector assemble(std::size_t low, std::size_t high) const;

  std::size_t n_ = 0;
  std::size_t split_ = 0;
  std::vector<Part> low_;   // sorted by a
  std::vector<Part> high_;
  std::vector<std::size_t> strict_start_;  // per high: first low with a_l + a_h > 0
  std::vector<std::size_t> group_begin_;   // per high: equal-a range with a_l == -a_h
  std::vector<std::size_t> group_end_;
  BigInt radius_;  // 2D
};

}  // namespace instakernel::detail

#endif  // INSTAKERNEL_SRC_EQUIVVEC_DIFFERENCE_SCAN_HPP_
