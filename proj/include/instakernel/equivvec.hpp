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

#ifndef INSTAKERNEL_EQUIVVEC_HPP_
#define INSTAKERNEL_EQUIVVEC_HPP_

// Equivalent weight vectors. Two vectors w and w' are equivalent on
// [-D, D]^N when they order every pair of points of the box the same way;
// with z = x - y this is sign(w.z) == sign(w'.z) for all z in [-2D, 2D]^N.

#include <cstdint>
#include <optional>
#include <vector>

#include "instakernel/exactmath.hpp"

namespace instakernel {

struct EquivCone {
  std::size_t dim = 0;
  BigInt radius;
  IntVector base;
  std::vector<IntVector> strict_normals;  // w.z > 0, sorted
  std::vector<IntVector> null_normals;    // w.z == 0, z != 0, sorted
};

// Exhaustive listing of the difference normals; (4D+1)^N must fit the
// enumeration budget.
EquivCone build_cone(const IntVector& w, const BigInt& delta);

// Integral generators of {x | a x >= 0}: every nonsingular N-row subset of
// (a; I) solved against +-e_j, scaled to integers, kept when inside the cone,
// reduced to primitive direction and sorted.
std::vector<IntVector> enumerate_generators(const IntMatrix& a);

enum class ReduceStrategy {
  kMinimal,   // branch-and-bound for the least l1 norm
  kLpVertex,  // optimal LP vertex scaled to integers; not always minimal
  kAuto,      // kMinimal under a node limit, then kLpVertex
};

struct ReduceOptions {
  ReduceStrategy strategy = ReduceStrategy::kAuto;
  std::uint64_t minimal_node_limit = 5000;
  std::size_t cuts_per_round = 8;
};

struct ReducedVector {
  IntVector original;
  IntVector reduced;
  BigInt radius;
  BigInt l1_norm;
  BigInt l1_bound;       // ceil(N^2 (2 sqrt(N) D)^(N-1))
  bool verified = false;
  bool minimal = false;  // l1 norm proven least among equivalent vectors
  std::uint64_t nodes = 0;
  std::size_t cuts = 0;
};

// Small equivalent vector. Signs (and zeros) of w are kept; cone constraints
// are generated lazily by a meet-in-the-middle separator, so dimensions well
// past what the exhaustive cone allows are reachable. Throws
// InternalInconsistency if the result fails the equivalence check.
ReducedVector reduce_vector(const IntVector& w, const BigInt& delta,
                            const ReduceOptions& options = {});

struct GeneratorSum {
  IntVector vector;
  std::size_t generators = 0;  // size of the enumerated generator set
  std::size_t summed = 0;      // size of the independent subset
  BigInt l1_norm;
  bool equivalent = false;
};

// Sum of a greedily chosen maximal independent set of cone generators. The
// result is checked, not assumed, to be equivalent.
GeneratorSum reduce_vector_generator_sum(const IntVector& w,
                                         const BigInt& delta);

// A difference vector z in [-2D, 2D]^N on which the signs of w.z and
// w_bar.z differ, if one exists.
std::optional<IntVector> find_inequivalence_witness(const IntVector& w,
                                                    const IntVector& w_bar,
                                                    const BigInt& delta);

bool check_equivalent(const IntVector& w, const IntVector& w_bar,
                      const BigInt& delta);

// Least l1 norm over all integer vectors equivalent to w, by increasing-norm
// exhaustive search.
BigInt min_equivalent_norm(const IntVector& w, const BigInt& delta);

}  // namespace instakernel

#endif  // INSTAKERNEL_EQUIVVEC_HPP_
