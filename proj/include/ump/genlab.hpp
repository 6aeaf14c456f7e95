//  Copyright 2026 The umpcheck Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef UMP_GENLAB_HPP_
#define UMP_GENLAB_HPP_

#include <cstddef>
#include <cstdint>
#include <string>

#include "ump/category.hpp"
#include "ump/dsl.hpp"
#include "ump/order.hpp"
#include "ump/universality.hpp"

namespace ump::genlab {

/// genlab PRNG, version 1: SplitMix64.
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// Derived draws are defined here rather than through <random>
/// distributions, whose output is implementation-specific:
///   below(n)      = high 64 bits of next() * n
///   bernoulli(p)  = (next() >> 11) * 2^-53 < p
class SplitMix64 {
 public:
  static constexpr std::uint32_t kVersion = 1;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) noexcept { return mul_high(next(), n); }

  bool bernoulli(double p) noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

 private:
  static constexpr std::uint64_t mul_high(std::uint64_t a, std::uint64_t b) noexcept {
    const std::uint64_t a_lo = a & 0xFFFFFFFFu, a_hi = a >> 32;
    const std::uint64_t b_lo = b & 0xFFFFFFFFu, b_hi = b >> 32;
    const std::uint64_t lo_lo = a_lo * b_lo;
    const std::uint64_t hi_lo = a_hi * b_lo;
    const std::uint64_t lo_hi = a_lo * b_hi;
    const std::uint64_t cross = (lo_lo >> 32) + (hi_lo & 0xFFFFFFFFu) + lo_hi;
    return a_hi * b_hi + (hi_lo >> 32) + (cross >> 32);
  }

  std::uint64_t state_;
};

enum class PreorderConstruction {
  closure,   // reflexive-transitive closure of a random relation
  quotient,  // random partition plus a random partial order on the blocks
};

/// Elements are named `<prefix>0`, `<prefix>1`, ...
Carrier gen_carrier(std::size_t n, const std::string& label = "s", const std::string& prefix = "e");

/// A random partial order on n elements (a random DAG over a random
/// permutation, transitively closed).
BinaryRelation gen_partial_order(std::uint64_t seed, std::size_t n, double density = 0.5);

/// The thin category of gen_partial_order(seed, n, density): objects
/// p0..p(n-1), one arrow a_<x>_<y> for each strict x ≤ y.
FiniteCategory gen_poset_category(std::uint64_t seed, std::size_t n, double density = 0.5);

/// The thin category of a random poset with every object x duplicated as
/// x_t. x and x_t are isomorphic; the category is the poset category times
/// the two-object indiscrete category.
FiniteCategory gen_doubled_poset_category(std::uint64_t seed, std::size_t n,
                                          double density = 0.5);

BinaryRelation gen_relation(std::uint64_t seed, std::size_t n, double density = 0.5);
Preorder gen_preorder(std::uint64_t seed, std::size_t n, PreorderConstruction construction,
                      double density = 0.5);
Predicate gen_predicate(std::uint64_t seed, std::size_t n, double density = 0.5);

/// A document holding one of each kind of declaration, with relations and
/// predicates spread over both a set and the objects of the category.
Document gen_bundle(std::uint64_t seed);

/// The divisors of n under divisibility, one arrow a_<x>_<y> for each pair
/// x | y with x != y. The default is the six-object category D12.
FiniteCategory divisor_category(unsigned n = 12, const std::string& name = "d12");

}  // namespace ump::genlab

#endif  // UMP_GENLAB_HPP_
