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

#ifndef UMP_ORDER_HPP_
#define UMP_ORDER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ump/category.hpp"

namespace ump {

/// A finite, lexicographically ordered set of element names. The label is
/// how declarations refer to the carrier (a set name, or "objects-of C").
class Carrier {
 public:
  Carrier(std::string label, std::vector<std::string> elements);
  static Carrier objects_of(const FiniteCategory& c);

  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::span<const std::string> elements() const noexcept { return elements_; }
  const std::string& operator[](std::size_t i) const { return elements_.at(i); }

  std::optional<std::size_t> find(std::string_view element) const;
  /// Throws InputError for names outside the carrier.
  std::size_t index_of(std::string_view element) const;

  bool same_elements(const Carrier& other) const { return elements_ == other.elements_; }
  bool operator==(const Carrier&) const = default;

 private:
  std::string label_;
  std::vector<std::string> elements_;
};

/// Extensional relation: an explicit set of ordered pairs over a carrier,
/// stored as a dense row-major membership matrix.
class BinaryRelation {
 public:
  explicit BinaryRelation(Carrier carrier);

  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }

  bool contains(std::size_t a, std::size_t b) const { return bits_[a * size() + b] != 0; }
  bool contains(std::string_view a, std::string_view b) const;
  void add(std::size_t a, std::size_t b) { bits_[a * size() + b] = 1; }
  void add(std::string_view a, std::string_view b);
  void remove(std::size_t a, std::size_t b) { bits_[a * size() + b] = 0; }

  /// Pairs in canonical (row-major) order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  std::size_t pair_count() const;

  bool operator==(const BinaryRelation&) const = default;

 private:
  Carrier carrier_;
  std::vector<std::uint8_t> bits_;
};

struct OrderViolation {
  std::string axiom;    // "reflexivity" | "transitivity" | "antisymmetry"
  std::string witness;  // "a" or "((a, b), (b, c))"
  std::string detail;
  bool operator==(const OrderViolation&) const = default;
};

struct OrderReport {
  std::vector<OrderViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Reflexivity and transitivity, with the first witnesses in canonical order.
OrderReport validate_preorder(const BinaryRelation& r);
/// validate_preorder plus antisymmetry.
OrderReport validate_partial_order(const BinaryRelation& r);

/// A relation that has passed validate_preorder.
class Preorder {
 public:
  /// Throws InputError carrying the first violation.
  static Preorder from_relation(BinaryRelation r);
  static Preorder equality(const Carrier& carrier);

  const BinaryRelation& relation() const noexcept { return rel_; }
  const Carrier& carrier() const noexcept { return rel_.carrier(); }
  std::size_t size() const noexcept { return rel_.size(); }

  bool leq(std::size_t a, std::size_t b) const { return rel_.contains(a, b); }
  bool equivalent(std::size_t a, std::size_t b) const { return leq(a, b) && leq(b, a); }

  bool operator==(const Preorder&) const = default;

 private:
  explicit Preorder(BinaryRelation r) : rel_(std::move(r)) {}
  BinaryRelation rel_;
};

/// A partition of a carrier. Blocks are ordered by their first element and
/// each block is in carrier order.
class EquivalenceClasses {
 public:
  /// Throws InputError unless the blocks are non-empty, disjoint and cover
  /// the carrier.
  EquivalenceClasses(Carrier carrier, const std::vector<std::vector<std::string>>& blocks);

  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  std::size_t block_of(std::size_t element) const { return block_of_.at(element); }
  bool same_block(std::size_t a, std::size_t b) const { return block_of(a) == block_of(b); }

  /// Carrier whose elements are the blocks, each named by its first
  /// element. Quotient orders are relations over this carrier.
  Carrier block_carrier() const;

  bool operator==(const EquivalenceClasses&) const = default;

 private:
  EquivalenceClasses(Carrier carrier, std::vector<std::vector<std::size_t>> blocks);
  friend EquivalenceClasses induced_equivalence(const Preorder& p);

  Carrier carrier_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// a ≈ b iff a ≼ b and b ≼ a.
EquivalenceClasses induced_equivalence(const Preorder& p);

/// The preorder a ≼ b iff [a] ≤ [b]. `block_order` must be a partial order
/// over classes.block_carrier(); violations throw InputError.
Preorder preorder_from_quotient_order(const EquivalenceClasses& classes,
                                      const BinaryRelation& block_order);

BinaryRelation reverse(const BinaryRelation& r);
Preorder reverse(const Preorder& p);

BinaryRelation reflexive_transitive_closure(const BinaryRelation& r);
BinaryRelation total_relation(const Carrier& carrier);

}  // namespace ump

#endif  // UMP_ORDER_HPP_
