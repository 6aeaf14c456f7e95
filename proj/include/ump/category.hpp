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

#ifndef UMP_CATEGORY_HPP_
#define UMP_CATEGORY_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ump {

struct ObjectRef {
  std::uint32_t index = 0;
  auto operator<=>(const ObjectRef&) const = default;
};

struct ArrowRef {
  std::uint32_t index = 0;
  auto operator<=>(const ArrowRef&) const = default;
};

struct Arrow {
  std::string name;
  ObjectRef dom;
  ObjectRef cod;
  bool operator==(const Arrow&) const = default;
};

/// Size caps. Every algorithm in the library is exhaustive, so the caps
/// bound running time; they can be raised explicitly.
struct Limits {
  std::size_t max_objects = 64;
  std::size_t max_arrows = 4096;
};

/// Explicit composition entries, keyed by (first, then). Entries where
/// either operand is an identity are implied and never stored.
using CompositionTable = std::map<std::pair<ArrowRef, ArrowRef>, ArrowRef>;

/// A finite category with an explicit composition table.
///
/// Objects and arrows are kept in lexicographic name order, so ObjectRef and
/// ArrowRef indices double as the canonical enumeration order. Identities are
/// generated as `id_<object>`.
///
/// Construction through CategoryBuilder only checks that names resolve and
/// that composed pairs are composable; the category axioms are checked by
/// validate_category, so invalid categories are representable (the
/// validator needs them).
class FiniteCategory {
 public:
  const std::string& name() const noexcept { return name_; }

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  std::span<const std::string> objects() const noexcept { return objects_; }
  std::span<const Arrow> arrows() const noexcept { return arrows_; }

  const std::string& object_name(ObjectRef x) const { return objects_.at(x.index); }
  const Arrow& arrow(ArrowRef f) const { return arrows_.at(f.index); }
  const std::string& arrow_name(ArrowRef f) const { return arrow(f).name; }
  ObjectRef dom(ArrowRef f) const { return arrow(f).dom; }
  ObjectRef cod(ArrowRef f) const { return arrow(f).cod; }

  /// Name lookups; the non-find forms throw InputError for unknown names.
  std::optional<ObjectRef> find_object(std::string_view name) const;
  std::optional<ArrowRef> find_arrow(std::string_view name) const;
  ObjectRef object(std::string_view name) const;
  ArrowRef arrow_ref(std::string_view name) const;

  ArrowRef identity(ObjectRef x) const { return identities_.at(x.index); }
  bool is_identity(ArrowRef f) const;

  std::span<const ArrowRef> hom(ObjectRef x, ObjectRef y) const;
  std::span<const ArrowRef> outgoing(ObjectRef x) const { return outgoing_.at(x.index); }

  /// `then` after `first`, i.e. then ∘ first. Empty when the pair is not
  /// composable or the table has no entry for it.
  std::optional<ArrowRef> compose(ArrowRef first, ArrowRef then) const;

  const CompositionTable& table() const noexcept { return table_; }

  /// Copy with one explicit table entry replaced (or added). Used to build
  /// deliberately broken categories.
  FiniteCategory with_composite(ArrowRef first, ArrowRef then, ArrowRef result) const;

  bool operator==(const FiniteCategory& other) const;

 private:
  friend class CategoryBuilder;
  friend FiniteCategory opposite_category(const FiniteCategory& c);

  void index();

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<ArrowRef> identities_;
  CompositionTable table_;

  std::unordered_map<std::string, ObjectRef> object_index_;
  std::unordered_map<std::string, ArrowRef> arrow_index_;
  std::vector<std::vector<ArrowRef>> hom_;  // object_count^2 cells
  std::vector<std::vector<ArrowRef>> outgoing_;
};

/// Incremental, name-based construction. Every call checks its own
/// arguments and throws InputError immediately, so a caller can attribute
/// the error to the record that caused it.
class CategoryBuilder {
 public:
  explicit CategoryBuilder(std::string name, Limits limits = {});

  CategoryBuilder& object(const std::string& name);
  CategoryBuilder& arrow(const std::string& name, const std::string& dom, const std::string& cod);
  /// result = then . first
  CategoryBuilder& compose(const std::string& result, const std::string& then,
                           const std::string& first);

  bool has_object(const std::string& name) const;
  FiniteCategory build() const;

 private:
  struct PendingArrow {
    std::string dom;
    std::string cod;
  };
  const PendingArrow& resolve_arrow(const std::string& name) const;

  std::string name_;
  Limits limits_;
  std::vector<std::string> objects_;
  std::map<std::string, PendingArrow> arrows_;  // includes identities
  std::map<std::pair<std::string, std::string>, std::string> table_;
};

struct Violation {
  std::string axiom;    // "identity" | "typing" | "totality" | "associativity"
  std::string witness;  // arrow names, e.g. "(a_1_2, a_2_4)"
  std::string detail;
  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks identity laws, typing and totality of the table, and
/// associativity. Violations are listed axiom by axiom, each group in
/// lexicographic witness order.
ValidationReport validate_category(const FiniteCategory& c);

/// Arrows reversed; compose'(f, g) = compose(g, f). Names are unchanged.
FiniteCategory opposite_category(const FiniteCategory& c);

/// The two-sided inverse of `f`, when one exists.
std::optional<ArrowRef> is_isomorphism(const FiniteCategory& c, ArrowRef f);

}  // namespace ump

#endif  // UMP_CATEGORY_HPP_
