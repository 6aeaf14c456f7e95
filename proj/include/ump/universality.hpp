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

#ifndef UMP_UNIVERSALITY_HPP_
#define UMP_UNIVERSALITY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ump/category.hpp"
#include "ump/order.hpp"
#include "ump/phi.hpp"

namespace ump {

/// Extensional predicate: the subset of a carrier on which it holds.
class Predicate {
 public:
  explicit Predicate(Carrier carrier);
  Predicate(Carrier carrier, const std::vector<std::string>& holds);

  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  bool operator()(std::size_t e) const { return holds_.at(e) != 0; }
  void set(std::size_t e, bool value = true) { holds_.at(e) = value ? 1 : 0; }
  std::vector<std::size_t> members() const;

  bool operator==(const Predicate&) const = default;

 private:
  Carrier carrier_;
  std::vector<std::uint8_t> holds_;
};

enum class FailingClause { none, membership, uniqueness };

std::string_view to_string(FailingClause clause) noexcept;

/// Outcome of one universality check.
///
/// `membership` means the candidate itself fails the universal clause (the
/// counterexample is the x, or the candidate when P(u) is false);
/// `uniqueness` means some other element v satisfies the clause without
/// being identified with the candidate (the counterexample is that v).
/// `rivals` lists every v other than the candidate that satisfies the
/// universal clause, whatever the verdict.
struct UniversalityVerdict {
  bool holds = false;
  FailingClause failing_clause = FailingClause::none;
  std::optional<std::string> counterexample;
  std::vector<std::string> rivals;

  bool operator==(const UniversalityVerdict&) const = default;
};

/// u satisfies ∀x R(x, u) and is the only element that does.
///
/// With exclude_self, both quantifiers skip x equal to the element under
/// test, which is what makes u = 1 universal for R = ">" on the naturals.
UniversalityVerdict is_r_universal_strict(const BinaryRelation& r, std::string_view u,
                                          bool exclude_self = false);

/// As is_r_universal_strict, with uniqueness weakened to v ≈ u.
UniversalityVerdict is_r_universal_preorder(const BinaryRelation& r, const Preorder& p,
                                            std::string_view u, bool exclude_self = false);

/// R(a, b) := Q(a, b) ⟹ a ≼ b (a ≽ b when dual), checked against p.
BinaryRelation ump_relation(const BinaryRelation& q, const Preorder& p, bool dual);
UniversalityVerdict is_q_ump_universal(const BinaryRelation& q, const Preorder& p,
                                       std::string_view u, bool dual = false);

/// R(a, b) := φ(P(a), P(b)).
BinaryRelation relation_from_property(const Predicate& pred, const PhiFormula& phi);

/// Optional order consequent attached to φ in the property-based check:
/// none gives φ(P(x), P(w)); below gives φ(P(x), P(w)) ⟹ x ≼ w; above
/// gives φ(P(x), P(w)) ⟹ x ≽ w.
enum class Consequent { none, below, above };

/// P(u) ∧ ∀x C(x, u) ∧ ∀v [P(v) ∧ ∀x C(x, v) ⟹ v ≈ u], with C built from
/// φ and the consequent. The uniqueness quantifier ranges over P(v) only.
UniversalityVerdict is_p_universal(const Predicate& pred, const PhiFormula& phi,
                                   const Preorder& p, std::string_view u,
                                   Consequent consequent = Consequent::none);

/// P(u) ∧ ∀x [P(x) ⟹ x ≼ u] (x ≽ u when dual): u is a greatest (least)
/// feasible element.
UniversalityVerdict is_p_universal_compact(const Predicate& pred, const Preorder& p,
                                           std::string_view u, bool dual = false);

/// ∀x R(x, u) and every v with ∀x R(x, v) has exactly one arrow v → u.
UniversalityVerdict is_unique_arrow_universal(const FiniteCategory& c, const BinaryRelation& r,
                                              std::string_view u);

/// The arrows f : u1 → u2 and g : u2 → u1 for two unique-arrow universal
/// objects, after checking that they are mutually inverse and that the only
/// endomorphism of u1 is its identity. Throws InputError when either object
/// is not universal and EngineError if a verification fails.
std::pair<ArrowRef, ArrowRef> unique_isomorphism_witness(const FiniteCategory& c,
                                                         const BinaryRelation& r,
                                                         std::string_view u1,
                                                         std::string_view u2);

// ---------------------------------------------------------------------------
// Batch form

enum class Definition { strict, preorder, ump, property, compact, unique_arrow };

std::string_view to_string(Definition d) noexcept;
std::optional<Definition> parse_definition(std::string_view name) noexcept;

struct StrictQuery {
  BinaryRelation relation;
  bool exclude_self = false;
};
struct PreorderQuery {
  BinaryRelation relation;
  Preorder preorder;
  bool exclude_self = false;
};
struct UmpQuery {
  BinaryRelation q;
  Preorder preorder;
  bool dual = false;
};
struct PropertyQuery {
  Predicate predicate;
  PhiFormula phi;
  Preorder preorder;
  Consequent consequent = Consequent::none;
};
struct CompactQuery {
  Predicate predicate;
  Preorder preorder;
  bool dual = false;
};
struct UniqueArrowQuery {
  FiniteCategory category;
  BinaryRelation relation;
};

using Query = std::variant<StrictQuery, PreorderQuery, UmpQuery, PropertyQuery, CompactQuery,
                           UniqueArrowQuery>;

Definition definition_of(const Query& q) noexcept;
const Carrier& carrier_of(const Query& q) noexcept;
UniversalityVerdict check(const Query& q, std::string_view candidate);

/// Every element whose verdict holds, in carrier order.
std::vector<std::string> find_universal(const Query& q);

}  // namespace ump

#endif  // UMP_UNIVERSALITY_HPP_
