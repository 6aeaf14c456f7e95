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

#ifndef UMP_CATALOG_HPP_
#define UMP_CATALOG_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ump/category.hpp"

namespace ump {

/// An apex with one leg per factor. For products the legs run apex → A and
/// apex → B; for coproducts (cocones) they run A → apex and B → apex.
struct Cone {
  ObjectRef apex;
  ArrowRef leg_a;
  ArrowRef leg_b;
  ObjectRef factor_a;
  ObjectRef factor_b;

  auto operator<=>(const Cone&) const = default;
};

/// Throws InputError when the legs do not share a domain.
Cone make_cone(const FiniteCategory& c, ArrowRef leg_a, ArrowRef leg_b);
/// Throws InputError when the legs do not share a codomain.
Cone make_cocone(const FiniteCategory& c, ArrowRef leg_a, ArrowRef leg_b);

/// "apex(leg_a, leg_b)"
std::string describe(const FiniteCategory& c, const Cone& k);

/// All cones over (a, b), ordered by (apex, leg_a, leg_b).
std::vector<Cone> enumerate_cones(const FiniteCategory& c, ObjectRef a, ObjectRef b);
std::vector<Cone> enumerate_cocones(const FiniteCategory& c, ObjectRef a, ObjectRef b);

/// Arrows m : from.apex → to.apex with to.leg_a ∘ m = from.leg_a and
/// to.leg_b ∘ m = from.leg_b.
std::vector<ArrowRef> mediating_arrows(const FiniteCategory& c, const Cone& from, const Cone& to);
/// Arrows m : from.apex → to.apex with m ∘ from.leg_a = to.leg_a and
/// m ∘ from.leg_b = to.leg_b.
std::vector<ArrowRef> comediating_arrows(const FiniteCategory& c, const Cone& from,
                                         const Cone& to);

struct UmpFailure {
  Cone offending;
  std::size_t mediator_count = 0;
  bool operator==(const UmpFailure&) const = default;
};

/// Either a certificate (every cone over the factors paired with its unique
/// mediator, the candidate included) or the first cone that has zero or
/// several mediators.
struct UmpVerdict {
  Cone candidate;
  std::vector<std::pair<Cone, ArrowRef>> mediators;
  std::optional<UmpFailure> failure;

  bool holds() const noexcept { return !failure.has_value(); }
  bool operator==(const UmpVerdict&) const = default;
};

UmpVerdict check_product(const FiniteCategory& c, const Cone& candidate);

/// Checked directly on cocones of c; agrees with check_product on
/// opposite_category(c), where a cocone of c is a cone.
UmpVerdict check_coproduct(const FiniteCategory& c, const Cone& candidate);

struct ObjectVerdict {
  bool holds = false;
  std::optional<ObjectRef> witness;  // first object with |hom| != 1
  std::size_t arrow_count = 0;       // |hom| at the witness
  bool operator==(const ObjectVerdict&) const = default;
};

ObjectVerdict is_terminal(const FiniteCategory& c, ObjectRef x);
ObjectVerdict is_initial(const FiniteCategory& c, ObjectRef x);

/// For two certified products over the same factors: the unique mediators
/// u1 : p1 → p2 and u2 : p2 → p1, after checking u2 ∘ u1 = id and
/// u1 ∘ u2 = id. Throws InputError if a precondition fails, EngineError if a
/// verification does.
std::pair<ArrowRef, ArrowRef> product_uniqueness_certificate(const FiniteCategory& c,
                                                             const Cone& p1, const Cone& p2);

}  // namespace ump

#endif  // UMP_CATALOG_HPP_
