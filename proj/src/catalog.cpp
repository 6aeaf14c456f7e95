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

#include "ump/catalog.hpp"

#include "ump/error.hpp"

namespace ump {

namespace {

ObjectRef object_at(std::size_t i) { return ObjectRef{static_cast<std::uint32_t>(i)}; }

void require_cone(const FiniteCategory& c, const Cone& k) {
  if (c.dom(k.leg_a) != k.apex || c.dom(k.leg_b) != k.apex || c.cod(k.leg_a) != k.factor_a ||
      c.cod(k.leg_b) != k.factor_b) {
    throw InputError("malformed cone " + describe(c, k));
  }
}

void require_cocone(const FiniteCategory& c, const Cone& k) {
  if (c.cod(k.leg_a) != k.apex || c.cod(k.leg_b) != k.apex || c.dom(k.leg_a) != k.factor_a ||
      c.dom(k.leg_b) != k.factor_b) {
    throw InputError("malformed cocone " + describe(c, k));
  }
}

template <class Mediators>
UmpVerdict certify(const Cone& candidate, const std::vector<Cone>& cones, Mediators mediators) {
  UmpVerdict verdict{candidate, {}, std::nullopt};
  for (const auto& k : cones) {
    const auto ms = mediators(k);
    if (ms.size() != 1) {
      verdict.mediators.clear();
      verdict.failure = UmpFailure{k, ms.size()};
      return verdict;
    }
    verdict.mediators.emplace_back(k, ms.front());
  }
  return verdict;
}

}  // namespace

Cone make_cone(const FiniteCategory& c, ArrowRef leg_a, ArrowRef leg_b) {
  if (c.dom(leg_a) != c.dom(leg_b)) {
    throw InputError("legs " + c.arrow_name(leg_a) + " and " + c.arrow_name(leg_b) +
                     " do not share a domain");
  }
  return Cone{c.dom(leg_a), leg_a, leg_b, c.cod(leg_a), c.cod(leg_b)};
}

Cone make_cocone(const FiniteCategory& c, ArrowRef leg_a, ArrowRef leg_b) {
  if (c.cod(leg_a) != c.cod(leg_b)) {
    throw InputError("legs " + c.arrow_name(leg_a) + " and " + c.arrow_name(leg_b) +
                     " do not share a codomain");
  }
  return Cone{c.cod(leg_a), leg_a, leg_b, c.dom(leg_a), c.dom(leg_b)};
}

std::string describe(const FiniteCategory& c, const Cone& k) {
  return c.object_name(k.apex) + "(" + c.arrow_name(k.leg_a) + "," + c.arrow_name(k.leg_b) + ")";
}

std::vector<Cone> enumerate_cones(const FiniteCategory& c, ObjectRef a, ObjectRef b) {
  std::vector<Cone> out;
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    const auto apex = object_at(i);
    for (ArrowRef f : c.hom(apex, a)) {
      for (ArrowRef g : c.hom(apex, b)) out.push_back(Cone{apex, f, g, a, b});
    }
  }
  return out;
}

std::vector<Cone> enumerate_cocones(const FiniteCategory& c, ObjectRef a, ObjectRef b) {
  std::vector<Cone> out;
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    const auto apex = object_at(i);
    for (ArrowRef f : c.hom(a, apex)) {
      for (ArrowRef g : c.hom(b, apex)) out.push_back(Cone{apex, f, g, a, b});
    }
  }
  return out;
}

std::vector<ArrowRef> mediating_arrows(const FiniteCategory& c, const Cone& from, const Cone& to) {
  if (from.factor_a != to.factor_a || from.factor_b != to.factor_b) {
    throw InputError("cones " + describe(c, from) + " and " + describe(c, to) +
                     " have different factors");
  }
  std::vector<ArrowRef> out;
  for (ArrowRef m : c.hom(from.apex, to.apex)) {
    if (c.compose(m, to.leg_a) == from.leg_a && c.compose(m, to.leg_b) == from.leg_b) {
      out.push_back(m);
    }
  }
  return out;
}

std::vector<ArrowRef> comediating_arrows(const FiniteCategory& c, const Cone& from,
                                         const Cone& to) {
  if (from.factor_a != to.factor_a || from.factor_b != to.factor_b) {
    throw InputError("cocones " + describe(c, from) + " and " + describe(c, to) +
                     " have different factors");
  }
  std::vector<ArrowRef> out;
  for (ArrowRef m : c.hom(from.apex, to.apex)) {
    if (c.compose(from.leg_a, m) == to.leg_a && c.compose(from.leg_b, m) == to.leg_b) {
      out.push_back(m);
    }
  }
  return out;
}

UmpVerdict check_product(const FiniteCategory& c, const Cone& candidate) {
  require_cone(c, candidate);
  return certify(candidate, enumerate_cones(c, candidate.factor_a, candidate.factor_b),
                 [&](const Cone& k) { return mediating_arrows(c, k, candidate); });
}

UmpVerdict check_coproduct(const FiniteCategory& c, const Cone& candidate) {
  require_cocone(c, candidate);
  return certify(candidate, enumerate_cocones(c, candidate.factor_a, candidate.factor_b),
                 [&](const Cone& k) { return comediating_arrows(c, candidate, k); });
}

namespace {

template <class Hom>
ObjectVerdict every_hom_singleton(const FiniteCategory& c, Hom hom) {
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    const auto count = hom(object_at(i)).size();
    if (count != 1) return ObjectVerdict{false, object_at(i), count};
  }
  return ObjectVerdict{true, std::nullopt, 0};
}

}  // namespace

ObjectVerdict is_terminal(const FiniteCategory& c, ObjectRef x) {
  return every_hom_singleton(c, [&](ObjectRef y) { return c.hom(y, x); });
}

ObjectVerdict is_initial(const FiniteCategory& c, ObjectRef x) {
  return every_hom_singleton(c, [&](ObjectRef y) { return c.hom(x, y); });
}

std::pair<ArrowRef, ArrowRef> product_uniqueness_certificate(const FiniteCategory& c,
                                                             const Cone& p1, const Cone& p2) {
  if (p1.factor_a != p2.factor_a || p1.factor_b != p2.factor_b) {
    throw InputError("products " + describe(c, p1) + " and " + describe(c, p2) +
                     " are over different factors");
  }
  for (const auto* p : {&p1, &p2}) {
    if (!check_product(c, *p).holds()) {
      throw InputError("cone " + describe(c, *p) + " is not a product");
    }
  }
  const auto forward = mediating_arrows(c, p1, p2);
  const auto backward = mediating_arrows(c, p2, p1);
  if (forward.size() != 1 || backward.size() != 1) {
    throw EngineError("certified products " + describe(c, p1) + " and " + describe(c, p2) +
                      " lack unique mediators");
  }
  const ArrowRef u1 = forward.front();
  const ArrowRef u2 = backward.front();
  if (c.compose(u1, u2) != c.identity(p1.apex)) {
    throw EngineError(c.arrow_name(u2) + " . " + c.arrow_name(u1) + " is not the identity on " +
                      c.object_name(p1.apex));
  }
  if (c.compose(u2, u1) != c.identity(p2.apex)) {
    throw EngineError(c.arrow_name(u1) + " . " + c.arrow_name(u2) + " is not the identity on " +
                      c.object_name(p2.apex));
  }
  return {u1, u2};
}

}  // namespace ump
