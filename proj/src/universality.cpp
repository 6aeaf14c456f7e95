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

#include "ump/universality.hpp"

#include <array>

#include "ump/error.hpp"

namespace ump {

// ---------------------------------------------------------------------------
// Predicate

Predicate::Predicate(Carrier carrier)
    : carrier_(std::move(carrier)), holds_(carrier_.size(), 0) {}

Predicate::Predicate(Carrier carrier, const std::vector<std::string>& holds)
    : Predicate(std::move(carrier)) {
  for (const auto& e : holds) set(carrier_.index_of(e));
}

std::vector<std::size_t> Predicate::members() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < size(); ++e) {
    if (holds_[e]) out.push_back(e);
  }
  return out;
}

std::string_view to_string(FailingClause clause) noexcept {
  switch (clause) {
    case FailingClause::none: return "none";
    case FailingClause::membership: return "membership";
    case FailingClause::uniqueness: return "uniqueness";
  }
  return "none";
}

namespace {

/// Shared decision skeleton.
///
///   universal(w) := eligible(w) ∧ ∀x [x ≠ w when exclude_self] clause(x, w)
///   holds        := universal(u) ∧ ∀v [universal(v) ⟹ identified(v, u)]
///
/// The uniqueness loop includes v = u so that identified() can reject the
/// candidate itself (needed by the unique-arrow form).
template <class Eligible, class Clause, class Identified>
UniversalityVerdict decide(const Carrier& carrier, std::size_t u, bool exclude_self,
                           Eligible eligible, Clause clause, Identified identified) {
  const std::size_t n = carrier.size();
  auto first_failure = [&](std::size_t w) -> std::optional<std::size_t> {
    for (std::size_t x = 0; x < n; ++x) {
      if (exclude_self && x == w) continue;
      if (!clause(x, w)) return x;
    }
    return std::nullopt;
  };
  auto universal = [&](std::size_t w) { return eligible(w) && !first_failure(w); };

  UniversalityVerdict verdict;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != u && universal(v)) verdict.rivals.push_back(carrier[v]);
  }

  if (!eligible(u)) {
    verdict.failing_clause = FailingClause::membership;
    verdict.counterexample = carrier[u];
    return verdict;
  }
  if (auto x = first_failure(u)) {
    verdict.failing_clause = FailingClause::membership;
    verdict.counterexample = carrier[*x];
    return verdict;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if ((v == u || universal(v)) && !identified(v, u)) {
      verdict.failing_clause = FailingClause::uniqueness;
      verdict.counterexample = carrier[v];
      return verdict;
    }
  }
  verdict.holds = true;
  return verdict;
}

constexpr auto always = [](std::size_t) { return true; };

void require_same_carrier(const Carrier& a, const Carrier& b, std::string_view what) {
  if (!a.same_elements(b)) {
    throw InputError(std::string(what) + ": carriers " + a.label() + " and " + b.label() +
                     " differ");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Relation-based definitions

UniversalityVerdict is_r_universal_strict(const BinaryRelation& r, std::string_view u,
                                          bool exclude_self) {
  const auto ui = r.carrier().index_of(u);
  return decide(
      r.carrier(), ui, exclude_self, always,
      [&](std::size_t x, std::size_t w) { return r.contains(x, w); },
      [](std::size_t v, std::size_t w) { return v == w; });
}

UniversalityVerdict is_r_universal_preorder(const BinaryRelation& r, const Preorder& p,
                                            std::string_view u, bool exclude_self) {
  require_same_carrier(r.carrier(), p.carrier(), "relation and preorder");
  const auto ui = r.carrier().index_of(u);
  return decide(
      r.carrier(), ui, exclude_self, always,
      [&](std::size_t x, std::size_t w) { return r.contains(x, w); },
      [&](std::size_t v, std::size_t w) { return p.equivalent(v, w); });
}

BinaryRelation ump_relation(const BinaryRelation& q, const Preorder& p, bool dual) {
  require_same_carrier(q.carrier(), p.carrier(), "relation and preorder");
  BinaryRelation r(q.carrier());
  const std::size_t n = q.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const bool ordered = dual ? p.leq(b, a) : p.leq(a, b);
      if (!q.contains(a, b) || ordered) r.add(a, b);
    }
  }
  return r;
}

UniversalityVerdict is_q_ump_universal(const BinaryRelation& q, const Preorder& p,
                                       std::string_view u, bool dual) {
  return is_r_universal_preorder(ump_relation(q, p, dual), p, u, false);
}

// ---------------------------------------------------------------------------
// Property-based definitions

BinaryRelation relation_from_property(const Predicate& pred, const PhiFormula& phi) {
  BinaryRelation r(pred.carrier());
  for (std::size_t a = 0; a < pred.size(); ++a) {
    for (std::size_t b = 0; b < pred.size(); ++b) {
      if (phi.evaluate(pred(a), pred(b))) r.add(a, b);
    }
  }
  return r;
}

UniversalityVerdict is_p_universal(const Predicate& pred, const PhiFormula& phi,
                                   const Preorder& p, std::string_view u,
                                   Consequent consequent) {
  require_same_carrier(pred.carrier(), p.carrier(), "predicate and preorder");
  const auto ui = pred.carrier().index_of(u);
  auto clause = [&](std::size_t x, std::size_t w) {
    const bool premise = phi.evaluate(pred(x), pred(w));
    switch (consequent) {
      case Consequent::none: return premise;
      case Consequent::below: return !premise || p.leq(x, w);
      case Consequent::above: return !premise || p.leq(w, x);
    }
    return premise;
  };
  return decide(
      pred.carrier(), ui, false, [&](std::size_t w) { return pred(w); }, clause,
      [&](std::size_t v, std::size_t w) { return p.equivalent(v, w); });
}

UniversalityVerdict is_p_universal_compact(const Predicate& pred, const Preorder& p,
                                           std::string_view u, bool dual) {
  require_same_carrier(pred.carrier(), p.carrier(), "predicate and preorder");
  const auto ui = pred.carrier().index_of(u);
  return decide(
      pred.carrier(), ui, false, [&](std::size_t w) { return pred(w); },
      [&](std::size_t x, std::size_t w) {
        return !pred(x) || (dual ? p.leq(w, x) : p.leq(x, w));
      },
      [](std::size_t, std::size_t) { return true; });
}

// ---------------------------------------------------------------------------
// Unique-arrow form

UniversalityVerdict is_unique_arrow_universal(const FiniteCategory& c, const BinaryRelation& r,
                                              std::string_view u) {
  const auto objects = Carrier::objects_of(c);
  require_same_carrier(r.carrier(), objects, "relation and category objects");
  const auto ui = r.carrier().index_of(u);
  auto obj = [](std::size_t i) { return ObjectRef{static_cast<std::uint32_t>(i)}; };
  return decide(
      r.carrier(), ui, false, always,
      [&](std::size_t x, std::size_t w) { return r.contains(x, w); },
      [&](std::size_t v, std::size_t w) { return c.hom(obj(v), obj(w)).size() == 1; });
}

std::pair<ArrowRef, ArrowRef> unique_isomorphism_witness(const FiniteCategory& c,
                                                         const BinaryRelation& r,
                                                         std::string_view u1,
                                                         std::string_view u2) {
  for (auto u : {u1, u2}) {
    if (!is_unique_arrow_universal(c, r, u).holds) {
      throw InputError("object " + std::string(u) + " is not unique-arrow universal");
    }
  }
  const auto x1 = c.object(u1);
  const auto x2 = c.object(u2);
  const auto forward = c.hom(x1, x2);
  const auto backward = c.hom(x2, x1);
  if (forward.size() != 1 || backward.size() != 1) {
    throw EngineError("universal objects " + std::string(u1) + " and " + std::string(u2) +
                      " are not connected by unique arrows");
  }
  const ArrowRef f = forward.front();
  const ArrowRef g = backward.front();
  const auto endo = c.hom(x1, x1);
  if (endo.size() != 1 || endo.front() != c.identity(x1)) {
    throw EngineError("the unique endomorphism of " + std::string(u1) + " is not its identity");
  }
  if (c.compose(f, g) != c.identity(x1) || c.compose(g, f) != c.identity(x2)) {
    throw EngineError("arrows " + c.arrow_name(f) + " and " + c.arrow_name(g) +
                      " are not mutually inverse");
  }
  return {f, g};
}

// ---------------------------------------------------------------------------
// Batch form

namespace {

constexpr std::array<std::pair<Definition, std::string_view>, 6> kDefinitionNames{{
    {Definition::strict, "strict"},
    {Definition::preorder, "preorder"},
    {Definition::ump, "ump"},
    {Definition::property, "property"},
    {Definition::compact, "compact"},
    {Definition::unique_arrow, "unique-arrow"},
}};

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

std::string_view to_string(Definition d) noexcept {
  for (auto [def, name] : kDefinitionNames) {
    if (def == d) return name;
  }
  return "strict";
}

std::optional<Definition> parse_definition(std::string_view name) noexcept {
  for (auto [def, text] : kDefinitionNames) {
    if (text == name) return def;
  }
  return std::nullopt;
}

Definition definition_of(const Query& q) noexcept {
  return std::visit(overloaded{
                        [](const StrictQuery&) { return Definition::strict; },
                        [](const PreorderQuery&) { return Definition::preorder; },
                        [](const UmpQuery&) { return Definition::ump; },
                        [](const PropertyQuery&) { return Definition::property; },
                        [](const CompactQuery&) { return Definition::compact; },
                        [](const UniqueArrowQuery&) { return Definition::unique_arrow; },
                    },
                    q);
}

const Carrier& carrier_of(const Query& q) noexcept {
  return std::visit(overloaded{
                        [](const StrictQuery& s) -> const Carrier& { return s.relation.carrier(); },
                        [](const PreorderQuery& s) -> const Carrier& { return s.relation.carrier(); },
                        [](const UmpQuery& s) -> const Carrier& { return s.q.carrier(); },
                        [](const PropertyQuery& s) -> const Carrier& { return s.predicate.carrier(); },
                        [](const CompactQuery& s) -> const Carrier& { return s.predicate.carrier(); },
                        [](const UniqueArrowQuery& s) -> const Carrier& { return s.relation.carrier(); },
                    },
                    q);
}

UniversalityVerdict check(const Query& q, std::string_view candidate) {
  return std::visit(
      overloaded{
          [&](const StrictQuery& s) {
            return is_r_universal_strict(s.relation, candidate, s.exclude_self);
          },
          [&](const PreorderQuery& s) {
            return is_r_universal_preorder(s.relation, s.preorder, candidate, s.exclude_self);
          },
          [&](const UmpQuery& s) { return is_q_ump_universal(s.q, s.preorder, candidate, s.dual); },
          [&](const PropertyQuery& s) {
            return is_p_universal(s.predicate, s.phi, s.preorder, candidate, s.consequent);
          },
          [&](const CompactQuery& s) {
            return is_p_universal_compact(s.predicate, s.preorder, candidate, s.dual);
          },
          [&](const UniqueArrowQuery& s) {
            return is_unique_arrow_universal(s.category, s.relation, candidate);
          },
      },
      q);
}

std::vector<std::string> find_universal(const Query& q) {
  std::vector<std::string> out;
  for (const auto& e : carrier_of(q).elements()) {
    if (check(q, e).holds) out.push_back(e);
  }
  return out;
}

}  // namespace ump
