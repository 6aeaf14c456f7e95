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

#include "ump/order.hpp"

#include <algorithm>

#include "ump/error.hpp"

namespace ump {

namespace {

std::string pair_text(const Carrier& c, std::size_t a, std::size_t b) {
  return "(" + c[a] + ", " + c[b] + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Carrier

Carrier::Carrier(std::string label, std::vector<std::string> elements)
    : label_(std::move(label)), elements_(std::move(elements)) {
  if (elements_.empty()) throw InputError("carrier " + label_ + " is empty");
  for (const auto& e : elements_) require_identifier(e, "element");
  std::sort(elements_.begin(), elements_.end());
  auto dup = std::adjacent_find(elements_.begin(), elements_.end());
  if (dup != elements_.end()) {
    throw InputError("duplicate element " + *dup + " in carrier " + label_);
  }
}

Carrier Carrier::objects_of(const FiniteCategory& c) {
  return Carrier("objects-of " + c.name(),
                 std::vector<std::string>(c.objects().begin(), c.objects().end()));
}

std::optional<std::size_t> Carrier::find(std::string_view element) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), element);
  if (it == elements_.end() || *it != element) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t Carrier::index_of(std::string_view element) const {
  if (auto i = find(element)) return *i;
  throw InputError("unknown element " + std::string(element) + " of carrier " + label_);
}

// ---------------------------------------------------------------------------
// BinaryRelation

BinaryRelation::BinaryRelation(Carrier carrier)
    : carrier_(std::move(carrier)), bits_(carrier_.size() * carrier_.size(), 0) {}

bool BinaryRelation::contains(std::string_view a, std::string_view b) const {
  return contains(carrier_.index_of(a), carrier_.index_of(b));
}

void BinaryRelation::add(std::string_view a, std::string_view b) {
  add(carrier_.index_of(a), carrier_.index_of(b));
}

std::vector<std::pair<std::size_t, std::size_t>> BinaryRelation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (contains(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::size_t BinaryRelation::pair_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

// ---------------------------------------------------------------------------
// Axiom checks

OrderReport validate_preorder(const BinaryRelation& r) {
  OrderReport report;
  const auto& c = r.carrier();
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!r.contains(a, a)) {
      report.violations.push_back(
          {"reflexivity", c[a], "missing " + pair_text(c, a, a)});
      break;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!r.contains(a, b)) continue;
      for (std::size_t x = 0; x < n; ++x) {
        if (r.contains(b, x) && !r.contains(a, x)) {
          report.violations.push_back(
              {"transitivity", "(" + pair_text(c, a, b) + ", " + pair_text(c, b, x) + ")",
               "missing " + pair_text(c, a, x)});
          return report;
        }
      }
    }
  }
  return report;
}

OrderReport validate_partial_order(const BinaryRelation& r) {
  OrderReport report = validate_preorder(r);
  const auto& c = r.carrier();
  for (std::size_t a = 0; a < r.size(); ++a) {
    for (std::size_t b = a + 1; b < r.size(); ++b) {
      if (r.contains(a, b) && r.contains(b, a)) {
        report.violations.push_back(
            {"antisymmetry", pair_text(c, a, b), c[a] + " and " + c[b] + " are distinct but mutually related"});
        return report;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Preorder

Preorder Preorder::from_relation(BinaryRelation r) {
  const auto report = validate_preorder(r);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw InputError("relation on " + r.carrier().label() + " is not a preorder: " + v.axiom +
                     " fails at " + v.witness + " (" + v.detail + ")");
  }
  return Preorder(std::move(r));
}

Preorder Preorder::equality(const Carrier& carrier) {
  BinaryRelation r(carrier);
  for (std::size_t a = 0; a < carrier.size(); ++a) r.add(a, a);
  return Preorder(std::move(r));
}

// ---------------------------------------------------------------------------
// Equivalence classes

EquivalenceClasses::EquivalenceClasses(Carrier carrier,
                                       std::vector<std::vector<std::size_t>> blocks)
    : carrier_(std::move(carrier)), blocks_(std::move(blocks)) {
  for (auto& block : blocks_) std::sort(block.begin(), block.end());
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  block_of_.assign(carrier_.size(), 0);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (auto e : blocks_[i]) block_of_[e] = i;
  }
}

EquivalenceClasses::EquivalenceClasses(Carrier carrier,
                                       const std::vector<std::vector<std::string>>& blocks)
    : carrier_(std::move(carrier)) {
  std::vector<int> seen(carrier_.size(), 0);
  std::vector<std::vector<std::size_t>> indexed;
  for (const auto& block : blocks) {
    if (block.empty()) throw InputError("empty block in partition of " + carrier_.label());
    auto& out = indexed.emplace_back();
    for (const auto& name : block) {
      const auto i = carrier_.index_of(name);
      if (seen[i]++) throw InputError("element " + name + " appears in two blocks");
      out.push_back(i);
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw InputError("element " + carrier_[i] + " is in no block");
  }
  *this = EquivalenceClasses(carrier_, std::move(indexed));
}

Carrier EquivalenceClasses::block_carrier() const {
  std::vector<std::string> names;
  names.reserve(blocks_.size());
  for (const auto& block : blocks_) names.push_back(carrier_[block.front()]);
  return Carrier("blocks of " + carrier_.label(), std::move(names));
}

EquivalenceClasses induced_equivalence(const Preorder& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<bool> assigned(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (assigned[a]) continue;
    auto& block = blocks.emplace_back();
    for (std::size_t b = a; b < n; ++b) {
      if (!assigned[b] && p.equivalent(a, b)) {
        block.push_back(b);
        assigned[b] = true;
      }
    }
  }
  EquivalenceClasses classes(p.carrier(), std::move(blocks));

  // The partition must be exactly the mutual-≼ relation.
  for (std::size_t a = 0; a < n; ++a) {
    if (!p.equivalent(a, a)) throw EngineError("induced equivalence is not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (p.equivalent(a, b) != p.equivalent(b, a)) {
        throw EngineError("induced equivalence is not symmetric");
      }
      if (p.equivalent(a, b) != classes.same_block(a, b)) {
        throw EngineError("induced equivalence is not transitive");
      }
    }
  }
  return classes;
}

Preorder preorder_from_quotient_order(const EquivalenceClasses& classes,
                                      const BinaryRelation& block_order) {
  if (!block_order.carrier().same_elements(classes.block_carrier())) {
    throw InputError("quotient order is not a relation over the blocks of " +
                     classes.carrier().label());
  }
  const auto report = validate_partial_order(block_order);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw InputError("quotient order is not a partial order: " + v.axiom + " fails at " +
                     v.witness + " (" + v.detail + ")");
  }
  const std::size_t n = classes.carrier().size();
  BinaryRelation rel(classes.carrier());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (block_order.contains(classes.block_of(a), classes.block_of(b))) rel.add(a, b);
    }
  }
  auto p = Preorder::from_relation(std::move(rel));
  if (!(induced_equivalence(p) == classes)) {
    throw EngineError("quotient preorder does not induce the given classes");
  }
  return p;
}

// ---------------------------------------------------------------------------
// Constructions

BinaryRelation reverse(const BinaryRelation& r) {
  BinaryRelation out(r.carrier());
  for (auto [a, b] : r.pairs()) out.add(b, a);
  return out;
}

Preorder reverse(const Preorder& p) { return Preorder::from_relation(reverse(p.relation())); }

BinaryRelation reflexive_transitive_closure(const BinaryRelation& r) {
  BinaryRelation out = r;
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a) out.add(a, a);
  // Warshall
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!out.contains(a, k)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (out.contains(k, b)) out.add(a, b);
      }
    }
  }
  return out;
}

BinaryRelation total_relation(const Carrier& carrier) {
  BinaryRelation out(carrier);
  for (std::size_t a = 0; a < carrier.size(); ++a) {
    for (std::size_t b = 0; b < carrier.size(); ++b) out.add(a, b);
  }
  return out;
}

}  // namespace ump
