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

#include "ump/category.hpp"

#include <algorithm>

#include "ump/error.hpp"

namespace ump {

namespace {

constexpr std::string_view kIdentityPrefix = "id_";

std::string identity_name(const std::string& object) {
  return std::string(kIdentityPrefix) + object;
}

std::string witness(std::initializer_list<std::string_view> names) {
  std::string out = "(";
  bool first = true;
  for (auto n : names) {
    if (!first) out += ", ";
    out += n;
    first = false;
  }
  return out + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteCategory

std::optional<ObjectRef> FiniteCategory::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowRef> FiniteCategory::find_arrow(std::string_view name) const {
  auto it = arrow_index_.find(std::string(name));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

ObjectRef FiniteCategory::object(std::string_view name) const {
  if (auto x = find_object(name)) return *x;
  throw InputError("unknown object " + std::string(name) + " in category " + name_);
}

ArrowRef FiniteCategory::arrow_ref(std::string_view name) const {
  if (auto f = find_arrow(name)) return *f;
  throw InputError("unknown arrow " + std::string(name) + " in category " + name_);
}

bool FiniteCategory::is_identity(ArrowRef f) const {
  return identities_.at(dom(f).index) == f;
}

std::span<const ArrowRef> FiniteCategory::hom(ObjectRef x, ObjectRef y) const {
  return hom_.at(static_cast<std::size_t>(x.index) * objects_.size() + y.index);
}

std::optional<ArrowRef> FiniteCategory::compose(ArrowRef first, ArrowRef then) const {
  if (cod(first) != dom(then)) return std::nullopt;
  if (is_identity(first)) return then;
  if (is_identity(then)) return first;
  auto it = table_.find({first, then});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

FiniteCategory FiniteCategory::with_composite(ArrowRef first, ArrowRef then,
                                              ArrowRef result) const {
  FiniteCategory out = *this;
  out.table_[{first, then}] = result;
  return out;
}

bool FiniteCategory::operator==(const FiniteCategory& other) const {
  return name_ == other.name_ && objects_ == other.objects_ && arrows_ == other.arrows_ &&
         table_ == other.table_;
}

void FiniteCategory::index() {
  const std::size_t n = objects_.size();
  object_index_.clear();
  arrow_index_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    object_index_.emplace(objects_[i], ObjectRef{static_cast<std::uint32_t>(i)});
  }
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    arrow_index_.emplace(arrows_[i].name, ArrowRef{static_cast<std::uint32_t>(i)});
  }
  identities_.assign(n, ArrowRef{});
  hom_.assign(n * n, {});
  outgoing_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    identities_[i] = arrow_index_.at(identity_name(objects_[i]));
  }
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const ArrowRef f{static_cast<std::uint32_t>(i)};
    const auto& a = arrows_[i];
    hom_[static_cast<std::size_t>(a.dom.index) * n + a.cod.index].push_back(f);
    outgoing_[a.dom.index].push_back(f);
  }
}

// ---------------------------------------------------------------------------
// CategoryBuilder

CategoryBuilder::CategoryBuilder(std::string name, Limits limits)
    : name_(std::move(name)), limits_(limits) {
  require_identifier(name_, "category");
}

bool CategoryBuilder::has_object(const std::string& name) const {
  return std::find(objects_.begin(), objects_.end(), name) != objects_.end();
}

CategoryBuilder& CategoryBuilder::object(const std::string& name) {
  require_identifier(name, "object");
  if (has_object(name)) throw InputError("duplicate object " + name);
  if (objects_.size() >= limits_.max_objects) {
    throw InputError("category " + name_ + " exceeds the object limit of " +
                     std::to_string(limits_.max_objects));
  }
  if (arrows_.size() >= limits_.max_arrows) {
    throw InputError("category " + name_ + " exceeds the arrow limit of " +
                     std::to_string(limits_.max_arrows));
  }
  objects_.push_back(name);
  arrows_.emplace(identity_name(name), PendingArrow{name, name});
  return *this;
}

CategoryBuilder& CategoryBuilder::arrow(const std::string& name, const std::string& dom,
                                        const std::string& cod) {
  require_identifier(name, "arrow");
  if (name.starts_with(kIdentityPrefix)) {
    throw InputError("arrow name " + name + " uses the reserved identity prefix id_");
  }
  if (arrows_.contains(name)) throw InputError("duplicate arrow " + name);
  if (!has_object(dom)) throw InputError("unknown object " + dom);
  if (!has_object(cod)) throw InputError("unknown object " + cod);
  if (arrows_.size() >= limits_.max_arrows) {
    throw InputError("category " + name_ + " exceeds the arrow limit of " +
                     std::to_string(limits_.max_arrows));
  }
  arrows_.emplace(name, PendingArrow{dom, cod});
  return *this;
}

const CategoryBuilder::PendingArrow& CategoryBuilder::resolve_arrow(
    const std::string& name) const {
  auto it = arrows_.find(name);
  if (it == arrows_.end()) throw InputError("unknown arrow " + name);
  return it->second;
}

CategoryBuilder& CategoryBuilder::compose(const std::string& result, const std::string& then,
                                          const std::string& first) {
  const auto& f = resolve_arrow(first);
  const auto& g = resolve_arrow(then);
  resolve_arrow(result);
  if (first.starts_with(kIdentityPrefix) || then.starts_with(kIdentityPrefix)) {
    throw InputError("composites with an identity operand are implied and must not be written");
  }
  if (f.cod != g.dom) {
    throw InputError("arrows " + then + " and " + first + " are not composable (cod(" + first +
                     ") = " + f.cod + ", dom(" + then + ") = " + g.dom + ")");
  }
  if (!table_.emplace(std::pair{first, then}, result).second) {
    throw InputError("duplicate composition entry for " + then + " . " + first);
  }
  return *this;
}

FiniteCategory CategoryBuilder::build() const {
  FiniteCategory c;
  c.name_ = name_;
  c.objects_ = objects_;
  std::sort(c.objects_.begin(), c.objects_.end());
  auto object_ref = [&](const std::string& name) {
    auto it = std::lower_bound(c.objects_.begin(), c.objects_.end(), name);
    return ObjectRef{static_cast<std::uint32_t>(it - c.objects_.begin())};
  };
  std::map<std::string, ArrowRef> arrow_refs;
  for (const auto& [name, pending] : arrows_) {  // std::map: already name-ordered
    arrow_refs.emplace(name, ArrowRef{static_cast<std::uint32_t>(c.arrows_.size())});
    c.arrows_.push_back(Arrow{name, object_ref(pending.dom), object_ref(pending.cod)});
  }
  for (const auto& [key, result] : table_) {
    c.table_.emplace(std::pair{arrow_refs.at(key.first), arrow_refs.at(key.second)},
                     arrow_refs.at(result));
  }
  c.index();
  return c;
}

// ---------------------------------------------------------------------------
// Validation and derived structure

ValidationReport validate_category(const FiniteCategory& c) {
  ValidationReport report;
  auto name = [&](ArrowRef f) -> const std::string& { return c.arrow_name(f); };
  auto signature = [&](ArrowRef f) {
    return c.object_name(c.dom(f)) + " -> " + c.object_name(c.cod(f));
  };
  const auto n_arrows = static_cast<std::uint32_t>(c.arrow_count());

  for (std::uint32_t i = 0; i < n_arrows; ++i) {
    const ArrowRef f{i};
    const auto left = c.compose(c.identity(c.dom(f)), f);
    const auto right = c.compose(f, c.identity(c.cod(f)));
    if (left != f || right != f) {
      report.violations.push_back(
          {"identity", witness({name(f)}), "identity law fails for " + name(f)});
    }
  }

  for (const auto& [key, result] : c.table()) {
    const auto [first, then] = key;
    if (c.dom(result) != c.dom(first) || c.cod(result) != c.cod(then)) {
      report.violations.push_back(
          {"typing", witness({name(first), name(then)}),
           name(then) + " . " + name(first) + " = " + name(result) + " has type " +
               signature(result) + ", expected " + c.object_name(c.dom(first)) + " -> " +
               c.object_name(c.cod(then))});
    }
  }

  for (std::uint32_t i = 0; i < n_arrows; ++i) {
    const ArrowRef f{i};
    if (c.is_identity(f)) continue;
    for (ArrowRef g : c.outgoing(c.cod(f))) {
      if (c.is_identity(g)) continue;
      if (!c.table().contains({f, g})) {
        report.violations.push_back({"totality", witness({name(f), name(g)}),
                                     "no composition entry for " + name(g) + " . " + name(f)});
      }
    }
  }

  for (std::uint32_t i = 0; i < n_arrows; ++i) {
    const ArrowRef f{i};
    if (c.is_identity(f)) continue;
    for (ArrowRef g : c.outgoing(c.cod(f))) {
      if (c.is_identity(g)) continue;
      const auto fg = c.compose(f, g);
      if (!fg) continue;
      for (ArrowRef h : c.outgoing(c.cod(g))) {
        if (c.is_identity(h)) continue;
        const auto gh = c.compose(g, h);
        if (!gh) continue;
        const auto lhs = c.compose(*fg, h);
        const auto rhs = c.compose(f, *gh);
        if (lhs && rhs && *lhs != *rhs) {
          report.violations.push_back(
              {"associativity", witness({name(f), name(g), name(h)}),
               "(" + name(h) + " . " + name(g) + ") . " + name(f) + " = " + name(*rhs) +
                   " but " + name(h) + " . (" + name(g) + " . " + name(f) + ") = " +
                   name(*lhs)});
        }
      }
    }
  }
  return report;
}

FiniteCategory opposite_category(const FiniteCategory& c) {
  FiniteCategory op;
  op.name_ = c.name_;
  op.objects_ = c.objects_;
  op.arrows_ = c.arrows_;
  for (auto& a : op.arrows_) std::swap(a.dom, a.cod);
  for (const auto& [key, result] : c.table_) {
    op.table_.emplace(std::pair{key.second, key.first}, result);
  }
  op.index();
  return op;
}

std::optional<ArrowRef> is_isomorphism(const FiniteCategory& c, ArrowRef f) {
  const auto id_dom = c.identity(c.dom(f));
  const auto id_cod = c.identity(c.cod(f));
  for (ArrowRef g : c.hom(c.cod(f), c.dom(f))) {
    if (c.compose(f, g) == id_dom && c.compose(g, f) == id_cod) return g;
  }
  return std::nullopt;
}

}  // namespace ump
