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

#include "ump/genlab.hpp"

#include <numeric>
#include <utility>
#include <vector>

#include "ump/error.hpp"

namespace ump::genlab {

namespace {

using Matrix = std::vector<std::vector<bool>>;

void require_size(std::size_t n) {
  if (n == 0) throw InputError("generator size must be at least 1");
}

/// Strict order on 0..n-1: a random DAG over a random permutation, closed
/// under transitivity. Diagonal left false.
Matrix random_strict_order(SplitMix64& rng, std::size_t n, double density) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[rng.below(i + 1)]);

  Matrix less(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.bernoulli(density)) less[perm[i]][perm[j]] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!less[a][k]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (less[k][b]) less[a][b] = true;
      }
    }
  }
  return less;
}

std::string arrow_name(const std::string& from, const std::string& to) {
  return "a_" + from + "_" + to;
}

}  // namespace

Carrier gen_carrier(std::size_t n, const std::string& label, const std::string& prefix) {
  require_size(n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return Carrier(label, std::move(names));
}

BinaryRelation gen_partial_order(std::uint64_t seed, std::size_t n, double density) {
  SplitMix64 rng(seed);
  const auto less = random_strict_order(rng, n, density);
  BinaryRelation order(gen_carrier(n, "poset", "p"));
  for (std::size_t a = 0; a < n; ++a) {
    order.add(a, a);
    for (std::size_t b = 0; b < n; ++b) {
      if (less[a][b]) order.add(a, b);
    }
  }
  return order;
}

FiniteCategory gen_poset_category(std::uint64_t seed, std::size_t n, double density) {
  const auto order = gen_partial_order(seed, n, density);
  const auto& names = order.carrier();
  CategoryBuilder b("poset", Limits{n, n * n});
  for (const auto& x : names.elements()) b.object(x);
  for (auto [x, y] : order.pairs()) {
    if (x != y) b.arrow(arrow_name(names[x], names[y]), names[x], names[y]);
  }
  for (auto [x, y] : order.pairs()) {
    for (std::size_t z = 0; z < n; ++z) {
      if (x != y && y != z && order.contains(y, z)) {
        b.compose(arrow_name(names[x], names[z]), arrow_name(names[y], names[z]),
                  arrow_name(names[x], names[y]));
      }
    }
  }
  return b.build();
}

FiniteCategory gen_doubled_poset_category(std::uint64_t seed, std::size_t n, double density) {
  const auto order = gen_partial_order(seed, n, density);
  const auto& base = order.carrier();

  // Object k is copy (k % 2) of base element k / 2.
  std::vector<std::string> names;
  for (const auto& x : base.elements()) {
    names.push_back(x);
    names.push_back(x + "_t");
  }
  const std::size_t m = names.size();
  auto below = [&](std::size_t s, std::size_t t) { return order.contains(s / 2, t / 2); };

  CategoryBuilder b("doubled", Limits{m, m * m});
  for (const auto& x : names) b.object(x);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      if (s != t && below(s, t)) b.arrow(arrow_name(names[s], names[t]), names[s], names[t]);
    }
  }
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      if (s == t || !below(s, t)) continue;
      for (std::size_t r = 0; r < m; ++r) {
        if (t == r || !below(t, r)) continue;
        const auto result = s == r ? "id_" + names[s] : arrow_name(names[s], names[r]);
        b.compose(result, arrow_name(names[t], names[r]), arrow_name(names[s], names[t]));
      }
    }
  }
  return b.build();
}

BinaryRelation gen_relation(std::uint64_t seed, std::size_t n, double density) {
  SplitMix64 rng(seed);
  BinaryRelation r(gen_carrier(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (rng.bernoulli(density)) r.add(a, b);
    }
  }
  return r;
}

Preorder gen_preorder(std::uint64_t seed, std::size_t n, PreorderConstruction construction,
                      double density) {
  if (construction == PreorderConstruction::closure) {
    return Preorder::from_relation(reflexive_transitive_closure(gen_relation(seed, n, density)));
  }

  SplitMix64 rng(seed);
  const auto carrier = gen_carrier(n);
  // Each element joins a random existing block with probability `density`.
  std::vector<std::vector<std::string>> blocks;
  for (const auto& e : carrier.elements()) {
    if (!blocks.empty() && rng.bernoulli(density)) {
      blocks[rng.below(blocks.size())].push_back(e);
    } else {
      blocks.push_back({e});
    }
  }
  const EquivalenceClasses classes(carrier, blocks);
  const std::size_t k = classes.block_count();
  const auto less = random_strict_order(rng, k, density);
  BinaryRelation block_order(classes.block_carrier());
  for (std::size_t a = 0; a < k; ++a) {
    block_order.add(a, a);
    for (std::size_t b = 0; b < k; ++b) {
      if (less[a][b]) block_order.add(a, b);
    }
  }
  return preorder_from_quotient_order(classes, block_order);
}

Predicate gen_predicate(std::uint64_t seed, std::size_t n, double density) {
  SplitMix64 rng(seed);
  Predicate p(gen_carrier(n));
  for (std::size_t e = 0; e < n; ++e) p.set(e, rng.bernoulli(density));
  return p;
}

Document gen_bundle(std::uint64_t seed) {
  SplitMix64 rng(seed);
  Document doc;

  const auto n_objects = 1 + rng.below(5);
  auto category = rng.below(2) == 0 ? gen_poset_category(rng.next(), n_objects)
                                    : gen_doubled_poset_category(rng.next(), n_objects);
  const auto objects = Carrier::objects_of(category);

  const auto n = 1 + rng.below(6);
  doc.sets.emplace("s", gen_carrier(n));
  doc.relations.emplace("r", gen_relation(rng.next(), n));
  const auto construction =
      rng.below(2) == 0 ? PreorderConstruction::closure : PreorderConstruction::quotient;
  doc.preorders.emplace("p", gen_preorder(rng.next(), n, construction).relation());
  doc.predicates.emplace("q", gen_predicate(rng.next(), n));

  BinaryRelation on_objects(objects);
  Predicate pred_objects(objects);
  for (std::size_t a = 0; a < objects.size(); ++a) {
    pred_objects.set(a, rng.bernoulli(0.5));
    for (std::size_t b = 0; b < objects.size(); ++b) {
      if (rng.bernoulli(0.5)) on_objects.add(a, b);
    }
  }
  doc.relations.emplace("ro", std::move(on_objects));
  doc.predicates.emplace("qo", std::move(pred_objects));
  doc.categories.emplace(category.name(), std::move(category));
  return doc;
}

FiniteCategory divisor_category(unsigned n, const std::string& name) {
  if (n == 0) throw InputError("divisor category needs n >= 1");
  std::vector<unsigned> divisors;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }
  auto label = [](unsigned d) { return std::to_string(d); };
  CategoryBuilder b(name);
  for (auto d : divisors) b.object(label(d));
  for (auto x : divisors) {
    for (auto y : divisors) {
      if (x != y && y % x == 0) b.arrow(arrow_name(label(x), label(y)), label(x), label(y));
    }
  }
  for (auto x : divisors) {
    for (auto y : divisors) {
      for (auto z : divisors) {
        if (x != y && y != z && y % x == 0 && z % y == 0) {
          b.compose(arrow_name(label(x), label(z)), arrow_name(label(y), label(z)),
                    arrow_name(label(x), label(y)));
        }
      }
    }
  }
  return b.build();
}

}  // namespace ump::genlab
