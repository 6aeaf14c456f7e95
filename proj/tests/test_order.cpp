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

#include <string>
#include <vector>

#include "doctest.h"
#include "ump/error.hpp"
#include "ump/genlab.hpp"
#include "ump/order.hpp"

using namespace ump;

namespace {

Carrier abc() { return Carrier("abc", {"a", "b", "c"}); }

BinaryRelation relation(const Carrier& c,
                        const std::vector<std::pair<std::string, std::string>>& pairs) {
  BinaryRelation r(c);
  for (const auto& [a, b] : pairs) r.add(a, b);
  return r;
}

std::vector<std::vector<std::string>> named_blocks(const EquivalenceClasses& eq) {
  std::vector<std::vector<std::string>> out;
  for (const auto& block : eq.blocks()) {
    out.emplace_back();
    for (auto e : block) out.back().push_back(eq.carrier()[e]);
  }
  return out;
}

using Blocks = std::vector<std::vector<std::string>>;

}  // namespace

TEST_CASE("carrier is sorted and rejects bad input") {
  Carrier c("s", {"c", "a", "b"});
  CHECK(c[0] == "a");
  CHECK(c.index_of("c") == 2);
  CHECK_FALSE(c.find("z").has_value());
  CHECK_THROWS_AS(c.index_of("z"), InputError);
  CHECK_THROWS_AS(Carrier("s", {}), InputError);
  CHECK_THROWS_AS(Carrier("s", {"a", "a"}), InputError);
  CHECK_THROWS_AS(Carrier("s", {"a b"}), InputError);
}

TEST_CASE("validate_preorder") {
  const Carrier one("one", {"a"});
  CHECK(validate_preorder(relation(one, {{"a", "a"}})).ok());

  const Carrier ab("ab", {"a", "b"});
  CHECK(validate_preorder(relation(ab, {{"a", "a"}, {"b", "b"}, {"a", "b"}, {"b", "a"}})).ok());

  const auto report =
      validate_preorder(relation(abc(), {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "c"}}));
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].axiom == "transitivity");
  CHECK(report.violations[0].witness == "((a, b), (b, c))");
  CHECK(report.violations[0].detail == "missing (a, c)");

  const auto irreflexive = validate_preorder(relation(ab, {{"a", "a"}}));
  REQUIRE_FALSE(irreflexive.ok());
  CHECK(irreflexive.violations[0].axiom == "reflexivity");
  CHECK(irreflexive.violations[0].witness == "b");

  CHECK_THROWS_AS(Preorder::from_relation(relation(ab, {{"a", "a"}})), InputError);
}

TEST_CASE("induced_equivalence") {
  CHECK(named_blocks(induced_equivalence(Preorder::equality(abc()))) ==
        Blocks{{"a"}, {"b"}, {"c"}});

  const auto p = Preorder::from_relation(relation(
      abc(), {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "a"}, {"a", "c"}, {"b", "c"}}));
  CHECK(named_blocks(induced_equivalence(p)) == Blocks{{"a", "b"}, {"c"}});

  const Carrier ab("ab", {"a", "b"});
  CHECK(named_blocks(induced_equivalence(Preorder::from_relation(total_relation(ab)))) ==
        Blocks{{"a", "b"}});
}

TEST_CASE("preorder_from_quotient_order") {
  const Carrier one("one", {"a"});
  const EquivalenceClasses single(one, {{"a"}});
  BinaryRelation trivial(single.block_carrier());
  trivial.add(0, 0);
  CHECK(preorder_from_quotient_order(single, trivial) == Preorder::equality(one));

  const EquivalenceClasses classes(abc(), {{"a", "b"}, {"c"}});
  BinaryRelation le(classes.block_carrier());
  le.add(0, 0);
  le.add(1, 1);
  le.add(0, 1);
  const auto p = preorder_from_quotient_order(classes, le);
  const auto expected = Preorder::from_relation(relation(
      abc(), {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "a"}, {"a", "c"}, {"b", "c"}}));
  CHECK(p == expected);
  CHECK(induced_equivalence(p) == classes);

  const Carrier ab("ab", {"a", "b"});
  const EquivalenceClasses split(ab, {{"a"}, {"b"}});
  BinaryRelation both(split.block_carrier());
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) both.add(i, j);
  }
  CHECK_THROWS_AS(preorder_from_quotient_order(split, both), InputError);
}

TEST_CASE("partition must cover the carrier") {
  CHECK_THROWS_AS(EquivalenceClasses(abc(), Blocks{{"a"}, {"b"}}), InputError);
  CHECK_THROWS_AS(EquivalenceClasses(abc(), Blocks{{"a", "b"}, {"b", "c"}}), InputError);
  CHECK_THROWS_AS(EquivalenceClasses(abc(), Blocks{{"a", "b", "c"}, {}}), InputError);
}

TEST_CASE("reverse") {
  const auto eq = Preorder::equality(abc());
  CHECK(reverse(eq) == eq);

  const Carrier ab("ab", {"a", "b"});
  CHECK(reverse(relation(ab, {{"a", "b"}})) == relation(ab, {{"b", "a"}}));

  const Carrier five("n5", {"1", "2", "3", "4", "5"});
  BinaryRelation le(five), ge(five);
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= 5; ++b) {
      if (a <= b) le.add(std::to_string(a), std::to_string(b));
      if (a >= b) ge.add(std::to_string(a), std::to_string(b));
    }
  }
  CHECK(reverse(le) == ge);
  CHECK(reverse(reverse(le)) == le);
}

TEST_CASE("random preorders: both constructions") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 1 + seed % 8;
    for (auto construction :
         {genlab::PreorderConstruction::closure, genlab::PreorderConstruction::quotient}) {
      const auto p = genlab::gen_preorder(seed, n, construction, 0.3);
      REQUIRE(validate_preorder(p.relation()).ok());
      REQUIRE(validate_preorder(reverse(p).relation()).ok());
      REQUIRE(induced_equivalence(p) == induced_equivalence(reverse(p)));

      // Direct check of the block membership rule.
      const auto eq = induced_equivalence(p);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          REQUIRE(eq.same_block(a, b) == (p.leq(a, b) && p.leq(b, a)));
        }
      }
    }
  }
}

TEST_CASE("quotient round trip on random partitions and block orders") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    genlab::SplitMix64 rng(seed);
    const std::size_t n = 1 + rng.below(8);
    const auto carrier = genlab::gen_carrier(n);
    std::vector<std::vector<std::string>> blocks;
    for (const auto& e : carrier.elements()) {
      if (!blocks.empty() && rng.bernoulli(0.5)) {
        blocks[rng.below(blocks.size())].push_back(e);
      } else {
        blocks.push_back({e});
      }
    }
    const EquivalenceClasses classes(carrier, blocks);
    const auto order = genlab::gen_partial_order(rng.next(), classes.block_count());
    BinaryRelation le(classes.block_carrier());
    for (auto [a, b] : order.pairs()) le.add(a, b);
    const auto p = preorder_from_quotient_order(classes, le);
    REQUIRE(validate_preorder(p.relation()).ok());
    REQUIRE(induced_equivalence(p) == classes);
  }
}

TEST_CASE("closure of random relations is a preorder") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto r = genlab::gen_relation(seed, 1 + seed % 8, 0.2);
    const auto closed = reflexive_transitive_closure(r);
    REQUIRE(validate_preorder(closed).ok());
    for (auto [a, b] : r.pairs()) REQUIRE(closed.contains(a, b));
  }
}

TEST_CASE("equality preorder has singleton blocks") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto eq = induced_equivalence(Preorder::equality(genlab::gen_carrier(n)));
    REQUIRE(eq.block_count() == n);
    for (const auto& block : eq.blocks()) REQUIRE(block.size() == 1);
  }
}
