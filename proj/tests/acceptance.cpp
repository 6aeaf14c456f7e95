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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracle.hpp"
#include "ump/catalog.hpp"
#include "ump/dsl.hpp"
#include "ump/genlab.hpp"
#include "ump/universality.hpp"

using namespace ump;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_ms, const std::function<Outcome()>& body) {
  const auto started = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
  if (budget_ms > 0 && ms > budget_ms) {
    out.pass = false;
    out.detail += " (over budget " + std::to_string(static_cast<long>(budget_ms)) + " ms)";
  }
  if (!out.pass) ++failures;
  std::printf("criterion %d %-34s %s  %9.1f ms  %s\n", id, title, out.pass ? "PASS" : "FAIL", ms,
              out.detail.c_str());
  std::fflush(stdout);
}

genlab::PreorderConstruction construction_for(std::uint64_t seed) {
  return seed % 2 ? genlab::PreorderConstruction::quotient : genlab::PreorderConstruction::closure;
}

Outcome naturals() {
  const auto doc = parse_document(read_fixture("nat100.ump"));
  const auto& gt = doc.relation("nat_gt");
  const auto with = find_universal(StrictQuery{gt, true});
  const auto without = find_universal(StrictQuery{gt, false});
  const bool ok = with == std::vector<std::string>{"1"} && without.empty();
  return {ok, "exclude-self -> {" + (with.empty() ? "" : with.front()) + "}, literal -> " +
                  std::to_string(without.size()) + " elements"};
}

Outcome remark_vs_compact() {
  const auto phi = PhiFormula::parse("Pa & Pb");
  std::size_t checks = 0, mismatches = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    genlab::SplitMix64 rng(seed);
    const std::size_t n = 1 + rng.below(8);
    const auto p = genlab::gen_preorder(rng.next(), n, construction_for(seed), 0.4);
    const auto q = genlab::gen_predicate(rng.next(), n);
    for (const auto& u : p.carrier().elements()) {
      for (bool dual : {false, true}) {
        const auto remark =
            is_p_universal(q, phi, p, u, dual ? Consequent::above : Consequent::below);
        const auto compact = is_p_universal_compact(q, p, u, dual);
        if (remark.holds != compact.holds) ++mismatches;
        ++checks;
      }
    }
  }
  return {mismatches == 0,
          std::to_string(checks) + " checks, " + std::to_string(mismatches) + " mismatches"};
}

Outcome unique_iso() {
  std::size_t pairs = 0, failed = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto c = genlab::gen_doubled_poset_category(seed, 1 + seed % 6);
    for (std::uint32_t a = 0; a < c.object_count(); ++a) {
      for (std::uint32_t b = a; b < c.object_count(); ++b) {
        std::vector<Cone> products;
        for (const auto& k : enumerate_cones(c, {a}, {b})) {
          if (check_product(c, k).holds()) products.push_back(k);
        }
        for (const auto& p1 : products) {
          for (const auto& p2 : products) {
            ++pairs;
            try {
              const auto [u1, u2] = product_uniqueness_certificate(c, p1, p2);
              if (c.compose(u1, u2) != c.identity(p1.apex) ||
                  c.compose(u2, u1) != c.identity(p2.apex)) {
                ++failed;
              }
            } catch (const std::exception&) {
              ++failed;
            }
          }
        }
      }
    }
  }
  return {failed == 0 && pairs > 0,
          std::to_string(pairs) + " product pairs, " + std::to_string(failed) + " failures"};
}

Outcome glb() {
  std::size_t checks = 0, mismatches = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 1 + static_cast<int>(seed % 8);
    const auto order = genlab::gen_partial_order(seed, n);
    const auto c = genlab::gen_poset_category(seed, n);
    const oracle::Rel leq = [&](int x, int y) { return order.contains(x, y); };
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const auto oa = c.object(order.carrier()[a]);
        const auto ob = c.object(order.carrier()[b]);
        for (const auto& k : enumerate_cones(c, oa, ob)) {
          const int m = static_cast<int>(order.carrier().index_of(c.object_name(k.apex)));
          if (check_product(c, k).holds() != oracle::is_glb(n, leq, a, b, m)) ++mismatches;
          ++checks;
        }
      }
    }
  }
  return {mismatches == 0,
          std::to_string(checks) + " cones, " + std::to_string(mismatches) + " mismatches"};
}

Outcome degeneracy() {
  std::size_t mismatches = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    genlab::SplitMix64 rng(seed);
    const std::size_t n = 1 + rng.below(8);
    const auto r = genlab::gen_relation(rng.next(), n, 0.7);
    const auto& u = r.carrier()[rng.below(n)];
    const auto eq = Preorder::equality(r.carrier());
    for (bool ex : {false, true}) {
      if (is_r_universal_preorder(r, eq, u, ex) != is_r_universal_strict(r, u, ex)) ++mismatches;
    }
  }
  return {mismatches == 0, "1000 pairs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome duality() {
  std::size_t cocones = 0, ump_checks = 0, mismatches = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto c = seed % 2 ? genlab::gen_doubled_poset_category(seed, 1 + seed % 4)
                            : genlab::gen_poset_category(seed, 1 + seed % 8);
    const auto op = opposite_category(c);
    for (std::uint32_t a = 0; a < c.object_count(); ++a) {
      for (std::uint32_t b = 0; b < c.object_count(); ++b) {
        for (const auto& k : enumerate_cocones(c, {a}, {b})) {
          if (check_coproduct(c, k) != check_product(op, k)) ++mismatches;
          ++cocones;
        }
      }
    }
  }
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 1 + seed % 8;
    const auto q = genlab::gen_relation(seed, n, 0.5);
    const auto p = genlab::gen_preorder(seed + 1, n, construction_for(seed));
    const auto rev = reverse(p);
    for (const auto& u : p.carrier().elements()) {
      if (is_q_ump_universal(q, p, u, true) != is_q_ump_universal(q, rev, u, false)) ++mismatches;
      ++ump_checks;
    }
  }
  return {mismatches == 0, std::to_string(cocones) + " cocones, " + std::to_string(ump_checks) +
                               " ump checks, " + std::to_string(mismatches) + " mismatches"};
}

Outcome sensitivity() {
  std::size_t mutations = 0, escapes = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto c = seed % 2 ? genlab::gen_doubled_poset_category(seed, 1 + seed % 4)
                            : genlab::gen_poset_category(seed, 1 + seed % 8);
    for (const auto& [key, result] : c.table()) {
      const auto& target = c.arrow(result);
      for (std::uint32_t i = 0; i < c.arrow_count(); ++i) {
        const auto& candidate = c.arrow({i});
        if (candidate.dom == target.dom && candidate.cod == target.cod) continue;
        ++mutations;
        if (validate_category(c.with_composite(key.first, key.second, {i})).ok()) ++escapes;
      }
    }
  }
  return {escapes == 0 && mutations > 0,
          std::to_string(mutations) + " mutations, " + std::to_string(escapes) + " escapes"};
}

Outcome dsl() {
  std::size_t documents = 0, broken = 0;
  auto round_trip = [&](const Document& doc) {
    ++documents;
    const auto text = serialize(doc);
    const auto again = parse_document(text);
    if (!(again == doc) || serialize(again) != text) ++broken;
  };
  const std::filesystem::path dir(UMP_FIXTURE_DIR);
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".ump") round_trip(parse_document(read_fixture(entry.path().filename().string())));
  }
  for (std::uint64_t seed = 0; seed < 1000; ++seed) round_trip(genlab::gen_bundle(seed));

  // Error corpus: exit 2 and a diagnostic of the form "file:L:C: error: line L: ...".
  std::size_t corpus = 0, undiagnosed = 0;
  const std::regex diagnostic(R"(\.ump:(\d+):\d+: error: line (\d+): )");
  for (const auto& entry : std::filesystem::directory_iterator(dir / "errors")) {
    ++corpus;
    std::ostringstream out, err;
    const int code = cli::run({"validate", entry.path().string()}, out, err);
    std::smatch m;
    const auto text = err.str();
    if (code != cli::kExitUsage || !out.str().empty() || !std::regex_search(text, m, diagnostic) ||
        m[1] != m[2]) {
      ++undiagnosed;
      std::printf("  undiagnosed: %s -> %d %s", entry.path().filename().c_str(), code, text.c_str());
    }
  }
  return {broken == 0 && undiagnosed == 0 && corpus > 0,
          std::to_string(documents) + " round trips, " + std::to_string(broken) + " broken; " +
              std::to_string(corpus) + " error files, " + std::to_string(undiagnosed) +
              " undiagnosed"};
}

}  // namespace

int main() {
  criterion(1, "naturals example", 1000, naturals);
  criterion(2, "remark vs compact equivalence", 30000, remark_vs_compact);
  criterion(3, "unique isomorphism of products", 60000, unique_iso);
  criterion(4, "product as greatest lower bound", 0, glb);
  criterion(5, "equality preorder degeneracy", 0, degeneracy);
  criterion(6, "duality", 0, duality);
  criterion(7, "validator sensitivity", 0, sensitivity);
  criterion(8, "dsl round trip and error corpus", 0, dsl);
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures == 0 ? 0 : 1;
}
