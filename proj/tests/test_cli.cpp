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

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracle.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ump::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(UMP_FIXTURE_DIR) + "/" + name; }

Json report(const Result& r) { return Json::parse(r.out); }

}  // namespace

TEST_CASE("strict on the naturals with exclude-self") {
  const auto r = run({"check", "strict", "--file", fixture("nat100.ump"), "--relation", "nat_gt",
                      "--candidate", "1", "--exclude-self"});
  CHECK(r.code == 0);
  const auto j = report(r);
  CHECK(j["holds"] == true);
  CHECK(j["definition"] == "strict");
  CHECK(j["candidate"] == "1");
  CHECK(j["failing_clause"].is_null());
  CHECK(j["counterexample"].is_null());

  const auto literal = run({"check", "strict", "--file", fixture("nat100.ump"), "--relation",
                            "nat_gt", "--candidate", "1"});
  CHECK(literal.code == 1);
  CHECK(report(literal)["failing_clause"] == "membership");
}

TEST_CASE("compact fails with counterexample 4") {
  const auto r = run({"check", "compact", "--file", fixture("n5.ump"), "--predicate", "evens",
                      "--preorder", "leq5", "--candidate", "2"});
  CHECK(r.code == 1);
  const auto j = report(r);
  CHECK(j["holds"] == false);
  CHECK(j["counterexample"] == "4");
  CHECK(j["failing_clause"] == "membership");
}

TEST_CASE("product with certificate size 2") {
  const auto r = run({"check", "product", "--file", fixture("d12.ump"), "--category", "d12",
                      "--apex", "2", "--leg-a", "a_2_4", "--leg-b", "a_2_6"});
  CHECK(r.code == 0);
  const auto j = report(r);
  CHECK(j["certificate_size"] == 2);
  CHECK(j["mediators"].size() == 2);

  const auto low = run({"check", "product", "--file", fixture("d12.ump"), "--category", "d12",
                        "--apex", "1", "--leg-a", "a_1_4", "--leg-b", "a_1_6"});
  CHECK(low.code == 1);
  CHECK(report(low)["counterexample"] == "2(a_2_4,a_2_6)");
  CHECK(report(low)["mediator_count"] == 0);
}

TEST_CASE("report fields appear in a stable order") {
  const auto r = run({"check", "compact", "--file", fixture("n5.ump"), "--predicate", "evens",
                      "--preorder", "leq5", "--candidate", "4"});
  const auto j = report(r);
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"holds", "definition", "candidate", "failing_clause",
                                         "counterexample", "rivals", "elapsed_ms"});
}

TEST_CASE("find lists universal elements") {
  const auto with = run({"find", "strict", "--file", fixture("nat100.ump"), "--relation",
                         "nat_gt", "--exclude-self"});
  CHECK(with.code == 0);
  CHECK(report(with)["universal"] == Json::array({"1"}));

  const auto without =
      run({"find", "strict", "--file", fixture("nat100.ump"), "--relation", "nat_gt"});
  CHECK(without.code == 1);
  CHECK(report(without)["universal"].empty());

  const auto coproduct = run({"find", "coproduct", "--file", fixture("d12.ump"), "--category",
                              "d12", "--factor-a", "4", "--factor-b", "6"});
  CHECK(report(coproduct)["universal"] == Json::array({"12(a_4_12,a_6_12)"}));

  const auto terminal =
      run({"find", "terminal", "--file", fixture("d12.ump"), "--category", "d12"});
  CHECK(report(terminal)["universal"] == Json::array({"12"}));
}

TEST_CASE("other definitions through the CLI") {
  const auto remark = run({"check", "property", "--file", fixture("n5.ump"), "--predicate",
                           "evens", "--preorder", "leq5", "--remark", "--candidate", "4"});
  CHECK(remark.code == 0);

  const auto ump = run({"check", "ump", "--file", fixture("n5.ump"), "--relation", "total5",
                        "--preorder", "leq5", "--dual", "--candidate", "1"});
  CHECK(ump.code == 0);

  const auto pre = run({"check", "preorder", "--file", fixture("abc.ump"), "--relation",
                        "into_ab", "--preorder", "ab_below_c", "--candidate", "a"});
  CHECK(pre.code == 0);
  CHECK(report(pre)["rivals"] == Json::array({"b"}));

  const auto initial = run({"check", "initial", "--file", fixture("d12.ump"), "--category",
                            "d12", "--object", "2"});
  CHECK(initial.code == 1);
  CHECK(report(initial)["counterexample"] == "1");
  CHECK(report(initial)["arrow_count"] == 0);
}

TEST_CASE("validate") {
  const auto ok = run({"validate", fixture("d12.ump")});
  CHECK(ok.code == 0);
  CHECK(report(ok)["violations"].empty());

  const auto broken = run({"validate", fixture("errors/unknown_object.ump")});
  CHECK(broken.code == 2);
  CHECK(broken.out.empty());
  CHECK(broken.err.find("unknown_object.ump:3:16: error: line 3: unknown object B") !=
        std::string::npos);

  // Axiom violations are reported, not treated as input errors.
  const auto path = std::filesystem::temp_directory_path() / "umpcheck_test_bad_preorder.ump";
  {
    std::ofstream f(path);
    f << "set s\nelement a\nelement b\nelement c\n"
         "preorder p on s\npair a a\npair b b\npair c c\npair a b\npair b c\n";
  }
  const auto axioms = run({"validate", path.string()});
  std::filesystem::remove(path);
  CHECK(axioms.code == 1);
  const auto j = report(axioms);
  CHECK(j["failing_clause"] == "transitivity");
  CHECK(j["counterexample"] == "((a, b), (b, c))");
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "nonsense", "--file", fixture("n5.ump")}).code == 2);
  CHECK(run({"check", "strict", "--file", fixture("n5.ump"), "--candidate", "1"}).code == 2);
  CHECK(run({"check", "strict", "--file", fixture("n5.ump"), "--relation", "gt5", "--candidate",
             "9"})
            .code == 2);
  CHECK(run({"check", "strict", "--file", fixture("missing.ump"), "--relation", "r",
             "--candidate", "1"})
            .code == 2);
  CHECK(run({"check", "property", "--file", fixture("n5.ump"), "--predicate", "evens",
             "--preorder", "leq5", "--phi", "Pa &", "--candidate", "2"})
            .code == 2);
  CHECK(run({"gen", "poset", "--n", "0"}).code == 2);
  CHECK(run({"gen", "widgets"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical invocations are byte-identical apart from elapsed_ms") {
  const std::vector<std::string> args = {"find", "compact", "--file", fixture("n5.ump"),
                                         "--predicate", "evens", "--preorder", "leq5"};
  auto strip = [](const Result& r) {
    auto j = report(r);
    j.erase("elapsed_ms");
    return j.dump();
  };
  const auto a = run(args);
  const auto b = run(args);
  CHECK(strip(a) == strip(b));
  CHECK(report(a)["elapsed_ms"].is_number_integer());
}

TEST_CASE("exit code 1 always carries a parseable failing report") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check", "compact", "--file", fixture("n5.ump"), "--predicate", "evens", "--preorder",
            "leq5", "--candidate", "1"},
           {"check", "terminal", "--file", fixture("d12.ump"), "--category", "d12", "--object",
            "6"},
           {"find", "compact", "--file", fixture("n5.ump"), "--predicate", "none5", "--preorder",
            "leq5"}}) {
    const auto r = run(args);
    REQUIRE(r.code == 1);
    CHECK(report(r)["holds"] == false);
  }
}

TEST_CASE("gen reproduces the golden fixtures") {
  CHECK(run({"gen", "poset", "--seed", "42", "--n", "6"}).out ==
        read_fixture("poset_seed42_n6.ump"));
  CHECK(run({"gen", "doubled", "--seed", "1", "--n", "4"}).out ==
        read_fixture("doubled_seed1_n4.ump"));
  const auto bundle = run({"gen", "bundle", "--seed", "5"});
  CHECK(bundle.code == 0);
  CHECK(bundle.out == run({"gen", "bundle", "--seed", "5"}).out);
}
