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

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "ump/catalog.hpp"
#include "ump/dsl.hpp"
#include "ump/error.hpp"
#include "ump/genlab.hpp"
#include "ump/universality.hpp"

namespace ump::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string kind;
  std::string file;
  std::string relation;
  std::string preorder;
  std::string predicate;
  std::string phi = "Pa & Pb";
  std::string candidate;
  std::string category;
  std::string apex;
  std::string leg_a;
  std::string leg_b;
  std::string object;
  std::string factor_a;
  std::string factor_b;
  bool exclude_self = false;
  bool dual = false;
  bool remark = false;

  std::uint64_t seed = 0;
  std::size_t n = 4;
  double density = 0.5;
  std::string construction = "closure";

  std::size_t max_objects = Limits{}.max_objects;
  std::size_t max_arrows = Limits{}.max_arrows;
};

const std::string& need(const std::string& value, std::string_view flag, std::string_view command) {
  if (value.empty()) {
    throw UsageError(std::string(command) + " requires " + std::string(flag));
  }
  return value;
}

/// Report skeleton in the stable field order; callers append extras.
Json report(bool holds, std::string_view definition, Json candidate, Json failing_clause,
            Json counterexample, const std::vector<std::string>& rivals) {
  Json j;
  j["holds"] = holds;
  j["definition"] = definition;
  j["candidate"] = std::move(candidate);
  j["failing_clause"] = std::move(failing_clause);
  j["counterexample"] = std::move(counterexample);
  j["rivals"] = rivals;
  j["elapsed_ms"] = 0;
  return j;
}

Json nullable(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

Document load(const Options& o, bool validate_axioms = true) {
  need(o.file, "--file", "this command");
  std::ifstream in(o.file, std::ios::binary);
  if (!in) throw UsageError("cannot read file " + o.file);
  std::ostringstream text;
  text << in.rdbuf();
  ParseOptions options;
  options.validate_axioms = validate_axioms;
  options.limits = Limits{o.max_objects, o.max_arrows};
  return parse_document(text.str(), options);
}

PhiFormula parse_phi(const std::string& text) {
  try {
    return PhiFormula::parse(text);
  } catch (const ParseError& e) {
    throw UsageError("invalid --phi formula '" + text + "': " + e.message());
  }
}

Query build_query(const Document& doc, const Options& o, Definition d, std::string_view command) {
  switch (d) {
    case Definition::strict:
      return StrictQuery{doc.relation(need(o.relation, "--relation", command)), o.exclude_self};
    case Definition::preorder:
      return PreorderQuery{doc.relation(need(o.relation, "--relation", command)),
                           doc.preorder(need(o.preorder, "--preorder", command)), o.exclude_self};
    case Definition::ump:
      return UmpQuery{doc.relation(need(o.relation, "--relation", command)),
                      doc.preorder(need(o.preorder, "--preorder", command)), o.dual};
    case Definition::property: {
      const auto consequent =
          !o.remark ? Consequent::none : (o.dual ? Consequent::above : Consequent::below);
      return PropertyQuery{doc.predicate(need(o.predicate, "--predicate", command)),
                           parse_phi(o.phi), doc.preorder(need(o.preorder, "--preorder", command)),
                           consequent};
    }
    case Definition::compact:
      return CompactQuery{doc.predicate(need(o.predicate, "--predicate", command)),
                          doc.preorder(need(o.preorder, "--preorder", command)), o.dual};
    case Definition::unique_arrow:
      return UniqueArrowQuery{doc.category(need(o.category, "--category", command)),
                              doc.relation(need(o.relation, "--relation", command))};
  }
  throw UsageError("unsupported definition");
}

struct Outcome {
  Json report;
  std::string summary;
};

// ---------------------------------------------------------------------------
// check

Outcome check_universal(const Options& o, Definition d) {
  const std::string command = "check " + std::string(to_string(d));
  const auto doc = load(o);
  const auto query = build_query(doc, o, d, command);
  const auto& u = need(o.candidate, "--candidate", command);
  const auto v = check(query, u);
  Outcome out{report(v.holds, to_string(d), u,
                     v.holds ? Json(nullptr) : Json(std::string(to_string(v.failing_clause))),
                     nullable(v.counterexample), v.rivals),
              {}};
  out.summary = v.holds ? u + " is " + std::string(to_string(d)) + "-universal"
                        : u + " is not " + std::string(to_string(d)) + "-universal: " +
                              std::string(to_string(v.failing_clause)) + " clause fails at " +
                              v.counterexample.value_or("?");
  return out;
}

Cone cone_from_options(const FiniteCategory& c, const Options& o, bool co,
                       std::string_view command) {
  const auto leg_a = c.arrow_ref(need(o.leg_a, "--leg-a", command));
  const auto leg_b = c.arrow_ref(need(o.leg_b, "--leg-b", command));
  const auto apex = c.object(need(o.apex, "--apex", command));
  const auto k = co ? make_cocone(c, leg_a, leg_b) : make_cone(c, leg_a, leg_b);
  if (k.apex != apex) {
    throw InputError("apex " + o.apex + " does not match the legs " + o.leg_a + ", " + o.leg_b);
  }
  return k;
}

Outcome check_limit(const Options& o, bool co) {
  const std::string definition = co ? "coproduct" : "product";
  const std::string command = "check " + definition;
  const auto doc = load(o);
  const auto& c = doc.category(need(o.category, "--category", command));
  const auto cand = cone_from_options(c, o, co, command);
  const auto v = co ? check_coproduct(c, cand) : check_product(c, cand);
  Outcome out;
  if (v.holds()) {
    out.report = report(true, definition, describe(c, cand), nullptr, nullptr, {});
    out.report["certificate_size"] = v.mediators.size();
    Json mediators = Json::array();
    for (const auto& [k, m] : v.mediators) {
      Json entry;
      entry["cone"] = describe(c, k);
      entry["mediator"] = c.arrow_name(m);
      mediators.push_back(std::move(entry));
    }
    out.report["mediators"] = std::move(mediators);
    out.summary = describe(c, cand) + " is a " + definition + " (" +
                  std::to_string(v.mediators.size()) + " cones certified)";
  } else {
    const auto& f = *v.failure;
    out.report = report(false, definition, describe(c, cand), "uniqueness",
                        describe(c, f.offending), {});
    out.report["mediator_count"] = f.mediator_count;
    out.summary = describe(c, cand) + " is not a " + definition + ": " + describe(c, f.offending) +
                  " has " + std::to_string(f.mediator_count) + " mediating arrows";
  }
  return out;
}

Outcome check_extremal(const Options& o, bool initial) {
  const std::string definition = initial ? "initial" : "terminal";
  const std::string command = "check " + definition;
  const auto doc = load(o);
  const auto& c = doc.category(need(o.category, "--category", command));
  const auto& name = need(o.object, "--object", command);
  const auto x = c.object(name);
  const auto v = initial ? is_initial(c, x) : is_terminal(c, x);
  Outcome out;
  if (v.holds) {
    out.report = report(true, definition, name, nullptr, nullptr, {});
    out.summary = name + " is " + definition;
  } else {
    const auto& w = c.object_name(*v.witness);
    out.report = report(false, definition, name, "uniqueness", w, {});
    out.report["arrow_count"] = v.arrow_count;
    out.summary = name + " is not " + definition + ": " + std::to_string(v.arrow_count) +
                  " arrows " + (initial ? "to " : "from ") + w;
  }
  return out;
}

// ---------------------------------------------------------------------------
// find

Outcome find_mode(const Options& o) {
  const std::string command = "find " + o.kind;
  std::vector<std::string> found;
  if (o.kind == "product" || o.kind == "coproduct") {
    const bool co = o.kind == "coproduct";
    const auto doc = load(o);
    const auto& c = doc.category(need(o.category, "--category", command));
    const auto a = c.object(need(o.factor_a, "--factor-a", command));
    const auto b = c.object(need(o.factor_b, "--factor-b", command));
    for (const auto& k : co ? enumerate_cocones(c, a, b) : enumerate_cones(c, a, b)) {
      if ((co ? check_coproduct(c, k) : check_product(c, k)).holds()) found.push_back(describe(c, k));
    }
  } else if (o.kind == "terminal" || o.kind == "initial") {
    const auto doc = load(o);
    const auto& c = doc.category(need(o.category, "--category", command));
    for (std::uint32_t i = 0; i < c.object_count(); ++i) {
      const ObjectRef x{i};
      if ((o.kind == "initial" ? is_initial(c, x) : is_terminal(c, x)).holds) {
        found.push_back(c.object_name(x));
      }
    }
  } else if (auto d = parse_definition(o.kind)) {
    const auto doc = load(o);
    found = find_universal(build_query(doc, o, *d, command));
  } else {
    throw UsageError("unknown definition '" + o.kind + "'");
  }
  Outcome out{report(!found.empty(), o.kind, nullptr, nullptr, nullptr, {}), {}};
  out.report["universal"] = found;
  std::string list;
  for (const auto& f : found) list += (list.empty() ? "" : ", ") + f;
  out.summary = o.kind + ": " + (found.empty() ? "no universal element" : "{" + list + "}");
  return out;
}

// ---------------------------------------------------------------------------
// validate

Outcome validate_mode(const Options& o) {
  const auto doc = load(o, false);
  Json violations = Json::array();
  auto add = [&](const std::string& decl, const std::string& axiom, const std::string& witness,
                 const std::string& detail) {
    Json v;
    v["declaration"] = decl;
    v["axiom"] = axiom;
    v["witness"] = witness;
    v["detail"] = detail;
    violations.push_back(std::move(v));
  };
  for (const auto& [name, c] : doc.categories) {
    for (const auto& v : validate_category(c).violations) add(name, v.axiom, v.witness, v.detail);
  }
  for (const auto& [name, r] : doc.preorders) {
    for (const auto& v : validate_preorder(r).violations) add(name, v.axiom, v.witness, v.detail);
  }
  const bool clean = violations.empty();
  Outcome out{report(clean, "validate", o.file, clean ? Json(nullptr) : violations[0]["axiom"],
                     clean ? Json(nullptr) : violations[0]["witness"], {}),
              {}};
  out.report["violations"] = violations;
  out.summary = clean ? o.file + ": valid"
                      : o.file + ": " + std::to_string(violations.size()) + " violation(s), first: " +
                            violations[0]["declaration"].get<std::string>() + " " +
                            violations[0]["axiom"].get<std::string>() + " at " +
                            violations[0]["witness"].get<std::string>();
  return out;
}

// ---------------------------------------------------------------------------
// gen

std::string gen_mode(const Options& o) {
  using namespace genlab;
  Document doc;
  if (o.kind == "poset") {
    auto c = gen_poset_category(o.seed, o.n, o.density);
    doc.categories.emplace(c.name(), std::move(c));
  } else if (o.kind == "doubled") {
    auto c = gen_doubled_poset_category(o.seed, o.n, o.density);
    doc.categories.emplace(c.name(), std::move(c));
  } else if (o.kind == "divisors") {
    auto c = divisor_category(static_cast<unsigned>(o.n), "d" + std::to_string(o.n));
    doc.categories.emplace(c.name(), std::move(c));
  } else if (o.kind == "relation") {
    doc.sets.emplace("s", gen_carrier(o.n));
    doc.relations.emplace("r", gen_relation(o.seed, o.n, o.density));
  } else if (o.kind == "preorder") {
    PreorderConstruction construction;
    if (o.construction == "closure") {
      construction = PreorderConstruction::closure;
    } else if (o.construction == "quotient") {
      construction = PreorderConstruction::quotient;
    } else {
      throw UsageError("--construction must be closure or quotient");
    }
    doc.sets.emplace("s", gen_carrier(o.n));
    doc.preorders.emplace("p", gen_preorder(o.seed, o.n, construction, o.density).relation());
  } else if (o.kind == "predicate") {
    doc.sets.emplace("s", gen_carrier(o.n));
    doc.predicates.emplace("q", gen_predicate(o.seed, o.n, o.density));
  } else if (o.kind == "bundle") {
    doc = gen_bundle(o.seed);
  } else {
    throw UsageError("unknown generator '" + o.kind +
                     "' (expected poset, doubled, divisors, relation, preorder, predicate, bundle)");
  }
  return serialize(doc);
}

void add_check_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--file", o.file, "Input .ump document");
  cmd->add_option("--relation", o.relation, "Relation name (R, or Q for ump)");
  cmd->add_option("--preorder", o.preorder, "Preorder name");
  cmd->add_option("--predicate", o.predicate, "Predicate name");
  cmd->add_option("--phi", o.phi, "Formula over Pa, Pb (default \"Pa & Pb\")");
  cmd->add_option("--category", o.category, "Category name");
  cmd->add_flag("--exclude-self", o.exclude_self, "Quantify x over elements other than the one tested");
  cmd->add_flag("--dual", o.dual, "Use the reversed preorder");
  cmd->add_flag("--remark", o.remark, "Property check: attach the order consequent to phi");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Decide universality of elements and verify universal mapping properties in "
               "finite structures.",
               "umpcheck"};
  app.require_subcommand(1);
  app.add_option("--max-objects", o.max_objects, "Object limit per category")
      ->capture_default_str();
  app.add_option("--max-arrows", o.max_arrows, "Arrow limit per category")->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Check category and preorder axioms in a file");
  validate->add_option("file", o.file, "Input .ump document")->required();

  auto* check_cmd = app.add_subcommand("check", "Check one candidate");
  check_cmd
      ->add_option("definition", o.kind,
                   "strict|preorder|ump|property|compact|unique-arrow|product|coproduct|"
                   "terminal|initial")
      ->required();
  add_check_options(check_cmd, o);
  check_cmd->add_option("--candidate", o.candidate, "Element or object under test");
  check_cmd->add_option("--apex", o.apex, "Product/coproduct apex object");
  check_cmd->add_option("--leg-a", o.leg_a, "Leg to (from) the first factor");
  check_cmd->add_option("--leg-b", o.leg_b, "Leg to (from) the second factor");
  check_cmd->add_option("--object", o.object, "Object for terminal/initial");

  auto* find_cmd = app.add_subcommand("find", "List every universal element");
  find_cmd
      ->add_option("definition", o.kind,
                   "strict|preorder|ump|property|compact|unique-arrow|product|coproduct|"
                   "terminal|initial")
      ->required();
  add_check_options(find_cmd, o);
  find_cmd->add_option("--factor-a", o.factor_a, "First factor (product/coproduct)");
  find_cmd->add_option("--factor-b", o.factor_b, "Second factor (product/coproduct)");

  auto* gen_cmd = app.add_subcommand("gen", "Emit a generated instance as a .ump document");
  gen_cmd->add_option("kind", o.kind, "poset|doubled|divisors|relation|preorder|predicate|bundle")
      ->required();
  gen_cmd->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("--n", o.n, "Size")->capture_default_str()->check(CLI::Range(1, 4096));
  gen_cmd->add_option("--density", o.density, "Inclusion probability")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--construction", o.construction, "Preorder construction: closure|quotient")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitUsage;
  }

  const auto started = Clock::now();
  try {
    if (*gen_cmd) {
      out << gen_mode(o);
      return kExitHolds;
    }

    Outcome outcome;
    if (*validate) {
      outcome = validate_mode(o);
    } else if (*find_cmd) {
      outcome = find_mode(o);
    } else if (o.kind == "product" || o.kind == "coproduct") {
      outcome = check_limit(o, o.kind == "coproduct");
    } else if (o.kind == "terminal" || o.kind == "initial") {
      outcome = check_extremal(o, o.kind == "initial");
    } else if (auto d = parse_definition(o.kind)) {
      outcome = check_universal(o, *d);
    } else {
      throw UsageError("unknown definition '" + o.kind + "'");
    }

    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
    outcome.report["elapsed_ms"] = elapsed;
    out << outcome.report.dump() << '\n';
    err << outcome.summary << '\n';
    return outcome.report["holds"].get<bool>() ? kExitHolds : kExitFails;
  } catch (const UsageError& e) {
    err << "umpcheck: error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << o.file << ":" << e.line() << ":" << e.column() << ": error: line " << e.line() << ": "
        << e.message() << '\n';
  } catch (const InputError& e) {
    err << (o.file.empty() ? std::string("umpcheck") : o.file) << ": error: " << e.what() << '\n';
  } catch (const EngineError& e) {
    err << "umpcheck: internal error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace ump::cli
