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

#ifndef UMP_DSL_HPP_
#define UMP_DSL_HPP_

#include <map>
#include <string>
#include <string_view>

#include "ump/category.hpp"
#include "ump/order.hpp"
#include "ump/universality.hpp"

namespace ump {

/// Everything declared in one `.ump` document, keyed by name. Names are
/// unique across all kinds of declaration.
///
/// Preorders are stored as their declared relations; preorder() re-checks
/// the axioms, so a document parsed without validation is still safe to
/// query.
struct Document {
  std::map<std::string, FiniteCategory> categories;
  std::map<std::string, Carrier> sets;
  std::map<std::string, BinaryRelation> relations;
  std::map<std::string, BinaryRelation> preorders;
  std::map<std::string, Predicate> predicates;

  // Lookups throw InputError naming the missing declaration.
  const FiniteCategory& category(std::string_view name) const;
  const BinaryRelation& relation(std::string_view name) const;
  Preorder preorder(std::string_view name) const;
  const Predicate& predicate(std::string_view name) const;

  bool operator==(const Document&) const = default;
};

struct ParseOptions {
  /// Check category axioms and preorder axioms while parsing; the first
  /// failure becomes a ParseError.
  bool validate_axioms = true;
  Limits limits;
};

/// Line-oriented records, one per line; `#` starts a comment.
///
///   category <name>                  object <name>
///   arrow <name> : <obj> -> <obj>    compose <h> = <g> . <f>   (h = g after f)
///   set <name>                       element <name>
///   relation <name> on <carrier>     pair <a> <b>
///   preorder <name> on <carrier>     pair <a> <b>
///   predicate <name> on <carrier>    holds <a>
///
/// `object`, `arrow` and `compose` attach to the most recent category,
/// `element` to the most recent set, `pair` to the most recent relation or
/// preorder and `holds` to the most recent predicate. A <carrier> is a set
/// name or `objects-of <category>`. Names must be declared before use.
///
/// Errors are ParseError with the 1-based line and column of the offending
/// token.
Document parse_document(std::string_view text, const ParseOptions& options = {});

/// Canonical text: declarations grouped by kind (categories, sets,
/// relations, preorders, predicates), each group and each block's records
/// sorted, one blank line between blocks.
std::string serialize(const Document& doc);

}  // namespace ump

#endif  // UMP_DSL_HPP_
