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

#include "ump/dsl.hpp"

#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "ump/error.hpp"

namespace ump {

// ---------------------------------------------------------------------------
// Document lookups

namespace {

template <class Map>
const typename Map::mapped_type& lookup(const Map& map, std::string_view name,
                                        std::string_view kind) {
  auto it = map.find(std::string(name));
  if (it == map.end()) throw InputError("unknown " + std::string(kind) + " " + std::string(name));
  return it->second;
}

}  // namespace

const FiniteCategory& Document::category(std::string_view name) const {
  return lookup(categories, name, "category");
}

const BinaryRelation& Document::relation(std::string_view name) const {
  return lookup(relations, name, "relation");
}

Preorder Document::preorder(std::string_view name) const {
  return Preorder::from_relation(lookup(preorders, name, "preorder"));
}

const Predicate& Document::predicate(std::string_view name) const {
  return lookup(predicates, name, "predicate");
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

class DocumentParser {
 public:
  DocumentParser(std::string_view text, const ParseOptions& options)
      : text_(text), options_(options) {}

  Document run() {
    std::size_t start = 0;
    while (start <= text_.size()) {
      auto end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      ++line_;
      parse_line(text_.substr(start, end - start));
      start = end + 1;
    }
    finish_block();
    return std::move(doc_);
  }

 private:
  enum class Block { none, category, set, relation, preorder, predicate };

  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw ParseError(line_, column, message);
  }

  /// Runs `fn`, re-raising InputError as a ParseError at `column`.
  template <class Fn>
  auto at(std::size_t column, Fn fn) {
    try {
      return fn();
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      fail(column, e.what());
    }
  }

  void parse_line(std::string_view raw) {
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < raw.size();) {
      const auto ch = static_cast<unsigned char>(raw[i]);
      if (ch == ' ' || ch == '\t') {
        ++i;
        continue;
      }
      if (ch < 0x20 || ch > 0x7e) fail(i + 1, "non-printable or non-ASCII character");
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') {
        const auto cj = static_cast<unsigned char>(raw[j]);
        if (cj < 0x20 || cj > 0x7e) fail(j + 1, "non-printable or non-ASCII character");
        ++j;
      }
      tokens.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (tokens.empty()) return;
    record(tokens);
  }

  void expect_count(const std::vector<Token>& t, std::size_t n, std::string_view usage) {
    if (t.size() < n) {
      const std::size_t col = t.back().column + t.back().text.size();
      fail(col, "expected '" + std::string(usage) + "', record is incomplete");
    }
    if (t.size() > n) fail(t[n].column, "unexpected token '" + std::string(t[n].text) + "'");
  }

  void expect_literal(const Token& t, std::string_view literal) {
    if (t.text != literal) {
      fail(t.column, "expected '" + std::string(literal) + "', found '" + std::string(t.text) + "'");
    }
  }

  std::string identifier(const Token& t, std::string_view what) {
    if (!is_identifier(t.text)) {
      fail(t.column, "expected " + std::string(what) + " name, found '" + std::string(t.text) + "'");
    }
    return std::string(t.text);
  }

  void declare(const Token& t) {
    const std::string name(t.text);
    if (!declared_.insert(name).second) fail(t.column, "name " + name + " is already declared");
  }

  void require_block(const Token& keyword, Block expected, std::string_view owner) {
    if (block_ != expected) {
      fail(keyword.column, "'" + std::string(keyword.text) + "' outside a " + std::string(owner) +
                               " declaration");
    }
  }

  Carrier carrier(const std::vector<Token>& t, std::size_t at_index) {
    const Token& first = t[at_index];
    if (first.text == "objects-of") {
      expect_count(t, at_index + 2, "objects-of <category>");
      const auto name = identifier(t[at_index + 1], "category");
      auto it = doc_.categories.find(name);
      if (it == doc_.categories.end()) fail(t[at_index + 1].column, "unknown category " + name);
      return Carrier::objects_of(it->second);
    }
    expect_count(t, at_index + 1, "<set>");
    const auto name = identifier(first, "set");
    auto it = doc_.sets.find(name);
    if (it == doc_.sets.end()) fail(first.column, "unknown set " + name);
    return it->second;
  }

  void record(const std::vector<Token>& t) {
    const auto& kw = t[0].text;
    if (kw == "category" || kw == "set" || kw == "relation" || kw == "preorder" ||
        kw == "predicate") {
      finish_block();
      header_line_ = line_;
    }

    if (kw == "category") {
      expect_count(t, 2, "category <name>");
      block_name_ = identifier(t[1], "category");
      declare(t[1]);
      builder_.emplace(block_name_, options_.limits);
      compose_lines_.clear();
      block_ = Block::category;
    } else if (kw == "object") {
      require_block(t[0], Block::category, "category");
      expect_count(t, 2, "object <name>");
      const auto name = identifier(t[1], "object");
      at(t[1].column, [&] { builder_->object(name); });
    } else if (kw == "arrow") {
      require_block(t[0], Block::category, "category");
      expect_count(t, 6, "arrow <name> : <obj> -> <obj>");
      const auto name = identifier(t[1], "arrow");
      expect_literal(t[2], ":");
      const auto dom = identifier(t[3], "object");
      expect_literal(t[4], "->");
      const auto cod = identifier(t[5], "object");
      if (!builder_->has_object(dom)) fail(t[3].column, "unknown object " + dom);
      if (!builder_->has_object(cod)) fail(t[5].column, "unknown object " + cod);
      at(t[1].column, [&] { builder_->arrow(name, dom, cod); });
    } else if (kw == "compose") {
      require_block(t[0], Block::category, "category");
      expect_count(t, 6, "compose <h> = <g> . <f>");
      const auto result = identifier(t[1], "arrow");
      expect_literal(t[2], "=");
      const auto then = identifier(t[3], "arrow");
      expect_literal(t[4], ".");
      const auto first = identifier(t[5], "arrow");
      at(t[1].column, [&] { builder_->compose(result, then, first); });
      compose_lines_[{first, then}] = line_;
    } else if (kw == "set") {
      expect_count(t, 2, "set <name>");
      block_name_ = identifier(t[1], "set");
      declare(t[1]);
      elements_.clear();
      block_ = Block::set;
    } else if (kw == "element") {
      require_block(t[0], Block::set, "set");
      expect_count(t, 2, "element <name>");
      const auto name = identifier(t[1], "element");
      for (const auto& e : elements_) {
        if (e == name) fail(t[1].column, "duplicate element " + name);
      }
      elements_.push_back(name);
    } else if (kw == "relation" || kw == "preorder" || kw == "predicate") {
      if (t.size() < 4) {
        fail(t.back().column + t.back().text.size(),
             "expected '" + std::string(kw) + " <name> on <carrier>', record is incomplete");
      }
      block_name_ = identifier(t[1], std::string(kw));
      expect_literal(t[2], "on");
      auto c = carrier(t, 3);
      declare(t[1]);
      if (kw == "predicate") {
        predicate_.emplace(std::move(c));
        block_ = Block::predicate;
      } else {
        relation_.emplace(std::move(c));
        block_ = kw == "relation" ? Block::relation : Block::preorder;
      }
    } else if (kw == "pair") {
      if (block_ != Block::relation && block_ != Block::preorder) {
        fail(t[0].column, "'pair' outside a relation or preorder declaration");
      }
      expect_count(t, 3, "pair <a> <b>");
      const auto a = identifier(t[1], "element");
      const auto b = identifier(t[2], "element");
      const auto ai = at(t[1].column, [&] { return relation_->carrier().index_of(a); });
      const auto bi = at(t[2].column, [&] { return relation_->carrier().index_of(b); });
      relation_->add(ai, bi);
    } else if (kw == "holds") {
      require_block(t[0], Block::predicate, "predicate");
      expect_count(t, 2, "holds <a>");
      const auto a = identifier(t[1], "element");
      const auto ai = at(t[1].column, [&] { return predicate_->carrier().index_of(a); });
      predicate_->set(ai);
    } else {
      fail(t[0].column,
           "unknown record '" + std::string(kw) +
               "'; expected one of category, object, arrow, compose, set, element, relation, "
               "preorder, predicate, pair, holds");
    }
  }

  void finish_block() {
    const auto saved_line = line_;
    line_ = header_line_;
    switch (block_) {
      case Block::none: break;
      case Block::category: finish_category(); break;
      case Block::set:
        doc_.sets.emplace(block_name_, at(1, [&] { return Carrier(block_name_, elements_); }));
        break;
      case Block::relation:
        doc_.relations.emplace(block_name_, std::move(*relation_));
        break;
      case Block::preorder: {
        if (options_.validate_axioms) {
          const auto report = validate_preorder(*relation_);
          if (!report.ok()) {
            const auto& v = report.violations.front();
            fail(1, "preorder " + block_name_ + " violates " + v.axiom + " at " + v.witness +
                        " (" + v.detail + ")");
          }
        }
        doc_.preorders.emplace(block_name_, std::move(*relation_));
        break;
      }
      case Block::predicate:
        doc_.predicates.emplace(block_name_, std::move(*predicate_));
        break;
    }
    line_ = saved_line;
    block_ = Block::none;
    relation_.reset();
    predicate_.reset();
  }

  void finish_category() {
    auto c = builder_->build();
    builder_.reset();
    if (options_.validate_axioms) {
      const auto report = validate_category(c);
      if (!report.ok()) {
        const auto& v = report.violations.front();
        if (v.axiom == "typing") {
          // Witness "(f, g)": point at the offending compose record.
          const auto comma = v.witness.find(", ");
          const std::string first = v.witness.substr(1, comma - 1);
          const std::string then = v.witness.substr(comma + 2, v.witness.size() - comma - 3);
          if (auto it = compose_lines_.find({first, then}); it != compose_lines_.end()) {
            line_ = it->second;
          }
        }
        fail(1, "category " + block_name_ + " violates " + v.axiom + " at " + v.witness + ": " +
                    v.detail);
      }
    }
    doc_.categories.emplace(block_name_, std::move(c));
  }

  std::string_view text_;
  const ParseOptions& options_;
  Document doc_;
  std::size_t line_ = 0;
  std::size_t header_line_ = 0;
  std::set<std::string> declared_;

  Block block_ = Block::none;
  std::string block_name_;
  std::optional<CategoryBuilder> builder_;
  std::map<std::pair<std::string, std::string>, std::size_t> compose_lines_;
  std::vector<std::string> elements_;
  std::optional<BinaryRelation> relation_;
  std::optional<Predicate> predicate_;
};

}  // namespace

Document parse_document(std::string_view text, const ParseOptions& options) {
  return DocumentParser(text, options).run();
}

// ---------------------------------------------------------------------------
// Serializer

namespace {

void write_relation(std::ostringstream& out, std::string_view kind, const std::string& name,
                    const BinaryRelation& r) {
  out << kind << ' ' << name << " on " << r.carrier().label() << '\n';
  for (auto [a, b] : r.pairs()) out << "pair " << r.carrier()[a] << ' ' << r.carrier()[b] << '\n';
}

}  // namespace

std::string serialize(const Document& doc) {
  std::ostringstream out;
  bool first_block = true;
  auto separate = [&] {
    if (!first_block) out << '\n';
    first_block = false;
  };

  for (const auto& [name, c] : doc.categories) {
    separate();
    out << "category " << name << '\n';
    for (const auto& obj : c.objects()) out << "object " << obj << '\n';
    for (std::uint32_t i = 0; i < c.arrow_count(); ++i) {
      const ArrowRef f{i};
      if (c.is_identity(f)) continue;
      out << "arrow " << c.arrow_name(f) << " : " << c.object_name(c.dom(f)) << " -> "
          << c.object_name(c.cod(f)) << '\n';
    }
    for (const auto& [key, result] : c.table()) {
      out << "compose " << c.arrow_name(result) << " = " << c.arrow_name(key.second) << " . "
          << c.arrow_name(key.first) << '\n';
    }
  }
  for (const auto& [name, s] : doc.sets) {
    separate();
    out << "set " << name << '\n';
    for (const auto& e : s.elements()) out << "element " << e << '\n';
  }
  for (const auto& [name, r] : doc.relations) {
    separate();
    write_relation(out, "relation", name, r);
  }
  for (const auto& [name, r] : doc.preorders) {
    separate();
    write_relation(out, "preorder", name, r);
  }
  for (const auto& [name, p] : doc.predicates) {
    separate();
    out << "predicate " << name << " on " << p.carrier().label() << '\n';
    for (auto e : p.members()) out << "holds " << p.carrier()[e] << '\n';
  }
  return out.str();
}

}  // namespace ump
