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

#include "ump/phi.hpp"

#include "ump/error.hpp"

namespace ump {

struct PhiFormula::Node {
  Op op;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const PhiFormula::Node>;
using Op = PhiFormula::Op;

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  return std::make_shared<const PhiFormula::Node>(PhiFormula::Node{op, std::move(lhs), std::move(rhs)});
}

bool eval(const PhiFormula::Node& n, bool pa, bool pb) {
  switch (n.op) {
    case Op::atom_a: return pa;
    case Op::atom_b: return pb;
    case Op::negation: return !eval(*n.lhs, pa, pb);
    case Op::conjunction: return eval(*n.lhs, pa, pb) && eval(*n.rhs, pa, pb);
    case Op::disjunction: return eval(*n.lhs, pa, pb) || eval(*n.rhs, pa, pb);
    case Op::implication: return !eval(*n.lhs, pa, pb) || eval(*n.rhs, pa, pb);
  }
  return false;
}

bool same_tree(const PhiFormula::Node* x, const PhiFormula::Node* y) {
  if (x == y) return true;
  if (!x || !y || x->op != y->op) return false;
  return same_tree(x->lhs.get(), y->lhs.get()) && same_tree(x->rhs.get(), y->rhs.get());
}

bool is_binary(Op op) {
  return op == Op::conjunction || op == Op::disjunction || op == Op::implication;
}

void render(const PhiFormula::Node& n, std::string& out, bool top) {
  auto child = [&](const PhiFormula::Node& c) { render(c, out, false); };
  if (is_binary(n.op) && !top) out += '(';
  switch (n.op) {
    case Op::atom_a: out += "Pa"; break;
    case Op::atom_b: out += "Pb"; break;
    case Op::negation:
      out += '!';
      child(*n.lhs);
      break;
    case Op::conjunction:
    case Op::disjunction:
    case Op::implication:
      child(*n.lhs);
      out += n.op == Op::conjunction ? " & " : n.op == Op::disjunction ? " | " : " -> ";
      child(*n.rhs);
      break;
  }
  if (is_binary(n.op) && !top) out += ')';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    auto root = phi();
    skip_space();
    if (pos_ != text_.size()) fail("expected '->', '&', '|' or end of formula");
    return root;
  }

 private:
  // phi := term ("->" phi)?
  NodePtr phi() {
    auto lhs = term();
    skip_space();
    if (text_.substr(pos_).starts_with("->")) {
      pos_ += 2;
      return make(Op::implication, lhs, phi());
    }
    return lhs;
  }

  // term := factor (("&" | "|") factor)*
  NodePtr term() {
    auto lhs = factor();
    for (;;) {
      skip_space();
      if (peek('&')) {
        ++pos_;
        lhs = make(Op::conjunction, lhs, factor());
      } else if (peek('|')) {
        ++pos_;
        lhs = make(Op::disjunction, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  NodePtr factor() {
    skip_space();
    if (peek('!')) {
      ++pos_;
      return make(Op::negation, factor());
    }
    if (peek('(')) {
      ++pos_;
      auto inner = phi();
      skip_space();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    const auto rest = text_.substr(pos_);
    if (rest.starts_with("Pa") || rest.starts_with("Pb")) {
      const bool is_a = rest[1] == 'a';
      pos_ += 2;
      return make(is_a ? Op::atom_a : Op::atom_b);
    }
    fail("expected 'Pa', 'Pb', '!' or '('");
  }

  bool peek(char ch) const { return pos_ < text_.size() && text_[pos_] == ch; }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const std::string found =
        pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of formula";
    throw ParseError(1, pos_ + 1,
                     "column " + std::to_string(pos_ + 1) + ": " + expected + ", found " + found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PhiFormula::PhiFormula(std::shared_ptr<const Node> root) : root_(std::move(root)) {
  for (unsigned bits = 0; bits < 4; ++bits) {
    if (eval(*root_, (bits & 2u) != 0, (bits & 1u) != 0)) {
      truth_table_ = static_cast<std::uint8_t>(truth_table_ | (1u << bits));
    }
  }
}

PhiFormula PhiFormula::parse(std::string_view text) { return PhiFormula(Parser(text).parse()); }

std::string PhiFormula::to_string() const {
  std::string out;
  render(*root_, out, true);
  return out;
}

bool PhiFormula::operator==(const PhiFormula& other) const {
  return same_tree(root_.get(), other.root_.get());
}

}  // namespace ump
