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

#ifndef UMP_PHI_HPP_
#define UMP_PHI_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace ump {

/// Propositional formula over the two atoms Pa and Pb.
///
/// Grammar:
///   phi    := term | term "->" phi        (right associative, loosest)
///   term   := factor | term "&" factor | term "|" factor
///   factor := "!" factor | "Pa" | "Pb" | "(" phi ")"
///
/// `&` and `|` share one precedence level and associate to the left.
class PhiFormula {
 public:
  enum class Op { atom_a, atom_b, negation, conjunction, disjunction, implication };

  /// Throws ParseError (line 1, 1-based column) on malformed input.
  static PhiFormula parse(std::string_view text);

  bool evaluate(bool pa, bool pb) const {
    return (truth_table_ >> ((pa ? 2 : 0) | (pb ? 1 : 0))) & 1u;
  }

  /// Bit (2*Pa + Pb) holds the value of the formula under that assignment.
  std::uint8_t truth_table() const noexcept { return truth_table_; }

  /// Fully parenthesised rendering that parses back to the same tree.
  std::string to_string() const;

  /// Structural equality of the syntax trees.
  bool operator==(const PhiFormula& other) const;

  struct Node;

 private:
  explicit PhiFormula(std::shared_ptr<const Node> root);

  std::shared_ptr<const Node> root_;
  std::uint8_t truth_table_ = 0;
};

}  // namespace ump

#endif  // UMP_PHI_HPP_
