// Copyright 2026 The nsgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Propositional formulas over ~, &, | and the parser/printer pair.
//
// Surface syntax (ASCII, Unicode aliases in brackets):
//
//   formula := disj ( '->' formula )?        right associative  [→]
//   disj    := conj ( '|' conj )*            left associative   [∨]
//   conj    := unary ( '&' unary )*          left associative   [∧]
//   unary   := ( '~' | '!' ) unary | atom | '(' formula ')'     [¬]
//   atom    := [a-z][a-z0-9_]*
//
// `a -> b` is desugared to `~a | b`; the AST has no conditional node.

#ifndef NSGAME_FORMULA_HPP_
#define NSGAME_FORMULA_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nsgame {

enum class Connective : std::uint8_t { kAtom, kNot, kAnd, kOr };

enum class Branch : std::uint8_t { kLeft = 0, kRight = 1 };

inline char branch_letter(Branch b) { return b == Branch::kLeft ? 'L' : 'R'; }

// Location of a subformula occurrence: the sequence of child indices from
// the root ('0' = left or only child, '1' = right child).
class TreePath {
 public:
  TreePath() = default;
  explicit TreePath(std::string steps);

  TreePath child(Branch b) const;
  const std::string& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  bool is_root() const { return steps_.empty(); }

  // "ε" for the root, otherwise the step digits.
  std::string to_string() const;
  static TreePath from_string(std::string_view text);

  friend auto operator<=>(const TreePath&, const TreePath&) = default;

 private:
  std::string steps_;
};

// Immutable, structurally shared formula tree. Copies are cheap.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);

  Connective connective() const;
  bool is_atom() const { return connective() == Connective::kAtom; }
  bool is_binary() const {
    return connective() == Connective::kAnd || connective() == Connective::kOr;
  }

  // Atom name; empty for compound formulas.
  const std::string& name() const;
  // Negation operand.
  const Formula& operand() const;
  const Formula& left() const;
  const Formula& right() const;
  const Formula& child(Branch b) const;
  // Number of children (0, 1 or 2).
  std::size_t arity() const;

  // Node count and height (an atom has depth 0).
  std::size_t size() const;
  int depth() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

bool is_atom_name(std::string_view name);

Formula parse(std::string_view text);

// Canonical ASCII rendering: every binary node parenthesized, e.g.
// "((p | q) | (r & q))". parse(print(f)) == f.
std::string print(const Formula& f);

// Reading rendering with ∧ ∨ ¬, outermost parentheses dropped, e.g.
// "(p ∨ q) ∨ (r ∧ q)". Used in run traces.
std::string print_unicode(const Formula& f);

struct Occurrence {
  TreePath path;
  Formula formula;
};

// Every subformula occurrence in pre-order, f first.
std::vector<Occurrence> subformulas(const Formula& f);

std::set<std::string> atoms(const Formula& f);

}  // namespace nsgame

#endif  // NSGAME_FORMULA_HPP_
