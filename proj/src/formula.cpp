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

#include "nsgame/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "nsgame/errors.hpp"

namespace nsgame {

// ── TreePath ────────────────────────────────────────────────────────────────

TreePath::TreePath(std::string steps) : steps_(std::move(steps)) {
  for (char c : steps_) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("tree path steps must be '0' or '1'");
    }
  }
}

TreePath TreePath::child(Branch b) const {
  TreePath p = *this;
  p.steps_.push_back(b == Branch::kLeft ? '0' : '1');
  return p;
}

std::string TreePath::to_string() const {
  return steps_.empty() ? std::string("ε") : steps_;
}

TreePath TreePath::from_string(std::string_view text) {
  if (text == "ε" || text.empty()) return TreePath();
  return TreePath(std::string(text));
}

// ── Formula ─────────────────────────────────────────────────────────────────

struct Formula::Node {
  Connective connective;
  std::string name;
  std::vector<Formula> children;
  std::size_t size;
  int depth;
};

namespace {

const std::string kEmptyName;

}  // namespace

bool is_atom_name(std::string_view name) {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Formula Formula::atom(std::string name) {
  if (!is_atom_name(name)) {
    throw std::invalid_argument("invalid atom name '" + name + "'");
  }
  auto node = std::make_shared<Node>(
      Node{Connective::kAtom, std::move(name), {}, 1, 0});
  return Formula(std::move(node));
}

Formula Formula::negation(Formula operand) {
  std::size_t size = operand.size() + 1;
  int depth = operand.depth() + 1;
  auto node = std::make_shared<Node>(
      Node{Connective::kNot, {}, {std::move(operand)}, size, depth});
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula left, Formula right) {
  std::size_t size = left.size() + right.size() + 1;
  int depth = std::max(left.depth(), right.depth()) + 1;
  auto node = std::make_shared<Node>(Node{
      Connective::kAnd, {}, {std::move(left), std::move(right)}, size, depth});
  return Formula(std::move(node));
}

Formula Formula::disjunction(Formula left, Formula right) {
  std::size_t size = left.size() + right.size() + 1;
  int depth = std::max(left.depth(), right.depth()) + 1;
  auto node = std::make_shared<Node>(Node{
      Connective::kOr, {}, {std::move(left), std::move(right)}, size, depth});
  return Formula(std::move(node));
}

Connective Formula::connective() const { return node_->connective; }

const std::string& Formula::name() const {
  return node_->connective == Connective::kAtom ? node_->name : kEmptyName;
}

const Formula& Formula::operand() const {
  if (node_->connective != Connective::kNot) {
    throw std::logic_error("operand() on a non-negation");
  }
  return node_->children[0];
}

const Formula& Formula::left() const {
  if (!is_binary()) throw std::logic_error("left() on a non-binary formula");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (!is_binary()) throw std::logic_error("right() on a non-binary formula");
  return node_->children[1];
}

const Formula& Formula::child(Branch b) const {
  std::size_t i = static_cast<std::size_t>(b);
  if (i >= node_->children.size()) {
    throw std::out_of_range("formula has no such child");
  }
  return node_->children[i];
}

std::size_t Formula::arity() const { return node_->children.size(); }

std::size_t Formula::size() const { return node_->size; }

int Formula::depth() const { return node_->depth; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.connective != y.connective || x.size != y.size) return false;
  if (x.connective == Connective::kAtom) return x.name == y.name;
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (!(x.children[i] == y.children[i])) return false;
  }
  return true;
}

// ── Parser ──────────────────────────────────────────────────────────────────

namespace {

enum class Tok { kAtom, kNot, kAnd, kOr, kArrow, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;  // code points
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      std::size_t at = offset_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::kEnd, "", at});
        return out;
      }
      char c = text_[pos_];
      if (c >= 'a' && c <= 'z') {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                (text_[pos_] >= '0' && text_[pos_] <= '9') ||
                text_[pos_] == '_')) {
          advance(1);
        }
        out.push_back(
            {Tok::kAtom, std::string(text_.substr(start, pos_ - start)), at});
        continue;
      }
      switch (c) {
        case '~':
        case '!':
          advance(1);
          out.push_back({Tok::kNot, "~", at});
          continue;
        case '&':
          advance(1);
          out.push_back({Tok::kAnd, "&", at});
          continue;
        case '|':
          advance(1);
          out.push_back({Tok::kOr, "|", at});
          continue;
        case '(':
          advance(1);
          out.push_back({Tok::kLParen, "(", at});
          continue;
        case ')':
          advance(1);
          out.push_back({Tok::kRParen, ")", at});
          continue;
        case '-':
          if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            advance(2);
            out.push_back({Tok::kArrow, "->", at});
            continue;
          }
          throw ParseError(at, "'->'");
        default:
          break;
      }
      if (match("¬")) {
        out.push_back({Tok::kNot, "~", at});
      } else if (match("∧")) {
        out.push_back({Tok::kAnd, "&", at});
      } else if (match("∨")) {
        out.push_back({Tok::kOr, "|", at});
      } else if (match("→")) {
        out.push_back({Tok::kArrow, "->", at});
      } else {
        throw ParseError(at, "an atom, '~', '(' or a connective");
      }
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      advance(1);
    }
  }

  // ASCII-only advance: one byte per code point.
  void advance(std::size_t bytes) {
    pos_ += bytes;
    offset_ += bytes;
  }

  bool match(std::string_view symbol) {
    if (text_.substr(pos_, symbol.size()) != symbol) return false;
    pos_ += symbol.size();
    offset_ += 1;
    return true;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t offset_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_all() {
    if (peek().kind == Tok::kEnd) throw ParseError(0, "a formula");
    Formula f = implication();
    if (peek().kind != Tok::kEnd) {
      throw ParseError(peek().offset, "end of input or a binary connective");
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::kArrow) {
      next();
      Formula rhs = implication();
      return Formula::disjunction(Formula::negation(std::move(lhs)),
                                  std::move(rhs));
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == Tok::kOr) {
      next();
      f = Formula::disjunction(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().kind == Tok::kAnd) {
      next();
      f = Formula::conjunction(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::kNot:
        return Formula::negation(unary());
      case Tok::kAtom:
        return Formula::atom(t.text);
      case Tok::kLParen: {
        Formula f = implication();
        if (peek().kind != Tok::kRParen) throw ParseError(peek().offset, "')'");
        next();
        return f;
      }
      default:
        throw ParseError(t.offset, "an atom, '~' or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void print_ascii(const Formula& f, std::string& out) {
  switch (f.connective()) {
    case Connective::kAtom:
      out += f.name();
      return;
    case Connective::kNot:
      out += '~';
      print_ascii(f.operand(), out);
      return;
    case Connective::kAnd:
    case Connective::kOr:
      out += '(';
      print_ascii(f.left(), out);
      out += f.connective() == Connective::kAnd ? " & " : " | ";
      print_ascii(f.right(), out);
      out += ')';
      return;
  }
}

void print_wide(const Formula& f, std::string& out, bool outer) {
  switch (f.connective()) {
    case Connective::kAtom:
      out += f.name();
      return;
    case Connective::kNot:
      out += "¬";
      print_wide(f.operand(), out, false);
      return;
    case Connective::kAnd:
    case Connective::kOr:
      if (!outer) out += '(';
      print_wide(f.left(), out, false);
      out += f.connective() == Connective::kAnd ? " ∧ " : " ∨ ";
      print_wide(f.right(), out, false);
      if (!outer) out += ')';
      return;
  }
}

void collect(const Formula& f, const TreePath& path,
             std::vector<Occurrence>& out) {
  out.push_back({path, f});
  for (std::size_t i = 0; i < f.arity(); ++i) {
    Branch b = static_cast<Branch>(i);
    collect(f.child(b), path.child(b), out);
  }
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.is_atom()) {
    out.insert(f.name());
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) {
    collect_atoms(f.child(static_cast<Branch>(i)), out);
  }
}

}  // namespace

Formula parse(std::string_view text) {
  return Parser(Lexer(text).run()).parse_all();
}

std::string print(const Formula& f) {
  std::string out;
  print_ascii(f, out);
  return out;
}

std::string print_unicode(const Formula& f) {
  std::string out;
  print_wide(f, out, true);
  return out;
}

std::vector<Occurrence> subformulas(const Formula& f) {
  std::vector<Occurrence> out;
  out.reserve(f.size());
  collect(f, TreePath(), out);
  return out;
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

}  // namespace nsgame
