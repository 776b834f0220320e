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

#include "nsgame/game.hpp"

#include <algorithm>
#include <stdexcept>

#include "nsgame/errors.hpp"

namespace nsgame {

std::vector<Role> RoleSet::to_vector() const {
  std::vector<Role> out;
  for (int i = 0; i < kMaxRoles; ++i) {
    if ((bits_ >> i) & 1u) out.push_back(Role::from_index(i));
  }
  return out;
}

// ── GameTree ────────────────────────────────────────────────────────────────

GameTree::GameTree(Formula f) : formula_(std::move(f)) {
  auto names = nsgame::atoms(formula_);
  atoms_.assign(names.begin(), names.end());
  nodes_.reserve(formula_.size());
  add(formula_, kNoNode, TreePath(), false, 0);
}

NodeId GameTree::add(const Formula& f, NodeId parent, const TreePath& path,
                     bool swapped, int level) {
  const NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(GameNode{f.connective(), parent, {kNoNode, kNoNode}, -1,
                            RoleMap{swapped}, level, path, f});
  switch (f.connective()) {
    case Connective::kAtom: {
      auto it = std::lower_bound(atoms_.begin(), atoms_.end(), f.name());
      nodes_[id].atom = static_cast<int>(it - atoms_.begin());
      leaves_.push_back(id);
      break;
    }
    case Connective::kNot: {
      NodeId c = add(f.operand(), id, path.child(Branch::kLeft), !swapped, level + 1);
      nodes_[id].children[0] = c;
      break;
    }
    case Connective::kAnd:
    case Connective::kOr: {
      binary_.push_back(id);
      NodeId l = add(f.left(), id, path.child(Branch::kLeft), swapped, level + 1);
      NodeId r = add(f.right(), id, path.child(Branch::kRight), swapped, level + 1);
      nodes_[id].children = {l, r};
      break;
    }
  }
  return id;
}

std::optional<NodeId> GameTree::find(const TreePath& path) const {
  NodeId id = root();
  for (char step : path.steps()) {
    const GameNode& n = nodes_[id];
    NodeId next = n.children[step == '0' ? 0 : 1];
    if (next == kNoNode) return std::nullopt;
    id = next;
  }
  return id;
}

bool GameTree::is_binary(NodeId id) const {
  Connective c = node(id).connective;
  return c == Connective::kAnd || c == Connective::kOr;
}

std::vector<TruthValue> GameTree::bind(const LogicSpec& spec, const Valuation& v) const {
  std::vector<TruthValue> out;
  out.reserve(atoms_.size());
  for (const std::string& a : atoms_) {
    TruthValue value = v.at(a);
    if (!spec.has_value(value)) {
      throw AlienValue("atom '" + a + "' carries a value outside the " + spec.name() +
                       " alphabet");
    }
    out.push_back(value);
  }
  return out;
}

Role classical_mover(Connective c) {
  switch (c) {
    case Connective::kAnd:
      return Role::falsifier();
    case Connective::kOr:
      return Role::verifier();
    default:
      throw std::invalid_argument("only binary connectives have a classical mover");
  }
}

// ── TokenSet / Choices ──────────────────────────────────────────────────────

TokenSet::TokenSet(std::initializer_list<Position> init) {
  for (const Position& p : init) insert(p);
}

void TokenSet::insert(const Position& p) {
  auto it = std::lower_bound(positions_.begin(), positions_.end(), p);
  if (it != positions_.end() && *it == p) return;
  if (positions_.size() == positions_.capacity()) {
    throw std::length_error("token set overflow");
  }
  positions_.insert(it, p);
}

bool TokenSet::contains(const Position& p) const {
  return std::binary_search(positions_.begin(), positions_.end(), p);
}

Choices::Choices(std::initializer_list<std::pair<Role, Branch>> init) {
  for (const auto& [role, branch] : init) set(role, branch);
}

RoleSet Choices::roles() const {
  RoleSet s;
  for (int i = 0; i < kMaxRoles; ++i) {
    if (picks_[i]) s.insert(Role::from_index(i));
  }
  return s;
}

// ── σ and τ ─────────────────────────────────────────────────────────────────

bool is_legal(const LogicSpec& spec, const GameTree& tree, const Position& p) {
  if (p.node >= tree.size() || !spec.has_role(p.role)) return false;
  const GameNode& n = tree.node(p.node);
  if (p.role_map != n.role_map) return false;
  if (tree.is_binary(p.node) && p.role.is_classical()) {
    return p.role == classical_mover(n.connective);
  }
  return true;
}

std::set<Position> build_positions(const LogicSpec& spec, const GameTree& tree) {
  std::set<Position> sigma;
  const auto roles = spec.roles();
  for (NodeId id = 0; id < tree.size(); ++id) {
    for (const Role& r : roles) {
      Position p{r, id, tree.node(id).role_map};
      if (is_legal(spec, tree, p)) sigma.insert(p);
    }
  }
  return sigma;
}

std::set<TokenSet> build_token_sets(const LogicSpec& spec, const GameTree& tree) {
  std::set<TokenSet> tau;
  for (const Position& p : build_positions(spec, tree)) {
    if (!tree.is_binary(p.node)) tau.insert(TokenSet{p});
  }
  for (NodeId id : tree.binary_nodes()) {
    const GameNode& n = tree.node(id);
    TokenSet movers{Position{classical_mover(n.connective), id, n.role_map}};
    for (int r = 1; r <= spec.infectious_count(); ++r) {
      movers.insert(Position{Role::infector(r), id, n.role_map});
    }
    tau.insert(movers);
  }
  return tau;
}

// ── Runs ────────────────────────────────────────────────────────────────────

namespace {

Position descend(const GameTree& tree, NodeId child, Role role) {
  const GameNode& n = tree.node(child);
  if (role.is_classical() && tree.is_binary(child)) role = classical_mover(n.connective);
  return Position{role, child, n.role_map};
}

bool satisfied(Role role, TruthValue value) {
  switch (role.kind) {
    case Role::Kind::kVerifier:
      return value.kind == TruthValue::Kind::kTrue;
    case Role::Kind::kFalsifier:
      return value.kind == TruthValue::Kind::kFalse;
    case Role::Kind::kInfector:
      return value.kind == TruthValue::Kind::kInfectious && value.rank == role.rank;
  }
  return false;
}

}  // namespace

TokenSet initial_token_set(const LogicSpec& spec, const GameTree& tree) {
  TokenSet ts;
  ts.insert(descend(tree, tree.root(), Role::verifier()));
  for (int r = 1; r <= spec.infectious_count(); ++r) {
    ts.insert(Position{Role::infector(r), tree.root(), tree.node(tree.root()).role_map});
  }
  return ts;
}

RoleSet entitled_roles(const GameTree& tree, const TokenSet& current) {
  RoleSet s;
  for (const Position& p : current) {
    if (tree.is_binary(p.node)) s.insert(p.role);
  }
  return s;
}

bool is_terminal(const GameTree& tree, const TokenSet& current) {
  return std::all_of(current.begin(), current.end(),
                     [&](const Position& p) { return tree.is_leaf(p.node); });
}

TokenSet step_run(const LogicSpec& spec, const GameTree& tree, const TokenSet& current,
                  const Choices& choices) {
  for (const Position& p : current) {
    if (!is_legal(spec, tree, p)) {
      throw std::invalid_argument("position outside the game's position set");
    }
  }
  if (is_terminal(tree, current)) {
    throw TerminalPosition("every strand has reached an atom");
  }
  const RoleSet entitled = entitled_roles(tree, current);
  for (const Role& r : choices.roles().to_vector()) {
    if (!entitled.contains(r)) {
      throw NotYourTurn(spec.role_name(r) + " does not move here");
    }
  }
  TokenSet next;
  for (const Position& p : current) {
    const GameNode& n = tree.node(p.node);
    switch (n.connective) {
      case Connective::kAtom:
        next.insert(p);
        break;
      case Connective::kNot:
        next.insert(descend(tree, n.children[0], p.role.swapped()));
        break;
      case Connective::kAnd:
      case Connective::kOr: {
        auto pick = choices.get(p.role);
        if (!pick) throw MissingChoice(spec.role_name(p.role) + " has to choose");
        next.insert(descend(tree, n.children[static_cast<int>(*pick)], p.role));
        break;
      }
    }
  }
  return next;
}

RoleSet terminal_winners(const LogicSpec& spec, const GameTree& tree,
                         const TokenSet& terminal, std::span<const TruthValue> atom_values) {
  RoleSet winners;
  for (const Position& p : terminal) {
    if (!tree.is_leaf(p.node)) {
      throw NonTerminal("position at " + tree.node(p.node).path.to_string() +
                        " is not an atom");
    }
    if (!spec.has_role(p.role)) throw std::invalid_argument("role outside the logic");
    TruthValue value = atom_values[tree.node(p.node).atom];
    if (satisfied(p.role, value)) winners.insert(p.role);
  }
  return winners;
}

RoleSet terminal_winners(const LogicSpec& spec, const GameTree& tree,
                         const TokenSet& terminal, const Valuation& v) {
  return terminal_winners(spec, tree, terminal, tree.bind(spec, v));
}

bool player_wins_at(const LogicSpec& spec, const GameTree& tree, Player player, NodeId leaf,
                    std::span<const TruthValue> atom_values) {
  const RoleMap& seats = tree.node(leaf).role_map;
  Role role = seats.role_of(player);
  return terminal_winners(spec, tree, TokenSet{Position{role, leaf, seats}}, atom_values)
      .contains(role);
}

Run play(const LogicSpec& spec, const GameTree& tree, const PickFn& pick) {
  Run run{initial_token_set(spec, tree)};
  while (!is_terminal(tree, run.back())) {
    Choices choices;
    for (const Position& p : run.back()) {
      if (!tree.is_binary(p.node)) continue;
      choices.set(p.role, pick(p.role_map.player_of(p.role), p.node));
    }
    run.push_back(step_run(spec, tree, run.back(), choices));
  }
  return run;
}

// ── Rendering ───────────────────────────────────────────────────────────────

std::string format_token_set(const LogicSpec& spec, const GameTree& tree,
                             const TokenSet& ts) {
  std::string out = "{";
  bool first = true;
  for (const Position& p : ts) {
    if (!first) out += ", ";
    first = false;
    out += "(" + spec.role_name(p.role) + ", " + print_unicode(tree.node(p.node).formula) +
           ")";
  }
  return out + "}";
}

std::string format_run(const LogicSpec& spec, const GameTree& tree, const Run& run) {
  std::string out;
  for (const TokenSet& ts : run) out += format_token_set(spec, tree, ts) + "\n";
  return out;
}

nlohmann::json token_set_to_json(const LogicSpec& spec, const GameTree& tree,
                                 const TokenSet& ts) {
  nlohmann::json out = nlohmann::json::array();
  for (const Position& p : ts) {
    const GameNode& n = tree.node(p.node);
    out.push_back({{"role", spec.role_name(p.role)},
                   {"player", spec.role_name(p.role_map.player_of(p.role).home)},
                   {"path", n.path.to_string()},
                   {"subformula", print(n.formula)}});
  }
  return out;
}

nlohmann::json run_to_json(const LogicSpec& spec, const GameTree& tree, const Run& run) {
  nlohmann::json out = nlohmann::json::array();
  for (const TokenSet& ts : run) out.push_back(token_set_to_json(spec, tree, ts));
  return out;
}

}  // namespace nsgame
