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

// Concurrent semantic games played on a formula tree.
//
// A play moves a set of tokens ("strands") from the root towards the
// atoms:
//
//   * the classical strand, shared by Verifier and Falsifier. At a
//     conjunction it is moved by whoever holds Falsifier there, at a
//     disjunction by whoever holds Verifier;
//   * one strand per infector, moved by that infector at every binary
//     connective.
//
// Negation moves every strand to the operand without a choice and swaps
// the Verifier/Falsifier seats; infectors keep theirs. A strand's position
// is labelled with the role held by the player currently in charge of it,
// so the opening of a disjunction game reads
//
//   {(Verifier, φ ∨ ψ), (Dominator, φ ∨ ψ)}
//
// and strands that pick different children continue independently at
// different nodes of the same token set.

#ifndef NSGAME_GAME_HPP_
#define NSGAME_GAME_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <boost/container/static_vector.hpp>

#include "nlohmann/json.hpp"
#include "nsgame/formula.hpp"
#include "nsgame/logic.hpp"

namespace nsgame {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

// Set of roles as a bitmask over Role::index().
class RoleSet {
 public:
  constexpr RoleSet() = default;
  static constexpr RoleSet from_bits(std::uint16_t bits) {
    RoleSet s;
    s.bits_ = bits;
    return s;
  }

  void insert(Role r) { bits_ |= static_cast<std::uint16_t>(1u << r.index()); }
  void erase(Role r) { bits_ &= static_cast<std::uint16_t>(~(1u << r.index())); }
  bool contains(Role r) const { return (bits_ >> r.index()) & 1u; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  std::uint16_t bits() const { return bits_; }
  std::vector<Role> to_vector() const;

  friend constexpr bool operator==(RoleSet, RoleSet) = default;

 private:
  std::uint16_t bits_ = 0;
};

// Players are named after the seat they occupy at the root. A role map
// records who sits where at a given node: the Verifier/Falsifier seats
// are exchanged under an odd number of negations, infector seats never
// move.
struct Player {
  Role home;
  friend constexpr auto operator<=>(const Player&, const Player&) = default;
};

struct RoleMap {
  bool swapped = false;

  Role role_of(Player p) const { return swapped ? p.home.swapped() : p.home; }
  Player player_of(Role r) const { return Player{swapped ? r.swapped() : r}; }

  friend constexpr auto operator<=>(const RoleMap&, const RoleMap&) = default;
};

struct GameNode {
  Connective connective;
  NodeId parent = kNoNode;
  std::array<NodeId, 2> children{kNoNode, kNoNode};
  int atom = -1;  // index into GameTree::atoms() for atom nodes
  RoleMap role_map;
  int level = 0;  // distance from the root
  TreePath path;
  Formula formula;
};

// Flattened formula tree in pre-order; node 0 is the root.
class GameTree {
 public:
  explicit GameTree(Formula f);

  const Formula& formula() const { return formula_; }
  NodeId root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const GameNode& node(NodeId id) const { return nodes_.at(id); }
  std::span<const GameNode> nodes() const { return nodes_; }
  std::span<const NodeId> binary_nodes() const { return binary_; }
  std::span<const NodeId> leaves() const { return leaves_; }
  // Distinct atom names, sorted.
  const std::vector<std::string>& atoms() const { return atoms_; }
  std::optional<NodeId> find(const TreePath& path) const;

  bool is_binary(NodeId id) const;
  bool is_leaf(NodeId id) const { return node(id).connective == Connective::kAtom; }

  // Value of every atom (indexed like atoms()) under v. Throws UnboundAtom
  // or AlienValue.
  std::vector<TruthValue> bind(const LogicSpec& spec, const Valuation& v) const;

 private:
  NodeId add(const Formula& f, NodeId parent, const TreePath& path, bool swapped,
             int level);

  Formula formula_;
  std::vector<GameNode> nodes_;
  std::vector<NodeId> binary_;
  std::vector<NodeId> leaves_;
  std::vector<std::string> atoms_;
};

// The role whose holder moves the classical strand at a binary node.
Role classical_mover(Connective c);

struct Position {
  Role role;
  NodeId node;
  RoleMap role_map;

  friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

// Positions played simultaneously. Kept sorted by role, then node, and
// free of duplicates.
class TokenSet {
 public:
  TokenSet() = default;
  TokenSet(std::initializer_list<Position> init);

  void insert(const Position& p);
  std::size_t size() const { return positions_.size(); }
  bool empty() const { return positions_.empty(); }
  auto begin() const { return positions_.begin(); }
  auto end() const { return positions_.end(); }
  const Position& operator[](std::size_t i) const { return positions_[i]; }
  bool contains(const Position& p) const;

  friend bool operator==(const TokenSet& a, const TokenSet& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }
  friend bool operator<(const TokenSet& a, const TokenSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  boost::container::static_vector<Position, kMaxRoles> positions_;
};

using Run = std::vector<TokenSet>;

// Left/right picks for the roles entitled to move.
class Choices {
 public:
  Choices() = default;
  Choices(std::initializer_list<std::pair<Role, Branch>> init);

  void set(Role r, Branch b) { picks_.at(r.index()) = b; }
  std::optional<Branch> get(Role r) const { return picks_.at(r.index()); }
  RoleSet roles() const;

 private:
  std::array<std::optional<Branch>, kMaxRoles> picks_{};
};

// σ: every legal (role, node) pair. Atoms and negations carry every role;
// conjunctions carry Falsifier and the infectors; disjunctions carry
// Verifier and the infectors.
std::set<Position> build_positions(const LogicSpec& spec, const GameTree& tree);

// τ: for each binary node the set of its movers, every other position as
// a singleton.
std::set<TokenSet> build_token_sets(const LogicSpec& spec, const GameTree& tree);

bool is_legal(const LogicSpec& spec, const GameTree& tree, const Position& p);

// Opening token set: the classical strand plus one strand per infector,
// all at the root. The classical strand opens with the root's mover, or
// with Verifier when the root is not binary.
TokenSet initial_token_set(const LogicSpec& spec, const GameTree& tree);

// Roles that must pick at `current` (the labels of positions sitting on
// binary nodes).
RoleSet entitled_roles(const GameTree& tree, const TokenSet& current);

bool is_terminal(const GameTree& tree, const TokenSet& current);

// One simultaneous step of every strand. Strands already on an atom stay
// put. Throws TerminalPosition, NotYourTurn, MissingChoice, and
// std::invalid_argument for positions outside σ.
TokenSet step_run(const LogicSpec& spec, const GameTree& tree,
                  const TokenSet& current, const Choices& choices);

// Roles whose winning condition holds at their own atom position.
// Throws NonTerminal if a position is not on an atom.
RoleSet terminal_winners(const LogicSpec& spec, const GameTree& tree,
                         const TokenSet& terminal, const Valuation& v);
RoleSet terminal_winners(const LogicSpec& spec, const GameTree& tree,
                         const TokenSet& terminal,
                         std::span<const TruthValue> atom_values);

// Whether `player`, with its strand ended on `leaf`, has won: every seat
// checks its own condition at an atom.
bool player_wins_at(const LogicSpec& spec, const GameTree& tree, Player player,
                    NodeId leaf, std::span<const TruthValue> atom_values);

// Plays to the end; `pick(player, node)` supplies each decision.
using PickFn = std::function<Branch(Player, NodeId)>;
Run play(const LogicSpec& spec, const GameTree& tree, const PickFn& pick);

// `{(Verifier, (p ∨ q) ∨ (r ∧ q)), (Dominator, (p ∨ q) ∨ (r ∧ q))}`
std::string format_token_set(const LogicSpec& spec, const GameTree& tree,
                             const TokenSet& ts);
std::string format_run(const LogicSpec& spec, const GameTree& tree, const Run& run);

// Stable field names: role, player, path, subformula.
nlohmann::json token_set_to_json(const LogicSpec& spec, const GameTree& tree,
                                 const TokenSet& ts);
nlohmann::json run_to_json(const LogicSpec& spec, const GameTree& tree, const Run& run);

}  // namespace nsgame

#endif  // NSGAME_GAME_HPP_
