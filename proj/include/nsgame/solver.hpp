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

// Winning strategies, dominance and truth values from games.
//
// Two independent routes compute who has a winning strategy:
//
//   * win_profile(): backward induction over the formula tree;
//   * brute_force_profile(): enumerates explicit pure strategies and
//     replays every matchup through step_run()/terminal_winners().
//
// solve_value() then resolves the winners with the logic's dominance
// order. In the infectious chains the highest infector dominates
// everything below it and all infectors dominate the classical pair; in
// LP the classical pair dominates the paradoxifier.

#ifndef NSGAME_SOLVER_HPP_
#define NSGAME_SOLVER_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"
#include "nsgame/formula.hpp"
#include "nsgame/game.hpp"
#include "nsgame/logic.hpp"

namespace nsgame {

inline constexpr std::uint64_t kDefaultProfileCap = std::uint64_t{1} << 16;

struct WinProfile {
  RoleSet winners;

  bool wins(Role r) const { return winners.contains(r); }
  friend bool operator==(const WinProfile&, const WinProfile&) = default;
};

std::string format_profile(const LogicSpec& spec, const WinProfile& profile);
nlohmann::json profile_to_json(const LogicSpec& spec, const WinProfile& profile);

// Strict order over roles by stratum. Verifier and Falsifier always share
// a stratum and never dominate each other.
class DominanceOrder {
 public:
  static DominanceOrder of(const LogicSpec& spec);

  int level(Role r) const { return levels_.at(r.index()); }
  bool dominates(Role a, Role b) const { return level(a) > level(b); }
  // Roles from the top stratum down; ties in Role::index() order.
  const std::vector<Role>& descending() const { return descending_; }

 private:
  std::array<int, kMaxRoles> levels_{};
  std::vector<Role> descending_;
};

// The dominance-maximal winner of a profile. Throws Indeterminate when no
// role wins or the top stratum holds more than one winner.
Role dominant_role(const DominanceOrder& order, const WinProfile& profile);

struct Decision {
  TreePath node;
  Branch choice;
  friend bool operator==(const Decision&, const Decision&) = default;
};

// A pure strategy: one pick at each of the owner's decision nodes
// (pre-order). The owner is the player seated at `owner` at the root.
struct Strategy {
  Role owner;
  std::vector<Decision> decisions;

  std::optional<Branch> choice_at(const TreePath& node) const;
  friend bool operator==(const Strategy&, const Strategy&) = default;
};

// "ε: L, 0: R, 1: L"; "-" for a decision-free strategy.
std::string format_strategy(const Strategy& s);
// Picks at the decision nodes the strategy can reach, in pre-order and
// joined by '-', e.g. "L-R". Nodes where another player moves are followed
// both ways.
std::string format_choice_sequence(const GameTree& tree, const Strategy& s);
nlohmann::json strategy_to_json(const LogicSpec& spec, const Strategy& s);

// Binary nodes at which `player` moves: every binary node for an
// infector; for the classical players the nodes where their seat is the
// classical mover.
std::vector<NodeId> decision_nodes(const GameTree& tree, Player player);

// Per-node winning-strategy existence, indexed by NodeId; the roles are
// the seats as they stand at that node.
std::vector<WinProfile> node_profiles(const LogicSpec& spec, const GameTree& tree,
                                      std::span<const TruthValue> atom_values);

WinProfile win_profile(const LogicSpec& spec, const Formula& f, const Valuation& v);

struct Solution {
  TruthValue value;
  Role dominant;
  friend bool operator==(const Solution&, const Solution&) = default;
};

Solution solve_value(const LogicSpec& spec, const Formula& f, const Valuation& v);
Solution solve_value(const LogicSpec& spec, const DominanceOrder& order,
                     const WinProfile& profile);

// A winning strategy for the player seated at `role` at the root: at each
// decision node, the first child (left first) where that player still has
// a winning strategy. Throws NoWinningStrategy.
Strategy extract_strategy(const LogicSpec& spec, const Formula& f, const Valuation& v,
                          Role role);

// Same rule without the precondition; nodes with no winning child get
// Left. Used to play out runs for every seat.
Strategy greedy_strategy(const LogicSpec& spec, const GameTree& tree,
                         std::span<const WinProfile> profiles, Role role);

// Explicit pure-strategy space of a game.
//
// A player's result depends only on its own strand, and a strand is moved
// by its owner and (for the classical strand) the opposing classical
// player. The space therefore stores, for every role and every pairing of
// its strategies with those of its strand's other controller, the leaf the
// strand ends on. Outcomes are computed once per formula by replaying
// through step_run() and reused across valuations.
//
// Strategy indices enumerate picks lexicographically, Left before Right,
// first decision node most significant.
class StrategySpace {
 public:
  StrategySpace(const LogicSpec& spec, const GameTree& tree,
                std::uint64_t profile_cap = kDefaultProfileCap);

  const LogicSpec& spec() const { return spec_; }
  const GameTree& tree() const { return tree_; }

  std::uint32_t strategy_count(Role r) const;
  const std::vector<NodeId>& decisions(Role r) const;
  // The other player moving the role's strand, if any.
  std::optional<Role> controller(Role r) const;
  // Leaf reached by `r`'s strand when r plays `mine` and the controller
  // plays `theirs` (0 when there is no controller).
  NodeId outcome(Role r, std::uint32_t mine, std::uint32_t theirs) const;
  // Per node: whether the player seated at `r` at the root has won when
  // its strand ends there (false for non-leaves).
  std::vector<bool> winning_leaves(Role r, std::span<const TruthValue> atom_values) const;

  Strategy strategy(Role r, std::uint32_t index) const;
  std::optional<std::uint32_t> index_of(const Strategy& s) const;

  // Number of pure profiles the brute force replays.
  std::uint64_t replayed_profiles() const { return replayed_; }

 private:
  NodeId replay_classical(std::uint32_t verifier, std::uint32_t falsifier) const;
  NodeId replay_infector(int rank, std::uint32_t index) const;
  Branch pick(Role r, std::uint32_t index, NodeId node) const;

  LogicSpec spec_;
  GameTree tree_;
  std::array<std::vector<NodeId>, kMaxRoles> decisions_;
  // slot_[role][node]: position of node in decisions_[role], or -1
  std::array<std::vector<int>, kMaxRoles> slot_;
  // classical_[v * |S_F| + f]
  std::vector<NodeId> classical_;
  // infector_[rank - 1][s]
  std::vector<std::vector<NodeId>> infector_;
  std::uint64_t replayed_ = 0;
};

// Independent oracle for win_profile(): a role wins iff one of its pure
// strategies wins against every pure strategy of the other controller.
// Throws BudgetExceeded above `profile_cap`.
WinProfile brute_force_profile(const LogicSpec& spec, const Formula& f, const Valuation& v,
                               std::uint64_t profile_cap = kDefaultProfileCap);
WinProfile brute_force_profile(const StrategySpace& space,
                               std::span<const TruthValue> atom_values);

}  // namespace nsgame

#endif  // NSGAME_SOLVER_HPP_
