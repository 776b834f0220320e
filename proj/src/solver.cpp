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

#include "nsgame/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "nsgame/errors.hpp"

namespace nsgame {

std::string format_profile(const LogicSpec& spec, const WinProfile& profile) {
  std::string out;
  for (const Role& r : spec.roles()) {
    if (!out.empty()) out += ", ";
    out += spec.role_name(r) + ": " + (profile.wins(r) ? "true" : "false");
  }
  return out;
}

nlohmann::json profile_to_json(const LogicSpec& spec, const WinProfile& profile) {
  nlohmann::json out = nlohmann::json::object();
  for (const Role& r : spec.roles()) out[spec.role_name(r)] = profile.wins(r);
  return out;
}

// ── Dominance ───────────────────────────────────────────────────────────────

DominanceOrder DominanceOrder::of(const LogicSpec& spec) {
  DominanceOrder order;
  for (const Role& r : spec.roles()) {
    int level = 0;
    if (spec.flavor() == Flavor::kParadox) {
      level = r.is_classical() ? 1 : 0;
    } else {
      level = r.is_classical() ? 0 : r.rank;
    }
    order.levels_[r.index()] = level;
    order.descending_.push_back(r);
  }
  std::stable_sort(order.descending_.begin(), order.descending_.end(),
                   [&](Role a, Role b) { return order.level(a) > order.level(b); });
  return order;
}

Role dominant_role(const DominanceOrder& order, const WinProfile& profile) {
  std::optional<Role> best;
  bool tied = false;
  for (const Role& r : order.descending()) {
    if (!profile.wins(r)) continue;
    if (!best) {
      best = r;
    } else if (order.level(r) == order.level(*best)) {
      tied = true;
    }
  }
  if (!best) throw Indeterminate("no role has a winning strategy");
  if (tied) throw Indeterminate("several undominated roles have winning strategies");
  return *best;
}

// ── Strategies ──────────────────────────────────────────────────────────────

std::optional<Branch> Strategy::choice_at(const TreePath& node) const {
  for (const Decision& d : decisions) {
    if (d.node == node) return d.choice;
  }
  return std::nullopt;
}

std::string format_strategy(const Strategy& s) {
  if (s.decisions.empty()) return "-";
  std::string out;
  for (const Decision& d : s.decisions) {
    if (!out.empty()) out += ", ";
    out += d.node.to_string() + ": " + branch_letter(d.choice);
  }
  return out;
}

std::string format_choice_sequence(const GameTree& tree, const Strategy& s) {
  std::string out;
  std::vector<NodeId> stack{tree.root()};
  while (!stack.empty()) {
    const GameNode& n = tree.node(stack.back());
    stack.pop_back();
    if (n.connective == Connective::kAtom) continue;
    if (n.connective == Connective::kNot) {
      stack.push_back(n.children[0]);
      continue;
    }
    if (auto pick = s.choice_at(n.path)) {
      if (!out.empty()) out += '-';
      out += branch_letter(*pick);
      stack.push_back(n.children[static_cast<int>(*pick)]);
    } else {
      stack.push_back(n.children[1]);
      stack.push_back(n.children[0]);
    }
  }
  return out.empty() ? "-" : out;
}

nlohmann::json strategy_to_json(const LogicSpec& spec, const Strategy& s) {
  nlohmann::json choices = nlohmann::json::array();
  for (const Decision& d : s.decisions) {
    choices.push_back({{"path", d.node.to_string()},
                       {"choice", std::string(1, branch_letter(d.choice))}});
  }
  return {{"owner", spec.role_name(s.owner)}, {"choices", std::move(choices)}};
}

std::vector<NodeId> decision_nodes(const GameTree& tree, Player player) {
  std::vector<NodeId> out;
  for (NodeId id : tree.binary_nodes()) {
    if (!player.home.is_classical()) {
      out.push_back(id);
      continue;
    }
    const GameNode& n = tree.node(id);
    if (n.role_map.player_of(classical_mover(n.connective)) == player) out.push_back(id);
  }
  return out;
}

// ── Backward induction ──────────────────────────────────────────────────────

std::vector<WinProfile> node_profiles(const LogicSpec& spec, const GameTree& tree,
                                      std::span<const TruthValue> atom_values) {
  const Role v = Role::verifier();
  const Role f = Role::falsifier();
  std::vector<WinProfile> out(tree.size());
  // Children follow their parent in pre-order.
  for (NodeId id = static_cast<NodeId>(tree.size()); id-- > 0;) {
    const GameNode& n = tree.node(id);
    RoleSet w;
    switch (n.connective) {
      case Connective::kAtom: {
        TruthValue value = atom_values[n.atom];
        if (!spec.has_value(value)) throw AlienValue("value outside the alphabet");
        w.insert(spec.role_forcing(value));
        break;
      }
      case Connective::kNot: {
        const RoleSet& c = out[n.children[0]].winners;
        w = c;
        w.erase(v);
        w.erase(f);
        if (c.contains(v)) w.insert(f);
        if (c.contains(f)) w.insert(v);
        break;
      }
      case Connective::kAnd:
      case Connective::kOr: {
        const RoleSet& l = out[n.children[0]].winners;
        const RoleSet& r = out[n.children[1]].winners;
        // Infectors pick at every binary node.
        w = RoleSet::from_bits(static_cast<std::uint16_t>((l.bits() | r.bits()) & ~0b11u));
        const Role mover = classical_mover(n.connective);
        const Role other = mover.swapped();
        if (l.contains(mover) || r.contains(mover)) w.insert(mover);
        if (l.contains(other) && r.contains(other)) w.insert(other);
        break;
      }
    }
    out[id].winners = w;
  }
  return out;
}

WinProfile win_profile(const LogicSpec& spec, const Formula& f, const Valuation& v) {
  GameTree tree(f);
  return node_profiles(spec, tree, tree.bind(spec, v))[tree.root()];
}

Solution solve_value(const LogicSpec& spec, const DominanceOrder& order,
                     const WinProfile& profile) {
  Role dominant = dominant_role(order, profile);
  return Solution{spec.value_forced_by(dominant), dominant};
}

Solution solve_value(const LogicSpec& spec, const Formula& f, const Valuation& v) {
  return solve_value(spec, DominanceOrder::of(spec), win_profile(spec, f, v));
}

Strategy greedy_strategy(const LogicSpec& spec, const GameTree& tree,
                         std::span<const WinProfile> profiles, Role role) {
  if (!spec.has_role(role)) throw std::invalid_argument("role outside the logic");
  const Player player{role};
  Strategy s{role, {}};
  for (NodeId id : decision_nodes(tree, player)) {
    const GameNode& n = tree.node(id);
    const Role seat = n.role_map.role_of(player);
    Branch pick = Branch::kLeft;
    if (!profiles[n.children[0]].wins(seat) && profiles[n.children[1]].wins(seat)) {
      pick = Branch::kRight;
    }
    s.decisions.push_back({n.path, pick});
  }
  return s;
}

Strategy extract_strategy(const LogicSpec& spec, const Formula& f, const Valuation& v,
                          Role role) {
  GameTree tree(f);
  auto profiles = node_profiles(spec, tree, tree.bind(spec, v));
  if (!profiles[tree.root()].wins(role)) {
    throw NoWinningStrategy(spec.role_name(role) + " has no winning strategy");
  }
  return greedy_strategy(spec, tree, profiles, role);
}

// ── Strategy space ──────────────────────────────────────────────────────────

StrategySpace::StrategySpace(const LogicSpec& spec, const GameTree& tree,
                             std::uint64_t profile_cap)
    : spec_(spec), tree_(tree) {
  const std::size_t binary = tree_.binary_nodes().size();
  const std::uint64_t required =
      binary >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << binary);
  if (required > profile_cap) throw BudgetExceeded(required, profile_cap);

  for (const Role& r : spec_.roles()) {
    decisions_[r.index()] = decision_nodes(tree_, Player{r});
    auto& slots = slot_[r.index()];
    slots.assign(tree_.size(), -1);
    for (std::size_t j = 0; j < decisions_[r.index()].size(); ++j) {
      slots[decisions_[r.index()][j]] = static_cast<int>(j);
    }
  }

  const std::uint32_t nv = strategy_count(Role::verifier());
  const std::uint32_t nf = strategy_count(Role::falsifier());
  classical_.resize(static_cast<std::size_t>(nv) * nf);
  for (std::uint32_t a = 0; a < nv; ++a) {
    for (std::uint32_t b = 0; b < nf; ++b) classical_[a * nf + b] = replay_classical(a, b);
  }
  replayed_ += classical_.size();

  infector_.resize(spec_.infectious_count());
  for (int rank = 1; rank <= spec_.infectious_count(); ++rank) {
    auto& table = infector_[rank - 1];
    const std::uint32_t n = strategy_count(Role::infector(rank));
    table.resize(n);
    for (std::uint32_t s = 0; s < n; ++s) table[s] = replay_infector(rank, s);
    replayed_ += n;
  }
}

std::uint32_t StrategySpace::strategy_count(Role r) const {
  return std::uint32_t{1} << decisions(r).size();
}

const std::vector<NodeId>& StrategySpace::decisions(Role r) const {
  if (!spec_.has_role(r)) throw std::invalid_argument("role outside the logic");
  return decisions_[r.index()];
}

std::optional<Role> StrategySpace::controller(Role r) const {
  if (r.is_classical()) return r.swapped();
  return std::nullopt;
}

Branch StrategySpace::pick(Role r, std::uint32_t index, NodeId node) const {
  const int j = slot_[r.index()][node];
  if (j < 0) throw std::logic_error("node is not a decision node of this role");
  const std::size_t d = decisions_[r.index()].size();
  return static_cast<Branch>((index >> (d - 1 - static_cast<std::size_t>(j))) & 1u);
}

NodeId StrategySpace::replay_classical(std::uint32_t verifier, std::uint32_t falsifier) const {
  TokenSet ts;
  for (const Position& p : initial_token_set(spec_, tree_)) {
    if (p.role.is_classical()) ts.insert(p);
  }
  while (!is_terminal(tree_, ts)) {
    const Position& p = ts[0];
    Choices choices;
    if (tree_.is_binary(p.node)) {
      const Player owner = p.role_map.player_of(p.role);
      const std::uint32_t index = owner.home == Role::verifier() ? verifier : falsifier;
      choices.set(p.role, pick(owner.home, index, p.node));
    }
    ts = step_run(spec_, tree_, ts, choices);
  }
  return ts[0].node;
}

NodeId StrategySpace::replay_infector(int rank, std::uint32_t index) const {
  const Role me = Role::infector(rank);
  TokenSet ts{Position{me, tree_.root(), tree_.node(tree_.root()).role_map}};
  while (!is_terminal(tree_, ts)) {
    const Position& p = ts[0];
    Choices choices;
    if (tree_.is_binary(p.node)) choices.set(me, pick(me, index, p.node));
    ts = step_run(spec_, tree_, ts, choices);
  }
  return ts[0].node;
}

NodeId StrategySpace::outcome(Role r, std::uint32_t mine, std::uint32_t theirs) const {
  const std::uint32_t nf = strategy_count(Role::falsifier());
  switch (r.kind) {
    case Role::Kind::kVerifier:
      return classical_.at(static_cast<std::size_t>(mine) * nf + theirs);
    case Role::Kind::kFalsifier:
      return classical_.at(static_cast<std::size_t>(theirs) * nf + mine);
    case Role::Kind::kInfector:
      return infector_.at(r.rank - 1).at(mine);
  }
  return kNoNode;
}

std::vector<bool> StrategySpace::winning_leaves(Role r,
                                                std::span<const TruthValue> atom_values) const {
  std::vector<bool> good(tree_.size(), false);
  for (NodeId leaf : tree_.leaves()) {
    good[leaf] = player_wins_at(spec_, tree_, Player{r}, leaf, atom_values);
  }
  return good;
}

Strategy StrategySpace::strategy(Role r, std::uint32_t index) const {
  if (index >= strategy_count(r)) throw std::out_of_range("strategy index");
  Strategy s{r, {}};
  for (NodeId id : decisions(r)) s.decisions.push_back({tree_.node(id).path, pick(r, index, id)});
  return s;
}

std::optional<std::uint32_t> StrategySpace::index_of(const Strategy& s) const {
  const auto& nodes = decisions(s.owner);
  if (nodes.size() != s.decisions.size()) return std::nullopt;
  std::uint32_t index = 0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (tree_.node(nodes[j]).path != s.decisions[j].node) return std::nullopt;
    index = (index << 1) | static_cast<std::uint32_t>(s.decisions[j].choice);
  }
  return index;
}

// ── Brute force ─────────────────────────────────────────────────────────────

WinProfile brute_force_profile(const StrategySpace& space,
                               std::span<const TruthValue> atom_values) {
  WinProfile profile;
  for (const Role& r : space.spec().roles()) {
    const std::vector<bool> good = space.winning_leaves(r, atom_values);
    const auto ctrl = space.controller(r);
    const std::uint32_t theirs = ctrl ? space.strategy_count(*ctrl) : 1;
    const std::uint32_t mine = space.strategy_count(r);
    for (std::uint32_t s = 0; s < mine; ++s) {
      bool beats_all = true;
      for (std::uint32_t t = 0; t < theirs && beats_all; ++t) {
        beats_all = good[space.outcome(r, s, t)];
      }
      if (beats_all) {
        profile.winners.insert(r);
        break;
      }
    }
  }
  return profile;
}

WinProfile brute_force_profile(const LogicSpec& spec, const Formula& f, const Valuation& v,
                               std::uint64_t profile_cap) {
  GameTree tree(f);
  auto values = tree.bind(spec, v);
  StrategySpace space(spec, tree, profile_cap);
  return brute_force_profile(space, values);
}

}  // namespace nsgame
