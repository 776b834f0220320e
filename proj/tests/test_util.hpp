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

// Helpers shared by the test binaries.

#ifndef NSGAME_TESTS_TEST_UTIL_HPP_
#define NSGAME_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nsgame/formula.hpp"
#include "nsgame/game.hpp"
#include "nsgame/logic.hpp"
#include "nsgame/solver.hpp"

namespace nsgame_test {

// Random formula of depth at most `depth` over atoms p, q, r, ...
inline nsgame::Formula random_formula(std::mt19937& rng, int depth, int atoms) {
  using nsgame::Formula;
  std::uniform_int_distribution<int> pick_atom(0, atoms - 1);
  std::uniform_int_distribution<int> pick_kind(0, 3);
  const int kind = depth == 0 ? 0 : pick_kind(rng);
  switch (kind) {
    case 0:
      return Formula::atom(std::string(1, static_cast<char>('p' + pick_atom(rng))));
    case 1:
      return Formula::negation(random_formula(rng, depth - 1, atoms));
    case 2:
      return Formula::conjunction(random_formula(rng, depth - 1, atoms),
                                  random_formula(rng, depth - 1, atoms));
    default:
      return Formula::disjunction(random_formula(rng, depth - 1, atoms),
                                  random_formula(rng, depth - 1, atoms));
  }
}

// Calls `fn` with every valuation of `atoms` over the logic's alphabet.
inline void for_each_valuation(const nsgame::LogicSpec& spec,
                               const std::vector<std::string>& atoms,
                               const std::function<void(const nsgame::Valuation&)>& fn) {
  std::vector<int> digits(atoms.size(), 0);
  for (;;) {
    nsgame::Valuation v;
    for (std::size_t i = 0; i < atoms.size(); ++i) v.set(atoms[i], spec.value_at(digits[i]));
    fn(v);
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (++digits[i] < spec.value_count()) break;
      digits[i] = 0;
    }
    if (i == digits.size()) return;
  }
}

// Players (by root seat) whose condition holds at the end of `run`. Both
// classical players are judged at the classical strand's atom, each by
// the seat it holds there. Computed from the valuation directly.
inline nsgame::RoleSet winning_players(const nsgame::LogicSpec& spec,
                                       const nsgame::GameTree& tree, const nsgame::Run& run,
                                       const nsgame::Valuation& v) {
  using namespace nsgame;
  RoleSet players;
  for (const Position& p : run.back()) {
    const GameNode& leaf = tree.node(p.node);
    const TruthValue value = v.at(leaf.formula.name());
    std::vector<Role> homes;
    if (p.role.is_classical()) {
      homes = {Role::verifier(), Role::falsifier()};
    } else {
      homes = {p.role};
    }
    for (const Role& home : homes) {
      const Role seat = leaf.role_map.role_of(Player{home});
      bool won = false;
      if (seat == Role::verifier()) won = value == TruthValue::truth();
      if (seat == Role::falsifier()) won = value == TruthValue::falsity();
      if (!seat.is_classical()) won = value == TruthValue::infectious(seat.rank);
      if (won) players.insert(home);
    }
  }
  (void)spec;
  return players;
}

// Joint enumeration oracle: plays every full pure profile (one strategy
// per player) through play()/step_run(). A player has a winning strategy
// iff one of its strategies wins against every combination of the other
// players' strategies. No strand independence is assumed.
inline nsgame::WinProfile joint_profile(const nsgame::LogicSpec& spec, const nsgame::Formula& f,
                                        const nsgame::Valuation& v) {
  using namespace nsgame;
  GameTree tree(f);
  const std::vector<Role> roles = spec.roles();
  std::vector<std::vector<NodeId>> nodes;
  for (const Role& r : roles) nodes.push_back(decision_nodes(tree, Player{r}));

  std::vector<std::uint32_t> counts;
  std::uint64_t total = 1;
  for (const auto& n : nodes) {
    counts.push_back(std::uint32_t{1} << n.size());
    total *= counts.back();
  }

  // outcome[profile] = set of winning players; profile index mixes radices.
  std::vector<RoleSet> outcome(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint32_t> picks(roles.size());
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < roles.size(); ++i) {
      picks[i] = static_cast<std::uint32_t>(rest % counts[i]);
      rest /= counts[i];
    }
    Run run = play(spec, tree, [&](Player p, NodeId node) {
      for (std::size_t i = 0; i < roles.size(); ++i) {
        if (roles[i] != p.home) continue;
        const auto& mine = nodes[i];
        for (std::size_t j = 0; j < mine.size(); ++j) {
          if (mine[j] == node) {
            return static_cast<Branch>((picks[i] >> (mine.size() - 1 - j)) & 1u);
          }
        }
      }
      throw std::logic_error("player asked to move outside its decision nodes");
    });
    outcome[code] = winning_players(spec, tree, run, v);
  }

  WinProfile profile;
  std::uint64_t stride = 1;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    for (std::uint32_t s = 0; s < counts[i] && !profile.wins(roles[i]); ++s) {
      bool beats_all = true;
      for (std::uint64_t code = 0; code < total && beats_all; ++code) {
        if ((code / stride) % counts[i] != s) continue;
        beats_all = outcome[code].contains(roles[i]);
      }
      if (beats_all) profile.winners.insert(roles[i]);
    }
    stride *= counts[i];
  }
  return profile;
}

}  // namespace nsgame_test

#endif  // NSGAME_TESTS_TEST_UTIL_HPP_
