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

#include "nsgame/iesds.hpp"

#include <array>
#include <optional>

#include "nsgame/errors.hpp"

namespace nsgame {

namespace {

struct RoleState {
  std::vector<bool> winning;
  std::vector<bool> hopeless;  // loses against every opposing strategy
  std::vector<bool> live;

  std::optional<std::uint32_t> first_live_winner() const {
    for (std::uint32_t s = 0; s < live.size(); ++s) {
      if (live[s] && winning[s]) return s;
    }
    return std::nullopt;
  }
};

RoleState classify(const StrategySpace& space, Role r,
                   std::span<const TruthValue> atom_values) {
  const std::vector<bool> good = space.winning_leaves(r, atom_values);
  const auto ctrl = space.controller(r);
  const std::uint32_t theirs = ctrl ? space.strategy_count(*ctrl) : 1;
  const std::uint32_t mine = space.strategy_count(r);
  RoleState st{std::vector<bool>(mine), std::vector<bool>(mine), std::vector<bool>(mine, true)};
  for (std::uint32_t s = 0; s < mine; ++s) {
    bool all = true;
    bool none = true;
    for (std::uint32_t t = 0; t < theirs; ++t) {
      const bool won = good[space.outcome(r, s, t)];
      all = all && won;
      none = none && !won;
    }
    st.winning[s] = all;
    st.hopeless[s] = none;
  }
  return st;
}

// Runs the elimination and returns the survivor. `record(round, role,
// strategy, eliminator role, eliminator strategy, reason)` sees every
// removal in order.
template <typename Record>
std::pair<Role, std::uint32_t> eliminate(const StrategySpace& space,
                                         std::span<const TruthValue> atom_values,
                                         Record&& record) {
  const DominanceOrder order = DominanceOrder::of(space.spec());
  const std::vector<Role>& roles = order.descending();
  std::array<RoleState, kMaxRoles> states;
  for (const Role& r : roles) states[r.index()] = classify(space, r, atom_values);

  for (int round = 1;; ++round) {
    bool changed = false;
    for (const Role& r : roles) {
      RoleState& st = states[r.index()];
      for (const Role& sup : roles) {
        if (!order.dominates(sup, r)) continue;
        auto eliminator = states[sup.index()].first_live_winner();
        if (!eliminator) continue;
        for (std::uint32_t s = 0; s < st.live.size(); ++s) {
          if (!st.live[s] || !st.winning[s]) continue;
          st.live[s] = false;
          changed = true;
          record(round, r, s, sup, *eliminator, EliminationReason::kDominatedRole);
        }
        break;
      }
    }
    for (const Role& r : roles) {
      RoleState& st = states[r.index()];
      auto best = st.first_live_winner();
      if (!best) continue;
      for (std::uint32_t s = 0; s < st.live.size(); ++s) {
        if (!st.live[s] || !st.hopeless[s]) continue;
        st.live[s] = false;
        changed = true;
        record(round, r, s, r, *best, EliminationReason::kNeverBestResponse);
      }
    }
    if (!changed) break;
  }

  for (const Role& r : roles) {
    auto s = states[r.index()].first_live_winner();
    if (!s) continue;
    for (const Role& other : roles) {
      if (other != r && order.level(other) == order.level(r) &&
          states[other.index()].first_live_winner()) {
        throw Indeterminate("winning strategies of equal rank survive elimination");
      }
    }
    return {r, *s};
  }
  throw Indeterminate("no winning strategy survives elimination");
}

}  // namespace

EliminationTrace iesds(const StrategySpace& space, std::span<const TruthValue> atom_values) {
  EliminationTrace trace;
  auto [owner, index] = eliminate(
      space, atom_values,
      [&](int round, Role r, std::uint32_t s, Role by, std::uint32_t e, EliminationReason why) {
        trace.eliminations.push_back({round, space.strategy(r, s), space.strategy(by, e), why});
      });
  trace.survivor = space.strategy(owner, index);
  trace.value = space.spec().value_forced_by(owner);
  return trace;
}

EliminationTrace iesds(const LogicSpec& spec, const Formula& f, const Valuation& v,
                       std::uint64_t profile_cap) {
  GameTree tree(f);
  auto values = tree.bind(spec, v);
  StrategySpace space(spec, tree, profile_cap);
  return iesds(space, values);
}

IesdsOutcome iesds_outcome(const StrategySpace& space,
                           std::span<const TruthValue> atom_values) {
  std::size_t count = 0;
  auto [owner, index] = eliminate(
      space, atom_values,
      [&](int, Role, std::uint32_t, Role, std::uint32_t, EliminationReason) { ++count; });
  (void)index;
  return IesdsOutcome{owner, space.spec().value_forced_by(owner), count};
}

std::string reason_text(EliminationReason reason) {
  switch (reason) {
    case EliminationReason::kDominatedRole:
      return "dominated role";
    case EliminationReason::kNeverBestResponse:
      return "never a best response";
  }
  return "";
}

std::string format_trace(const LogicSpec& spec, const GameTree& tree,
                         const EliminationTrace& trace) {
  // Strategies differing only at unreachable nodes print alike; such
  // neighbours are folded into one counted line.
  std::vector<std::pair<std::string, int>> lines;
  for (const Elimination& e : trace.eliminations) {
    std::string line = "round " + std::to_string(e.round) + ": ELIMINATE " +
                       spec.role_name(e.eliminated.owner) + " " +
                       format_choice_sequence(tree, e.eliminated) + " — dominated by " +
                       spec.role_name(e.eliminator.owner) + " " +
                       format_choice_sequence(tree, e.eliminator) + " (" +
                       reason_text(e.reason) + ")";
    if (!lines.empty() && lines.back().first == line) {
      ++lines.back().second;
    } else {
      lines.emplace_back(std::move(line), 1);
    }
  }
  std::string out;
  for (const auto& [line, count] : lines) {
    out += line;
    if (count > 1) out += " x" + std::to_string(count);
    out += "\n";
  }
  out += "survivor: " + spec.role_name(trace.survivor.owner) + " " +
         format_choice_sequence(tree, trace.survivor) + "\n";
  out += "value: " + spec.value_name(trace.value) + "\n";
  return out;
}

nlohmann::json trace_to_json(const LogicSpec& spec, const GameTree& tree,
                             const EliminationTrace& trace) {
  auto strategy_json = [&](const Strategy& s) {
    nlohmann::json j = strategy_to_json(spec, s);
    j["sequence"] = format_choice_sequence(tree, s);
    return j;
  };
  nlohmann::json rows = nlohmann::json::array();
  for (const Elimination& e : trace.eliminations) {
    rows.push_back({{"round", e.round},
                    {"eliminated", strategy_json(e.eliminated)},
                    {"eliminator", strategy_json(e.eliminator)},
                    {"reason", reason_text(e.reason)}});
  }
  return {{"eliminations", std::move(rows)},
          {"survivor", strategy_json(trace.survivor)},
          {"value", spec.value_name(trace.value)}};
}

}  // namespace nsgame
