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

// Iterated elimination of strictly dominated strategies.
//
// A strategy is winning when it wins against every pure strategy of the
// other controller of its strand. Each round applies two rules, visiting
// the roles from the top dominance stratum down:
//
//   * domination: every live winning strategy of a role is removed when a
//     dominance-superior role still holds a live winning strategy. The
//     eliminator is the first such strategy of the highest such role;
//   * cleanup, once domination has run for every role: a live non-winning
//     strategy that loses against every opposing strategy is strictly
//     dominated by any live winning strategy of the same role, and is
//     removed.
//
// Rounds repeat until nothing changes. The survivor is the first live
// winning strategy of the highest role that still has one.

#ifndef NSGAME_IESDS_HPP_
#define NSGAME_IESDS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"
#include "nsgame/formula.hpp"
#include "nsgame/logic.hpp"
#include "nsgame/solver.hpp"

namespace nsgame {

enum class EliminationReason : std::uint8_t { kDominatedRole, kNeverBestResponse };

struct Elimination {
  int round = 0;
  Strategy eliminated;
  Strategy eliminator;
  EliminationReason reason;
};

struct EliminationTrace {
  std::vector<Elimination> eliminations;
  Strategy survivor;
  TruthValue value;
};

// Owner and value of the survivor, without recording the trace.
struct IesdsOutcome {
  Role owner;
  TruthValue value;
  std::size_t eliminated = 0;
  friend bool operator==(const IesdsOutcome&, const IesdsOutcome&) = default;
};

// Throws BudgetExceeded above `profile_cap`, Indeterminate when no
// winning strategy survives.
EliminationTrace iesds(const LogicSpec& spec, const Formula& f, const Valuation& v,
                       std::uint64_t profile_cap = kDefaultProfileCap);
EliminationTrace iesds(const StrategySpace& space, std::span<const TruthValue> atom_values);
IesdsOutcome iesds_outcome(const StrategySpace& space,
                           std::span<const TruthValue> atom_values);

std::string reason_text(EliminationReason reason);

// One line per elimination:
//   round 1: ELIMINATE <role> <picks> then the eliminator and reason
// followed by the survivor and its value.
std::string format_trace(const LogicSpec& spec, const GameTree& tree,
                         const EliminationTrace& trace);
nlohmann::json trace_to_json(const LogicSpec& spec, const GameTree& tree,
                             const EliminationTrace& trace);

}  // namespace nsgame

#endif  // NSGAME_IESDS_HPP_
