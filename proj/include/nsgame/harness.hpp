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

// Exhaustive checking of the game semantics against the truth tables.
//
// Formulas are enumerated over a fixed atom list (p, q, r, ...) by exact
// depth: all depth-0 formulas, then all formulas of depth exactly 1, and
// so on. Within a depth, negations come first, then conjunctions, then
// disjunctions, with operands taken in enumeration order. Every formula
// is checked under every valuation of its own atoms.
//
// Report ids:
//   correctness         game value equals the truth-table value
//   exclusion           Verifier and Falsifier never both win
//   determinacy         exactly one dominant winner
//   infectiousness      an infectious atom of rank r forces the highest
//                       such value (infectious chains only)
//   oracle-equivalence  brute-force strategy enumeration agrees with the
//                       recursive profile (instances within budget)
//   table-derivation    tables solved from two-atom games equal the
//                       stored tables

#ifndef NSGAME_HARNESS_HPP_
#define NSGAME_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"
#include "nsgame/formula.hpp"
#include "nsgame/logic.hpp"

namespace nsgame {

// Atom names used by the enumerator: p, q, r, s, ... (at most 26).
std::vector<std::string> sweep_atoms(int count);

// Number of formulas of depth <= `depth` over `atoms` atoms, saturating at
// UINT64_MAX.
std::uint64_t formula_count(int atoms, int depth);

class FormulaEnumerator {
 public:
  FormulaEnumerator(int atoms, int max_depth);

  std::optional<Formula> next();
  std::uint64_t produced() const { return produced_; }

 private:
  bool advance_depth();

  std::vector<Formula> atoms_;
  int max_depth_;
  int depth_ = 0;
  // Every formula of depth < depth_, in enumeration order; the prefix of
  // length boundary_ has depth < depth_ - 1.
  std::vector<Formula> shallower_;
  std::size_t boundary_ = 0;
  // Formulas of depth exactly depth_ produced so far.
  std::vector<Formula> current_;
  // Cursor within the current depth: phase 0 negations, 1 conjunctions,
  // 2 disjunctions.
  int phase_ = 0;
  std::size_t i_ = 0;
  std::size_t j_ = 0;
  std::uint64_t produced_ = 0;
};

std::vector<Formula> enumerate_formulas(int atoms, int depth,
                                        std::size_t cap = static_cast<std::size_t>(-1));

struct SweepConfig {
  std::string logic = "bh3";
  int atoms = 3;
  int depth = 4;
  std::size_t max_formulas = 50000;
  // Brute-force cross-checks run only on formulas with at most this many
  // pure profiles.
  std::uint64_t brute_force_budget = 64;
  bool check_tables = true;
  // Stop at the first counterexample of any report.
  bool fail_fast = false;
};

struct Counterexample {
  std::string formula;
  std::string valuation;
  std::string expected;
  std::string got;
};

struct TheoremReport {
  std::string id;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::uint64_t failures = 0;
  // The first failures in enumeration order (at most kKeptCounterexamples).
  std::vector<Counterexample> counterexamples;

  bool passed() const { return failures == 0; }
};

inline constexpr std::size_t kKeptCounterexamples = 16;

struct SweepResult {
  std::string logic;
  std::uint64_t formulas = 0;
  std::uint64_t instances = 0;
  std::vector<TheoremReport> reports;

  bool passed() const;
  const TheoremReport* find(const std::string& id) const;
};

// Throws std::invalid_argument for an unknown logic or bad bounds.
SweepResult run_sweep(const SweepConfig& cfg);
// Sweeps `spec` directly; cfg.logic is ignored. Used with corrupted tables.
SweepResult run_sweep(const LogicSpec& spec, const SweepConfig& cfg);

std::string format_sweep(const SweepResult& result);
// Stable keys: logic, formulas, instances, passed, reports[] with id,
// checked, skipped, failures, passed, counterexamples[] with formula,
// valuation, expected, got.
nlohmann::json sweep_to_json(const SweepResult& result);

}  // namespace nsgame

#endif  // NSGAME_HARNESS_HPP_
