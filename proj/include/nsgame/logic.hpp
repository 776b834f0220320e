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

// Truth values, roles and logic descriptions.
//
// Two families are supported:
//
//   * infectious chains BH-k: values T, F and k infectious values ranked
//     1..k. BH3 is k = 1 (N), BH4 is k = 2 (N, S). The highest-ranked
//     infectious operand absorbs every binary connective; negation fixes
//     infectious values.
//   * LP: values T, P, F ordered F < P < T; conjunction is min,
//     disjunction is max, negation fixes P.
//
// Values are indexed densely as T = 0, infectious rank r = r, F = k + 1,
// which is also the row/column order of the printed truth tables.

#ifndef NSGAME_LOGIC_HPP_
#define NSGAME_LOGIC_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nsgame/formula.hpp"

namespace nsgame {

inline constexpr int kMaxInfectious = 8;
inline constexpr int kMaxRoles = kMaxInfectious + 2;

struct TruthValue {
  enum class Kind : std::uint8_t { kTrue, kFalse, kInfectious };

  Kind kind = Kind::kTrue;
  int rank = 0;  // >= 1 for infectious values, 0 otherwise

  static constexpr TruthValue truth() { return {Kind::kTrue, 0}; }
  static constexpr TruthValue falsity() { return {Kind::kFalse, 0}; }
  static constexpr TruthValue infectious(int r) { return {Kind::kInfectious, r}; }

  bool is_classical() const { return kind != Kind::kInfectious; }

  friend constexpr auto operator<=>(const TruthValue&, const TruthValue&) = default;
};

// A role in the semantic game. Players are identified by the role they
// hold at the root; see RoleMap in game.hpp.
struct Role {
  enum class Kind : std::uint8_t { kVerifier, kFalsifier, kInfector };

  Kind kind = Kind::kVerifier;
  int rank = 0;  // >= 1 for infectors

  static constexpr Role verifier() { return {Kind::kVerifier, 0}; }
  static constexpr Role falsifier() { return {Kind::kFalsifier, 0}; }
  static constexpr Role infector(int r) { return {Kind::kInfector, r}; }

  bool is_classical() const { return kind != Kind::kInfector; }
  // Verifier <-> Falsifier; infectors are fixed.
  Role swapped() const;

  // Dense index: Verifier 0, Falsifier 1, infector r -> r + 1.
  int index() const;
  static Role from_index(int index);

  friend constexpr auto operator<=>(const Role&, const Role&) = default;
};

enum class Flavor : std::uint8_t { kInfectiousChain, kParadox };

// Dense truth tables over value indices. Binary tables are row-major:
// entry (a, b) lives at a * value_count + b.
struct TruthTables {
  int value_count = 0;
  std::vector<std::uint8_t> negation;
  std::vector<std::uint8_t> conjunction;
  std::vector<std::uint8_t> disjunction;

  int negate(int a) const { return negation[a]; }
  int conjoin(int a, int b) const { return conjunction[a * value_count + b]; }
  int disjoin(int a, int b) const { return disjunction[a * value_count + b]; }

  friend bool operator==(const TruthTables&, const TruthTables&) = default;
};

class LogicSpec {
 public:
  // Presets. bh3() uses Bochvar's designated set {T}.
  static LogicSpec bochvar();
  static LogicSpec hallden();
  static LogicSpec bh3();
  static LogicSpec bh4();
  static LogicSpec lp();
  // Infectious chain with k ranked values and tables generated by the
  // highest-rank-absorbs rule. 1 <= k <= kMaxInfectious.
  static LogicSpec bhn(int k);

  // Accepts bh3, bochvar, hallden, bh4, lp and bhn:<k> (case-insensitive).
  // Returns nullopt for unknown names.
  static std::optional<LogicSpec> preset(std::string_view name);

  const std::string& name() const { return name_; }
  Flavor flavor() const { return flavor_; }
  // k for infectious chains, 1 for LP (its single slot holds P).
  int infectious_count() const { return infectious_; }

  // ── values ──
  int value_count() const { return infectious_ + 2; }
  const std::vector<TruthValue>& values() const { return values_; }
  bool has_value(TruthValue v) const;
  int value_index(TruthValue v) const;  // throws AlienValue
  TruthValue value_at(int index) const { return values_.at(index); }
  // T, F, N, S, P, or N1..Nk for chains longer than two.
  std::string value_name(TruthValue v) const;
  std::optional<TruthValue> parse_value(std::string_view letter) const;

  // ── roles ──
  int role_count() const { return infectious_ + 2; }
  std::vector<Role> roles() const;
  bool has_role(Role r) const;
  // Verifier, Falsifier, Dominator, Dictator, Infector<r> (r >= 3),
  // Paradoxifier (LP).
  std::string role_name(Role r) const;
  std::optional<Role> parse_role(std::string_view name) const;
  // The value a role forces when it determines the outcome.
  TruthValue value_forced_by(Role r) const;
  Role role_forcing(TruthValue v) const;

  const std::set<TruthValue>& designated() const { return designated_; }

  const TruthTables& tables() const { return tables_; }
  // Copy of this logic with different stored tables (used to inject
  // faults into the oracle).
  LogicSpec with_tables(TruthTables tables) const;

 private:
  LogicSpec(std::string name, Flavor flavor, int infectious,
            std::set<TruthValue> designated, TruthTables tables);

  std::string name_;
  Flavor flavor_;
  int infectious_;
  std::vector<TruthValue> values_;
  std::set<TruthValue> designated_;
  TruthTables tables_;
};

// Tables built by rule (highest-rank infection wins) for a chain of k.
TruthTables chain_tables(int k);

bool is_designated(const LogicSpec& spec, TruthValue v);

// Atom assignment. The model's domain carries no structure in the
// propositional games; it is kept as a label only.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<std::pair<const std::string, TruthValue>> init)
      : values_(init) {}

  void set(const std::string& atom, TruthValue v) { values_[atom] = v; }
  std::optional<TruthValue> find(const std::string& atom) const;
  // Throws UnboundAtom.
  TruthValue at(const std::string& atom) const;
  std::size_t size() const { return values_.size(); }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  const std::string& domain() const { return domain_; }
  void set_domain(std::string label) { domain_ = std::move(label); }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.values_ == b.values_;
  }

 private:
  std::map<std::string, TruthValue> values_;
  std::string domain_ = "S";
};

// "p=T,q=N,r=F"
Valuation parse_valuation(const LogicSpec& spec, std::string_view text);
// One `atom = VALUE` per line, '#' starts a comment.
Valuation read_valuation(const LogicSpec& spec, std::istream& in);
std::string format_valuation(const LogicSpec& spec, const Valuation& v);

// Compositional evaluation through the stored tables. This is the oracle
// the game solver is checked against.
TruthValue eval_oracle(const LogicSpec& spec, const Formula& f,
                       const Valuation& v);

// Tables recomputed by solving the two-atom game for every value pair.
// Defined in table_derivation.cpp on top of the solver.
TruthTables derive_tables(const LogicSpec& spec);

// Text grids for negation, conjunction and disjunction.
std::string render_tables(const LogicSpec& spec, const TruthTables& tables);

}  // namespace nsgame

#endif  // NSGAME_LOGIC_HPP_
