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

#include "nsgame/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "nsgame/errors.hpp"
#include "nsgame/game.hpp"
#include "nsgame/solver.hpp"

namespace nsgame {

std::vector<std::string> sweep_atoms(int count) {
  static constexpr std::string_view kLetters = "pqrstuvwxyzabcdefghijklmno";
  if (count < 1 || count > static_cast<int>(kLetters.size())) {
    throw std::invalid_argument("atom count must be between 1 and 26");
  }
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.emplace_back(1, kLetters[i]);
  return out;
}

std::uint64_t formula_count(int atoms, int depth) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const auto a = static_cast<std::uint64_t>(atoms);
  std::uint64_t c = a;
  for (int d = 0; d < depth; ++d) {
    if (c > (kMax - a - c) / 2 / std::max<std::uint64_t>(c, 1)) return kMax;
    c = a + c + 2 * c * c;
  }
  return c;
}

// ── Enumeration ─────────────────────────────────────────────────────────────

FormulaEnumerator::FormulaEnumerator(int atoms, int max_depth) : max_depth_(max_depth) {
  if (max_depth < 0) throw std::invalid_argument("depth must be non-negative");
  for (const std::string& name : sweep_atoms(atoms)) atoms_.push_back(Formula::atom(name));
}

bool FormulaEnumerator::advance_depth() {
  if (depth_ >= max_depth_) return false;
  if (depth_ == 0) {
    shallower_ = atoms_;
    boundary_ = 0;
  } else {
    boundary_ = shallower_.size();
    shallower_.insert(shallower_.end(), current_.begin(), current_.end());
    current_.clear();
  }
  ++depth_;
  phase_ = 0;
  i_ = boundary_;
  j_ = 0;
  return true;
}

std::optional<Formula> FormulaEnumerator::next() {
  if (depth_ == 0) {
    if (i_ < atoms_.size()) {
      ++produced_;
      return atoms_[i_++];
    }
    if (!advance_depth()) return std::nullopt;
  }
  const std::size_t n = shallower_.size();
  for (;;) {
    std::optional<Formula> out;
    if (phase_ == 0) {
      if (i_ < n) {
        out = Formula::negation(shallower_[i_++]);
      } else {
        phase_ = 1;
        i_ = 0;
        j_ = 0;
        continue;
      }
    } else if (phase_ <= 2) {
      if (i_ >= n) {
        ++phase_;
        i_ = 0;
        j_ = 0;
        continue;
      }
      // At least one operand has to come from the newest layer.
      if (i_ < boundary_ && j_ < boundary_) j_ = boundary_;
      if (j_ >= n) {
        ++i_;
        j_ = 0;
        continue;
      }
      const Formula& l = shallower_[i_];
      const Formula& r = shallower_[j_++];
      out = phase_ == 1 ? Formula::conjunction(l, r) : Formula::disjunction(l, r);
    } else {
      if (!advance_depth()) return std::nullopt;
      return next();
    }
    if (depth_ < max_depth_) current_.push_back(*out);
    ++produced_;
    return out;
  }
}

std::vector<Formula> enumerate_formulas(int atoms, int depth, std::size_t cap) {
  FormulaEnumerator e(atoms, depth);
  std::vector<Formula> out;
  while (out.size() < cap) {
    auto f = e.next();
    if (!f) break;
    out.push_back(std::move(*f));
  }
  return out;
}

// ── Sweep ───────────────────────────────────────────────────────────────────

bool SweepResult::passed() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const TheoremReport& r) { return r.passed(); });
}

const TheoremReport* SweepResult::find(const std::string& id) const {
  for (const TheoremReport& r : reports) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

namespace {

TheoremReport make_report(std::string id) {
  TheoremReport r;
  r.id = std::move(id);
  return r;
}

void fail(TheoremReport& report, Counterexample c) {
  ++report.failures;
  if (report.counterexamples.size() < kKeptCounterexamples) {
    report.counterexamples.push_back(std::move(c));
  }
}

std::string solution_text(const LogicSpec& spec, TruthValue value, Role role) {
  return spec.value_name(value) + " (" + spec.role_name(role) + ")";
}

void check_tables(const LogicSpec& spec, TheoremReport& report) {
  const TruthTables& stored = spec.tables();
  const TruthTables derived = derive_tables(spec);
  const int n = spec.value_count();
  auto check = [&](const std::string& formula, const std::string& valuation, int want,
                   int got) {
    ++report.checked;
    if (want != got) {
      fail(report, {formula, valuation, spec.value_name(spec.value_at(want)),
                    spec.value_name(spec.value_at(got))});
    }
  };
  for (int a = 0; a < n; ++a) {
    const std::string x = "x=" + spec.value_name(spec.value_at(a));
    check("~x", x, stored.negate(a), derived.negate(a));
    for (int b = 0; b < n; ++b) {
      const std::string xy = x + ",y=" + spec.value_name(spec.value_at(b));
      check("(x & y)", xy, stored.conjoin(a, b), derived.conjoin(a, b));
      check("(x | y)", xy, stored.disjoin(a, b), derived.disjoin(a, b));
    }
  }
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg) {
  auto spec = LogicSpec::preset(cfg.logic);
  if (!spec) throw std::invalid_argument("unknown logic '" + cfg.logic + "'");
  return run_sweep(*spec, cfg);
}

SweepResult run_sweep(const LogicSpec& spec, const SweepConfig& cfg) {
  if (cfg.atoms < 1) throw std::invalid_argument("atom count must be positive");
  if (cfg.depth < 0) throw std::invalid_argument("depth must be non-negative");

  const bool chain = spec.flavor() == Flavor::kInfectiousChain;
  SweepResult result;
  result.logic = spec.name();
  TheoremReport correctness = make_report("correctness");
  TheoremReport exclusion = make_report("exclusion");
  TheoremReport determinacy = make_report("determinacy");
  TheoremReport infectiousness = make_report("infectiousness");
  TheoremReport equivalence = make_report("oracle-equivalence");
  const DominanceOrder order = DominanceOrder::of(spec);
  const int n = spec.value_count();
  const Role v_role = Role::verifier();
  const Role f_role = Role::falsifier();

  FormulaEnumerator formulas(cfg.atoms, cfg.depth);
  bool stop = false;
  while (!stop && result.formulas < cfg.max_formulas) {
    auto next = formulas.next();
    if (!next) break;
    const Formula& f = *next;
    ++result.formulas;
    const GameTree tree(f);
    const std::string text = print(f);
    const std::vector<std::string>& names = tree.atoms();
    const std::size_t binary = tree.binary_nodes().size();

    std::optional<StrategySpace> space;
    if (binary < 63 && (std::uint64_t{1} << binary) <= cfg.brute_force_budget) {
      space.emplace(spec, tree, cfg.brute_force_budget);
    }

    std::vector<int> digits(names.size(), 0);
    std::vector<TruthValue> values(names.size());
    for (bool more = true; more && !stop;) {
      Valuation v;
      for (std::size_t i = 0; i < names.size(); ++i) {
        values[i] = spec.value_at(digits[i]);
        v.set(names[i], values[i]);
      }
      ++result.instances;
      const std::size_t before = correctness.failures + exclusion.failures +
                                 determinacy.failures + infectiousness.failures +
                                 equivalence.failures;
      const std::string val_text = format_valuation(spec, v);
      auto counterexample = [&](std::string expected, std::string got) {
        return Counterexample{text, val_text, std::move(expected), std::move(got)};
      };

      const WinProfile profile = node_profiles(spec, tree, values)[tree.root()];

      ++exclusion.checked;
      if (profile.wins(v_role) && profile.wins(f_role)) {
        fail(exclusion, counterexample("at most one classical winner",
                                       format_profile(spec, profile)));
      }

      std::optional<Solution> solution;
      ++determinacy.checked;
      try {
        solution = solve_value(spec, order, profile);
      } catch (const Indeterminate&) {
        fail(determinacy, counterexample("a unique dominant winner",
                                         format_profile(spec, profile)));
      }

      ++correctness.checked;
      std::string expected;
      try {
        expected = spec.value_name(eval_oracle(spec, f, v));
      } catch (const Error& e) {
        expected = std::string("error: ") + e.what();
      }
      const std::string got = solution ? spec.value_name(solution->value) : "indeterminate";
      if (expected != got) fail(correctness, counterexample(expected, got));

      if (chain) {
        int top = 0;
        for (const TruthValue& value : values) {
          if (value.kind == TruthValue::Kind::kInfectious) top = std::max(top, value.rank);
        }
        if (top > 0) {
          ++infectiousness.checked;
          const TruthValue want = TruthValue::infectious(top);
          if (!solution || solution->value != want || solution->dominant != Role::infector(top)) {
            fail(infectiousness,
                 counterexample(solution_text(spec, want, Role::infector(top)),
                                solution ? solution_text(spec, solution->value, solution->dominant)
                                         : "indeterminate"));
          }
        }
      }

      if (space) {
        ++equivalence.checked;
        const WinProfile brute = brute_force_profile(*space, values);
        if (brute != profile) {
          fail(equivalence,
               counterexample(format_profile(spec, profile), format_profile(spec, brute)));
        }
      } else {
        ++equivalence.skipped;
      }

      const std::size_t after = correctness.failures + exclusion.failures +
                                determinacy.failures + infectiousness.failures +
                                equivalence.failures;
      if (cfg.fail_fast && after > before) stop = true;

      more = false;
      for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < n) {
          more = true;
          break;
        }
        digits[i] = 0;
      }
    }
  }

  result.reports.push_back(std::move(correctness));
  result.reports.push_back(std::move(exclusion));
  result.reports.push_back(std::move(determinacy));
  if (chain) result.reports.push_back(std::move(infectiousness));
  result.reports.push_back(std::move(equivalence));
  if (cfg.check_tables) {
    TheoremReport tables = make_report("table-derivation");
    check_tables(spec, tables);
    result.reports.push_back(std::move(tables));
  }
  return result;
}

// ── Rendering ───────────────────────────────────────────────────────────────

std::string format_sweep(const SweepResult& result) {
  std::string out = "logic " + result.logic + ": " + std::to_string(result.formulas) +
                    " formulas, " + std::to_string(result.instances) + " instances\n";
  char line[160];
  for (const TheoremReport& r : result.reports) {
    std::snprintf(line, sizeof line, "  %-20s checked %10llu  skipped %8llu  failures %6llu  %s\n",
                  r.id.c_str(), static_cast<unsigned long long>(r.checked),
                  static_cast<unsigned long long>(r.skipped),
                  static_cast<unsigned long long>(r.failures), r.passed() ? "PASS" : "FAIL");
    out += line;
    for (const Counterexample& c : r.counterexamples) {
      out += "    " + c.formula + " under " + c.valuation + ": expected " + c.expected +
             ", got " + c.got + "\n";
    }
  }
  out += std::string("overall: ") + (result.passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

nlohmann::json sweep_to_json(const SweepResult& result) {
  nlohmann::json reports = nlohmann::json::array();
  for (const TheoremReport& r : result.reports) {
    nlohmann::json cex = nlohmann::json::array();
    for (const Counterexample& c : r.counterexamples) {
      cex.push_back({{"formula", c.formula},
                     {"valuation", c.valuation},
                     {"expected", c.expected},
                     {"got", c.got}});
    }
    reports.push_back({{"id", r.id},
                       {"checked", r.checked},
                       {"skipped", r.skipped},
                       {"failures", r.failures},
                       {"passed", r.passed()},
                       {"counterexamples", std::move(cex)}});
  }
  return {{"logic", result.logic},
          {"formulas", result.formulas},
          {"instances", result.instances},
          {"passed", result.passed()},
          {"reports", std::move(reports)}};
}

}  // namespace nsgame
