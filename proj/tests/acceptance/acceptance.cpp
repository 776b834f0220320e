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

// Acceptance suite. Prints one PASS/FAIL line per criterion with the
// measured quantity and its pinned tolerance; exits non-zero on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nsgame/cli.hpp"
#include "nsgame/errors.hpp"
#include "nsgame/formula.hpp"
#include "nsgame/game.hpp"
#include "nsgame/harness.hpp"
#include "nsgame/iesds.hpp"
#include "nsgame/logic.hpp"
#include "nsgame/solver.hpp"

using namespace nsgame;

namespace {

// Pinned tolerances.
constexpr double kExampleSeconds = 1.0;
constexpr double kSweepSecondsPerLogic = 60.0;
constexpr double kBruteForceSeconds = 120.0;
constexpr std::uint64_t kAllowedMismatches = 0;

constexpr int kSweepAtoms = 3;
constexpr int kSweepDepth = 4;
constexpr std::size_t kSweepCap = 50000;
constexpr int kSmallAtoms = 2;
constexpr int kSmallDepth = 3;

int failures = 0;

void report(int criterion, bool pass, const std::string& title, const std::string& detail) {
  std::printf("criterion %d [%s] %s: %s\n", criterion, pass ? "PASS" : "FAIL", title.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

SweepConfig criterion_sweep() {
  SweepConfig cfg;
  cfg.atoms = kSweepAtoms;
  cfg.depth = kSweepDepth;
  cfg.max_formulas = kSweepCap;
  return cfg;
}

std::uint64_t failures_of(const SweepResult& r, const char* id) {
  const TheoremReport* t = r.find(id);
  return t ? t->failures : ~std::uint64_t{0};
}

std::uint64_t checked_of(const SweepResult& r, const char* id) {
  const TheoremReport* t = r.find(id);
  return t ? t->checked : 0;
}

// ── 1 ──────────────────────────────────────────────────────────────────────

void example_reproduction() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::string> inputs = {"--logic", "bh3", "--formula", "(p|q)|(r&q)",
                                           "--val", "p=T,q=N,r=F"};
  auto run = [&](const char* cmd, std::string& out) {
    std::vector<std::string> args{cmd};
    args.insert(args.end(), inputs.begin(), inputs.end());
    std::ostringstream o;
    std::ostringstream e;
    const int code = run_cli(args, o, e);
    out = o.str();
    return code;
  };
  std::string eval_out;
  std::string trace_out;
  const int eval_code = run("eval", eval_out);
  const int trace_code = run("trace", trace_out);
  const double elapsed = seconds_since(start);

  const std::vector<std::string> listing = {
      "{(Verifier, (p ∨ q) ∨ (r ∧ q)), (Dominator, (p ∨ q) ∨ (r ∧ q))}",
      "{(Verifier, p ∨ q), (Dominator, p ∨ q)}",
      "{(Verifier, p), (Dominator, q)}",
  };
  std::vector<std::string> lines;
  std::istringstream in(trace_out);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  const bool eval_ok = eval_code == 0 && eval_out == "N (Dominator)\n";
  const bool trace_ok = trace_code == 0 && lines == listing;
  report(1, eval_ok && trace_ok && elapsed < kExampleSeconds, "example reproduction",
         fmt("eval \"%s\", run %s (%zu lines), %.3f s (limit %.0f s)",
             eval_out.substr(0, eval_out.size() - (eval_out.empty() ? 0 : 1)).c_str(),
             trace_ok ? "verbatim" : "differs", lines.size(), elapsed, kExampleSeconds));
}

// ── 2, 3, 4 ────────────────────────────────────────────────────────────────

std::map<std::string, SweepResult> sweeps;
std::map<std::string, double> sweep_seconds;

void run_criterion_sweeps() {
  for (const char* name : {"bh3", "bh4", "lp"}) {
    SweepConfig cfg = criterion_sweep();
    cfg.logic = name;
    const auto start = std::chrono::steady_clock::now();
    sweeps[name] = run_sweep(cfg);
    sweep_seconds[name] = seconds_since(start);
  }
}

void correctness() {
  bool pass = true;
  std::string detail;
  for (const char* name : {"bh3", "bh4", "lp"}) {
    const SweepResult& r = sweeps[name];
    const std::uint64_t bad = failures_of(r, "correctness");
    const double t = sweep_seconds[name];
    pass = pass && bad <= kAllowedMismatches && t < kSweepSecondsPerLogic &&
           r.formulas == kSweepCap;
    detail += fmt("%s %llu formulas/%llu instances %llu mismatches %.1f s; ", r.logic.c_str(),
                  static_cast<unsigned long long>(r.formulas),
                  static_cast<unsigned long long>(r.instances),
                  static_cast<unsigned long long>(bad), t);
  }
  detail += fmt("(limit %llu mismatches, %.0f s per logic)",
                static_cast<unsigned long long>(kAllowedMismatches), kSweepSecondsPerLogic);
  report(2, pass, "solved value equals truth-table value", detail);
}

void determinacy() {
  bool pass = true;
  std::string detail;
  for (const char* name : {"bh3", "bh4", "lp"}) {
    const SweepResult& r = sweeps[name];
    const std::uint64_t both = failures_of(r, "exclusion");
    const std::uint64_t unique = failures_of(r, "determinacy");
    pass = pass && both == 0 && unique == 0 && checked_of(r, "determinacy") == r.instances;
    detail += fmt("%s %llu V&F, %llu non-unique; ", r.logic.c_str(),
                  static_cast<unsigned long long>(both),
                  static_cast<unsigned long long>(unique));
  }
  report(3, pass, "determinacy", detail + "(limit 0)");
}

void infectiousness() {
  bool pass = true;
  std::string detail;
  for (const char* name : {"bh3", "bh4"}) {
    const SweepResult& r = sweeps[name];
    const std::uint64_t bad = failures_of(r, "infectiousness");
    const std::uint64_t checked = checked_of(r, "infectiousness");
    pass = pass && bad == 0 && checked > 0;
    detail += fmt("%s %llu infected instances, %llu violations; ", r.logic.c_str(),
                  static_cast<unsigned long long>(checked), static_cast<unsigned long long>(bad));
  }
  report(4, pass, "infectiousness", detail + "(limit 0)");
}

// ── 5 ──────────────────────────────────────────────────────────────────────

struct Grid {
  const char* logic;
  std::vector<std::string> negation;
  std::vector<std::string> conjunction;
  std::vector<std::string> disjunction;
};

void table_derivation() {
  const std::vector<Grid> grids = {
      {"bhn:1", {"F", "N", "T"}, {"TNF", "NNN", "FNF"}, {"TNT", "NNN", "TNF"}},
      {"bhn:2",
       {"F", "N", "S", "T"},
       {"TNSF", "NNSN", "SSSS", "FNSF"},
       {"TNST", "NNSN", "SSSS", "TNSF"}},
      {"lp", {"F", "P", "T"}, {"TPF", "PPF", "FFF"}, {"TTT", "TPP", "TPF"}},
  };
  bool pass = true;
  std::string detail;
  for (const Grid& g : grids) {
    const LogicSpec spec = *LogicSpec::preset(g.logic);
    const TruthTables t = derive_tables(spec);
    const int n = spec.value_count();
    auto name = [&](int i) { return spec.value_name(spec.value_at(i)); };
    int conj_ok = 0;
    int disj_ok = 0;
    int neg_ok = 0;
    for (int a = 0; a < n; ++a) {
      neg_ok += name(t.negate(a)) == g.negation[a];
      for (int b = 0; b < n; ++b) {
        conj_ok += name(t.conjoin(a, b)) == std::string(1, g.conjunction[a][b]);
        disj_ok += name(t.disjoin(a, b)) == std::string(1, g.disjunction[a][b]);
      }
    }
    pass = pass && conj_ok == n * n && disj_ok == n * n && neg_ok == n;
    detail += fmt("%s %d/%d+%d/%d+%d/%d; ", g.logic, conj_ok, n * n, disj_ok, n * n, neg_ok, n);
  }
  report(5, pass, "derived tables", detail + "(bit-exact)");
}

// ── 6 ──────────────────────────────────────────────────────────────────────

void elimination() {
  const LogicSpec bh3 = LogicSpec::bh3();
  const Formula f = parse("(p|q)|(r&q)");
  const GameTree tree(f);
  const EliminationTrace trace = iesds(bh3, f, parse_valuation(bh3, "p=T,q=N,r=F"));
  bool example_ok = false;
  for (const Elimination& e : trace.eliminations) {
    if (e.eliminated.owner == Role::verifier() &&
        format_choice_sequence(tree, e.eliminated) == "L-L" &&
        e.eliminator.owner == Role::infector(1) &&
        format_choice_sequence(tree, e.eliminator) == "L-R") {
      example_ok = true;
    }
  }
  example_ok = example_ok && trace.survivor.owner == Role::infector(1) &&
               format_choice_sequence(tree, trace.survivor) == "L-R" &&
               trace.value == TruthValue::infectious(1);

  const auto start = std::chrono::steady_clock::now();
  const std::vector<Formula> formulas = enumerate_formulas(kSmallAtoms, kSmallDepth);
  std::uint64_t instances = 0;
  std::uint64_t bad = 0;
  for (const char* name : {"bh3", "bh4", "lp"}) {
    const LogicSpec spec = *LogicSpec::preset(name);
    const DominanceOrder order = DominanceOrder::of(spec);
    const int n = spec.value_count();
    for (const Formula& formula : formulas) {
      const GameTree t(formula);
      const StrategySpace space(spec, t);
      const std::size_t atoms = t.atoms().size();
      std::vector<TruthValue> values(atoms);
      std::vector<int> digits(atoms, 0);
      for (bool more = true; more;) {
        for (std::size_t i = 0; i < atoms; ++i) values[i] = spec.value_at(digits[i]);
        ++instances;
        const IesdsOutcome out = iesds_outcome(space, values);
        const Solution solved =
            solve_value(spec, order, node_profiles(spec, t, values)[t.root()]);
        if (out.owner != solved.dominant || out.value != solved.value) ++bad;
        more = false;
        for (std::size_t i = 0; i < atoms; ++i) {
          if (++digits[i] < n) {
            more = true;
            break;
          }
          digits[i] = 0;
        }
      }
    }
  }
  report(6, example_ok && bad == 0, "iterated elimination",
         fmt("running example %s; %zu formulas x 3 logics, %llu instances, %llu survivor "
             "mismatches, %.1f s (limit 0)",
             example_ok ? "eliminates Verifier L-L by Dominator L-R, survivor Dominator L-R = N"
                        : "differs",
             formulas.size(), static_cast<unsigned long long>(instances),
             static_cast<unsigned long long>(bad), seconds_since(start)));
}

// ── 7 ──────────────────────────────────────────────────────────────────────

void brute_force() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Formula> formulas = enumerate_formulas(kSmallAtoms, kSmallDepth);
  std::uint64_t instances = 0;
  std::uint64_t bad = 0;
  for (const char* name : {"bh3", "bh4", "lp"}) {
    const LogicSpec spec = *LogicSpec::preset(name);
    const int n = spec.value_count();
    for (const Formula& formula : formulas) {
      const GameTree t(formula);
      const StrategySpace space(spec, t);
      const std::size_t atoms = t.atoms().size();
      std::vector<TruthValue> values(atoms);
      std::vector<int> digits(atoms, 0);
      for (bool more = true; more;) {
        for (std::size_t i = 0; i < atoms; ++i) values[i] = spec.value_at(digits[i]);
        ++instances;
        if (brute_force_profile(space, values) != node_profiles(spec, t, values)[t.root()]) {
          ++bad;
        }
        more = false;
        for (std::size_t i = 0; i < atoms; ++i) {
          if (++digits[i] < n) {
            more = true;
            break;
          }
          digits[i] = 0;
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  report(7, bad == 0 && elapsed < kBruteForceSeconds, "brute-force oracle equivalence",
         fmt("%zu formulas x 3 logics, %llu instances, %llu mismatches, %.1f s (limit 0, "
             "%.0f s)",
             formulas.size(), static_cast<unsigned long long>(instances),
             static_cast<unsigned long long>(bad), elapsed, kBruteForceSeconds));
}

// ── 8 ──────────────────────────────────────────────────────────────────────

void generalization() {
  bool pass = true;
  std::string detail;
  for (const auto& [general, preset] : {std::pair{"bhn:1", "bh3"}, std::pair{"bhn:2", "bh4"}}) {
    const LogicSpec g = *LogicSpec::preset(general);
    const LogicSpec p = *LogicSpec::preset(preset);
    SweepConfig cfg = criterion_sweep();
    cfg.logic = general;
    const SweepResult swept = run_sweep(cfg);

    // Instance-by-instance comparison with the named preset.
    const DominanceOrder go = DominanceOrder::of(g);
    const DominanceOrder po = DominanceOrder::of(p);
    std::uint64_t differ = 0;
    std::uint64_t instances = 0;
    FormulaEnumerator e(kSweepAtoms, kSweepDepth);
    for (std::size_t k = 0; k < kSweepCap; ++k) {
      auto f = e.next();
      if (!f) break;
      const GameTree t(*f);
      const std::size_t atoms = t.atoms().size();
      std::vector<TruthValue> values(atoms);
      std::vector<int> digits(atoms, 0);
      for (bool more = true; more;) {
        for (std::size_t i = 0; i < atoms; ++i) values[i] = p.value_at(digits[i]);
        ++instances;
        const Solution a = solve_value(g, go, node_profiles(g, t, values)[t.root()]);
        const Solution b = solve_value(p, po, node_profiles(p, t, values)[t.root()]);
        if (a != b || g.value_name(a.value) != p.value_name(b.value) ||
            g.role_name(a.dominant) != p.role_name(b.dominant)) {
          ++differ;
        }
        more = false;
        for (std::size_t i = 0; i < atoms; ++i) {
          if (++digits[i] < p.value_count()) {
            more = true;
            break;
          }
          digits[i] = 0;
        }
      }
    }
    const SweepResult& base = sweeps[preset];
    const bool same_counts = swept.formulas == base.formulas && swept.instances == base.instances;
    const bool ok = swept.passed() && same_counts && differ == 0 && g.tables() == p.tables();
    pass = pass && ok;
    detail += fmt("%s vs %s: sweep %s, %llu instances, %llu differ; ", general, preset,
                  swept.passed() ? "passes" : "fails", static_cast<unsigned long long>(instances),
                  static_cast<unsigned long long>(differ));
  }
  report(8, pass, "generalization consistency", detail + "(limit 0)");
}

// ── 9 ──────────────────────────────────────────────────────────────────────

void mutation_guard() {
  bool pass = true;
  std::string detail;
  for (const char* name : {"bh3", "bh4", "lp"}) {
    const LogicSpec spec = *LogicSpec::preset(name);
    const TruthTables& stored = spec.tables();
    const int n = spec.value_count();
    int mutants = 0;
    int caught = 0;
    auto try_mutant = [&](const TruthTables& t) {
      ++mutants;
      SweepConfig cfg = criterion_sweep();
      cfg.fail_fast = true;
      cfg.check_tables = false;
      const SweepResult r = run_sweep(spec.with_tables(t), cfg);
      if (failures_of(r, "correctness") >= 1) ++caught;
    };
    for (int a = 0; a < n; ++a) {
      for (int alt = 0; alt < n; ++alt) {
        if (alt != stored.negation[a]) {
          TruthTables t = stored;
          t.negation[a] = static_cast<std::uint8_t>(alt);
          try_mutant(t);
        }
      }
    }
    for (int cell = 0; cell < n * n; ++cell) {
      for (int alt = 0; alt < n; ++alt) {
        if (alt != stored.conjunction[cell]) {
          TruthTables t = stored;
          t.conjunction[cell] = static_cast<std::uint8_t>(alt);
          try_mutant(t);
        }
        if (alt != stored.disjunction[cell]) {
          TruthTables t = stored;
          t.disjunction[cell] = static_cast<std::uint8_t>(alt);
          try_mutant(t);
        }
      }
    }
    pass = pass && caught == mutants;
    detail += fmt("%s %d/%d mutants caught; ", spec.name().c_str(), caught, mutants);
  }
  report(9, pass, "mutation guard", detail + "(limit: every mutant)");
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void()>>> steps = {
      {1, example_reproduction}, {2, [] {
                                    run_criterion_sweeps();
                                    correctness();
                                  }},
      {3, determinacy},          {4, infectiousness},
      {5, table_derivation},     {6, elimination},
      {7, brute_force},          {8, generalization},
      {9, mutation_guard},
  };
  for (const auto& [criterion, step] : steps) {
    try {
      step();
    } catch (const std::exception& e) {
      report(criterion, false, "unexpected error", e.what());
    }
  }
  std::printf("acceptance: %d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
