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

#include "nsgame/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "nsgame/errors.hpp"
#include "nsgame/formula.hpp"
#include "nsgame/game.hpp"
#include "nsgame/harness.hpp"
#include "nsgame/iesds.hpp"
#include "nsgame/logic.hpp"
#include "nsgame/solver.hpp"

namespace nsgame {

namespace {

struct Options {
  std::string logic = "bh3";
  std::string formula;
  std::string val;
  std::string val_file;
  std::string format = "text";
  std::uint64_t cap = kDefaultProfileCap;
  SweepConfig sweep;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LogicSpec load_logic(const Options& o) {
  auto spec = LogicSpec::preset(o.logic);
  if (!spec) throw UsageError("unknown logic '" + o.logic + "'");
  return *spec;
}

bool structured(const Options& o) { return o.format != "text"; }

struct Instance {
  LogicSpec spec;
  Formula formula;
  Valuation valuation;
};

Instance load_instance(const Options& o) {
  LogicSpec spec = load_logic(o);
  if (o.formula.empty()) throw UsageError("--formula is required");
  if (o.val.empty() == o.val_file.empty()) {
    throw UsageError("exactly one of --val and --val-file is required");
  }
  Formula f = parse(o.formula);
  Valuation v;
  if (!o.val.empty()) {
    v = parse_valuation(spec, o.val);
  } else {
    std::ifstream in(o.val_file);
    if (!in) throw ValuationError("cannot read valuation file '" + o.val_file + "'");
    v = read_valuation(spec, in);
  }
  // Reject partial valuations up front.
  for (const std::string& atom : atoms(f)) v.at(atom);
  return Instance{std::move(spec), std::move(f), std::move(v)};
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

int cmd_eval(const Options& o, std::ostream& out) {
  Instance in = load_instance(o);
  Solution s = solve_value(in.spec, in.formula, in.valuation);
  if (structured(o)) {
    print_json(out, {{"logic", in.spec.name()},
                     {"formula", print(in.formula)},
                     {"valuation", format_valuation(in.spec, in.valuation)},
                     {"value", in.spec.value_name(s.value)},
                     {"dominant", in.spec.role_name(s.dominant)}});
  } else {
    out << in.spec.value_name(s.value) << " (" << in.spec.role_name(s.dominant) << ")\n";
  }
  return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  Instance in = load_instance(o);
  WinProfile profile = win_profile(in.spec, in.formula, in.valuation);
  Solution s = solve_value(in.spec, DominanceOrder::of(in.spec), profile);
  Strategy strategy = extract_strategy(in.spec, in.formula, in.valuation, s.dominant);
  GameTree tree(in.formula);
  if (structured(o)) {
    nlohmann::json j = strategy_to_json(in.spec, strategy);
    j["sequence"] = format_choice_sequence(tree, strategy);
    print_json(out, {{"logic", in.spec.name()},
                     {"formula", print(in.formula)},
                     {"profile", profile_to_json(in.spec, profile)},
                     {"value", in.spec.value_name(s.value)},
                     {"dominant", in.spec.role_name(s.dominant)},
                     {"strategy", std::move(j)}});
  } else {
    out << "profile: " << format_profile(in.spec, profile) << "\n"
        << "value: " << in.spec.value_name(s.value) << " (" << in.spec.role_name(s.dominant)
        << ")\n"
        << "strategy: " << format_strategy(strategy) << "\n"
        << "sequence: " << format_choice_sequence(tree, strategy) << "\n";
  }
  return kExitOk;
}

int cmd_trace(const Options& o, std::ostream& out) {
  Instance in = load_instance(o);
  GameTree tree(in.formula);
  auto profiles = node_profiles(in.spec, tree, tree.bind(in.spec, in.valuation));
  std::array<std::optional<Strategy>, kMaxRoles> strategies;
  for (const Role& r : in.spec.roles()) {
    strategies[r.index()] = greedy_strategy(in.spec, tree, profiles, r);
  }
  Run run = play(in.spec, tree, [&](Player p, NodeId node) {
    return strategies[p.home.index()]->choice_at(tree.node(node).path).value_or(Branch::kLeft);
  });
  if (structured(o)) {
    print_json(out, {{"logic", in.spec.name()},
                     {"formula", print(in.formula)},
                     {"run", run_to_json(in.spec, tree, run)}});
  } else {
    out << format_run(in.spec, tree, run);
  }
  return kExitOk;
}

int cmd_iesds(const Options& o, std::ostream& out) {
  Instance in = load_instance(o);
  GameTree tree(in.formula);
  EliminationTrace trace = iesds(in.spec, in.formula, in.valuation, o.cap);
  if (structured(o)) {
    nlohmann::json j = trace_to_json(in.spec, tree, trace);
    j["logic"] = in.spec.name();
    j["formula"] = print(in.formula);
    print_json(out, j);
  } else {
    out << format_trace(in.spec, tree, trace);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  LogicSpec spec = load_logic(o);
  if (o.sweep.atoms < 1 || o.sweep.atoms > 26) throw UsageError("--atoms must be 1..26");
  if (o.sweep.depth < 0) throw UsageError("--depth must be non-negative");
  SweepResult result = run_sweep(spec, o.sweep);
  if (structured(o)) {
    print_json(out, sweep_to_json(result));
  } else {
    out << format_sweep(result);
  }
  return result.passed() ? kExitOk : kExitCounterexample;
}

nlohmann::json tables_to_json(const LogicSpec& spec, const TruthTables& t) {
  const int n = t.value_count;
  auto name = [&](int i) { return spec.value_name(spec.value_at(i)); };
  nlohmann::json values = nlohmann::json::array();
  nlohmann::json neg = nlohmann::json::object();
  nlohmann::json conj = nlohmann::json::object();
  nlohmann::json disj = nlohmann::json::object();
  for (int a = 0; a < n; ++a) {
    values.push_back(name(a));
    neg[name(a)] = name(t.negate(a));
    for (int b = 0; b < n; ++b) {
      conj[name(a)][name(b)] = name(t.conjoin(a, b));
      disj[name(a)][name(b)] = name(t.disjoin(a, b));
    }
  }
  return {{"values", std::move(values)},
          {"negation", std::move(neg)},
          {"conjunction", std::move(conj)},
          {"disjunction", std::move(disj)}};
}

int cmd_derive_table(const Options& o, std::ostream& out) {
  LogicSpec spec = load_logic(o);
  TruthTables derived = derive_tables(spec);
  if (structured(o)) {
    nlohmann::json j = tables_to_json(spec, derived);
    j["logic"] = spec.name();
    j["matches_stored"] = derived == spec.tables();
    print_json(out, j);
  } else {
    out << render_tables(spec, derived);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Semantic games for logics of nonsense and paradox", "nsgame"};
  app.require_subcommand(1);

  auto add_logic = [&](CLI::App* cmd) {
    cmd->add_option("--logic", o.logic, "bh3, bochvar, hallden, bh4, lp or bhn:<k>");
    cmd->add_option("--format", o.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured", "json"}));
  };
  auto add_instance = [&](CLI::App* cmd) {
    add_logic(cmd);
    cmd->add_option("--formula", o.formula, "formula, e.g. \"(p|q)|(r&q)\"");
    cmd->add_option("--val", o.val, "inline valuation, e.g. p=T,q=N");
    cmd->add_option("--val-file", o.val_file, "valuation file, one atom = VALUE per line");
  };

  CLI::App* eval = app.add_subcommand("eval", "truth value and dominant role");
  add_instance(eval);
  CLI::App* solve = app.add_subcommand("solve", "winning profile and truth-maker strategy");
  add_instance(solve);
  CLI::App* trace = app.add_subcommand("trace", "a maximal run under extracted strategies");
  add_instance(trace);
  CLI::App* elim = app.add_subcommand("iesds", "iterated elimination trace");
  add_instance(elim);
  elim->add_option("--cap", o.cap, "strategy profile budget");
  CLI::App* verify = app.add_subcommand("verify", "exhaustive sweep against the tables");
  add_logic(verify);
  verify->add_option("--atoms", o.sweep.atoms, "atom count");
  verify->add_option("--depth", o.sweep.depth, "maximum formula depth");
  verify->add_option("--max-formulas", o.sweep.max_formulas, "formula cap");
  verify->add_option("--budget", o.sweep.brute_force_budget,
                     "profile budget for brute-force cross-checks");
  CLI::App* derive = app.add_subcommand("derive-table", "truth tables solved from games");
  add_logic(derive);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (trace->parsed()) return cmd_trace(o, out);
    if (elim->parsed()) return cmd_iesds(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (derive->parsed()) return cmd_derive_table(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "formula error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const ValuationError& e) {
    err << "valuation error: " << e.what() << "\n";
    return kExitValuationError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudgetExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace nsgame
