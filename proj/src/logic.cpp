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

#include "nsgame/logic.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "nsgame/errors.hpp"

namespace nsgame {

Role Role::swapped() const {
  switch (kind) {
    case Kind::kVerifier:
      return falsifier();
    case Kind::kFalsifier:
      return verifier();
    case Kind::kInfector:
      return *this;
  }
  return *this;
}

int Role::index() const {
  switch (kind) {
    case Kind::kVerifier:
      return 0;
    case Kind::kFalsifier:
      return 1;
    case Kind::kInfector:
      return rank + 1;
  }
  return 0;
}

Role Role::from_index(int index) {
  if (index == 0) return verifier();
  if (index == 1) return falsifier();
  if (index < 0 || index > kMaxInfectious + 1) {
    throw std::out_of_range("role index out of range");
  }
  return infector(index - 1);
}

namespace {

// Stored tables. Value order is T, <infectious...>, F.

// BH3: T N F
const TruthTables kBh3Tables{
    3,
    {2, 1, 0},
    {0, 1, 2,
     1, 1, 1,
     2, 1, 2},
    {0, 1, 0,
     1, 1, 1,
     0, 1, 2},
};

// BH4: T N S F
const TruthTables kBh4Tables{
    4,
    {3, 1, 2, 0},
    {0, 1, 2, 3,
     1, 1, 2, 1,
     2, 2, 2, 2,
     3, 1, 2, 3},
    {0, 1, 2, 0,
     1, 1, 2, 1,
     2, 2, 2, 2,
     0, 1, 2, 3},
};

// LP: T P F
const TruthTables kLpTables{
    3,
    {2, 1, 0},
    {0, 1, 2,
     1, 1, 2,
     2, 2, 2},
    {0, 0, 0,
     0, 1, 1,
     0, 1, 2},
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

TruthTables chain_tables(int k) {
  if (k < 1 || k > kMaxInfectious) {
    throw std::invalid_argument("infectious chain length must be in 1.." +
                                std::to_string(kMaxInfectious));
  }
  const int n = k + 2;
  const int t = 0;
  const int f = k + 1;
  auto infectious = [&](int v) { return v >= 1 && v <= k; };
  TruthTables tables;
  tables.value_count = n;
  tables.negation.resize(n);
  tables.conjunction.resize(n * n);
  tables.disjunction.resize(n * n);
  for (int a = 0; a < n; ++a) {
    tables.negation[a] = static_cast<std::uint8_t>(a == t ? f : a == f ? t : a);
    for (int b = 0; b < n; ++b) {
      int c = 0;
      int d = 0;
      if (infectious(a) || infectious(b)) {
        int top = std::max(infectious(a) ? a : 0, infectious(b) ? b : 0);
        c = d = top;
      } else {
        c = (a == t && b == t) ? t : f;
        d = (a == t || b == t) ? t : f;
      }
      tables.conjunction[a * n + b] = static_cast<std::uint8_t>(c);
      tables.disjunction[a * n + b] = static_cast<std::uint8_t>(d);
    }
  }
  return tables;
}

LogicSpec::LogicSpec(std::string name, Flavor flavor, int infectious,
                     std::set<TruthValue> designated, TruthTables tables)
    : name_(std::move(name)),
      flavor_(flavor),
      infectious_(infectious),
      designated_(std::move(designated)),
      tables_(std::move(tables)) {
  values_.push_back(TruthValue::truth());
  for (int r = 1; r <= infectious_; ++r) values_.push_back(TruthValue::infectious(r));
  values_.push_back(TruthValue::falsity());
  if (tables_.value_count != value_count()) {
    throw std::invalid_argument("truth tables do not match the value alphabet");
  }
}

LogicSpec LogicSpec::bochvar() {
  return LogicSpec("BH3", Flavor::kInfectiousChain, 1, {TruthValue::truth()},
                   kBh3Tables);
}

LogicSpec LogicSpec::hallden() {
  return LogicSpec("BH3-Hallden", Flavor::kInfectiousChain, 1,
                   {TruthValue::truth(), TruthValue::infectious(1)}, kBh3Tables);
}

LogicSpec LogicSpec::bh3() { return bochvar(); }

LogicSpec LogicSpec::bh4() {
  return LogicSpec("BH4", Flavor::kInfectiousChain, 2, {TruthValue::truth()},
                   kBh4Tables);
}

LogicSpec LogicSpec::lp() {
  return LogicSpec("LP", Flavor::kParadox, 1,
                   {TruthValue::truth(), TruthValue::infectious(1)}, kLpTables);
}

LogicSpec LogicSpec::bhn(int k) {
  return LogicSpec("bhn:" + std::to_string(k), Flavor::kInfectiousChain, k,
                   {TruthValue::truth()}, chain_tables(k));
}

std::optional<LogicSpec> LogicSpec::preset(std::string_view name) {
  std::string key = lower(trim(name));
  if (key == "bh3" || key == "bochvar") return bochvar();
  if (key == "hallden" || key == "halldén") return hallden();
  if (key == "bh4") return bh4();
  if (key == "lp") return lp();
  if (key.rfind("bhn:", 0) == 0) {
    std::string_view digits = std::string_view(key).substr(4);
    int k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() ||
        k < 1 || k > kMaxInfectious) {
      return std::nullopt;
    }
    return bhn(k);
  }
  return std::nullopt;
}

LogicSpec LogicSpec::with_tables(TruthTables tables) const {
  return LogicSpec(name_, flavor_, infectious_, designated_, std::move(tables));
}

bool LogicSpec::has_value(TruthValue v) const {
  if (v.kind == TruthValue::Kind::kInfectious) {
    return v.rank >= 1 && v.rank <= infectious_;
  }
  return v.rank == 0;
}

int LogicSpec::value_index(TruthValue v) const {
  if (!has_value(v)) {
    throw AlienValue("value outside the " + name_ + " alphabet");
  }
  switch (v.kind) {
    case TruthValue::Kind::kTrue:
      return 0;
    case TruthValue::Kind::kFalse:
      return infectious_ + 1;
    case TruthValue::Kind::kInfectious:
      return v.rank;
  }
  return 0;
}

std::string LogicSpec::value_name(TruthValue v) const {
  switch (v.kind) {
    case TruthValue::Kind::kTrue:
      return "T";
    case TruthValue::Kind::kFalse:
      return "F";
    case TruthValue::Kind::kInfectious:
      break;
  }
  if (flavor_ == Flavor::kParadox) return v.rank == 1 ? "P" : "P?" + std::to_string(v.rank);
  if (infectious_ <= 2) {
    if (v.rank == 1) return "N";
    if (v.rank == 2) return "S";
  }
  return "N" + std::to_string(v.rank);
}

std::optional<TruthValue> LogicSpec::parse_value(std::string_view letter) const {
  letter = trim(letter);
  for (const TruthValue& v : values_) {
    if (value_name(v) == letter) return v;
  }
  // Ranked spelling is accepted for every chain.
  if (flavor_ == Flavor::kInfectiousChain && letter.size() >= 2 && letter[0] == 'N') {
    int r = 0;
    auto digits = letter.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && r >= 1 &&
        r <= infectious_) {
      return TruthValue::infectious(r);
    }
  }
  return std::nullopt;
}

std::vector<Role> LogicSpec::roles() const {
  std::vector<Role> out;
  out.reserve(role_count());
  for (int i = 0; i < role_count(); ++i) out.push_back(Role::from_index(i));
  return out;
}

bool LogicSpec::has_role(Role r) const {
  if (r.kind == Role::Kind::kInfector) return r.rank >= 1 && r.rank <= infectious_;
  return r.rank == 0;
}

std::string LogicSpec::role_name(Role r) const {
  switch (r.kind) {
    case Role::Kind::kVerifier:
      return "Verifier";
    case Role::Kind::kFalsifier:
      return "Falsifier";
    case Role::Kind::kInfector:
      break;
  }
  if (flavor_ == Flavor::kParadox) return "Paradoxifier";
  if (r.rank == 1) return "Dominator";
  if (r.rank == 2) return "Dictator";
  return "Infector" + std::to_string(r.rank);
}

std::optional<Role> LogicSpec::parse_role(std::string_view name) const {
  name = trim(name);
  for (const Role& r : roles()) {
    if (lower(role_name(r)) == lower(name)) return r;
  }
  return std::nullopt;
}

TruthValue LogicSpec::value_forced_by(Role r) const {
  if (!has_role(r)) throw std::invalid_argument("role outside " + name_);
  switch (r.kind) {
    case Role::Kind::kVerifier:
      return TruthValue::truth();
    case Role::Kind::kFalsifier:
      return TruthValue::falsity();
    case Role::Kind::kInfector:
      return TruthValue::infectious(r.rank);
  }
  return TruthValue::truth();
}

Role LogicSpec::role_forcing(TruthValue v) const {
  if (!has_value(v)) throw AlienValue("value outside the " + name_ + " alphabet");
  switch (v.kind) {
    case TruthValue::Kind::kTrue:
      return Role::verifier();
    case TruthValue::Kind::kFalse:
      return Role::falsifier();
    case TruthValue::Kind::kInfectious:
      return Role::infector(v.rank);
  }
  return Role::verifier();
}

bool is_designated(const LogicSpec& spec, TruthValue v) {
  return spec.designated().contains(v);
}

// ── Valuations ──────────────────────────────────────────────────────────────

std::optional<TruthValue> Valuation::find(const std::string& atom) const {
  auto it = values_.find(atom);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

TruthValue Valuation::at(const std::string& atom) const {
  auto it = values_.find(atom);
  if (it == values_.end()) throw UnboundAtom(atom);
  return it->second;
}

namespace {

void add_binding(const LogicSpec& spec, Valuation& v, std::string_view item,
                 const std::string& where) {
  auto eq = item.find('=');
  if (eq == std::string_view::npos) {
    throw ValuationError(where + "expected 'atom=VALUE', got '" + std::string(item) + "'");
  }
  std::string atom(trim(item.substr(0, eq)));
  std::string_view letter = trim(item.substr(eq + 1));
  if (!is_atom_name(atom)) {
    throw ValuationError(where + "invalid atom name '" + atom + "'");
  }
  auto value = spec.parse_value(letter);
  if (!value) {
    throw ValuationError(where + "'" + std::string(letter) + "' is not a " +
                         spec.name() + " truth value");
  }
  if (v.find(atom)) {
    throw ValuationError(where + "atom '" + atom + "' assigned twice");
  }
  v.set(atom, *value);
}

}  // namespace

Valuation parse_valuation(const LogicSpec& spec, std::string_view text) {
  Valuation v;
  text = trim(text);
  if (text.empty()) return v;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                   : comma - start);
    add_binding(spec, v, item, "");
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return v;
}

Valuation read_valuation(const LogicSpec& spec, std::istream& in) {
  Valuation v;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    add_binding(spec, v, view, "line " + std::to_string(number) + ": ");
  }
  return v;
}

std::string format_valuation(const LogicSpec& spec, const Valuation& v) {
  std::string out;
  for (const auto& [atom, value] : v) {
    if (!out.empty()) out += ',';
    out += atom + "=" + spec.value_name(value);
  }
  return out;
}

// ── Oracle ──────────────────────────────────────────────────────────────────

namespace {

int eval_index(const LogicSpec& spec, const Formula& f, const Valuation& v) {
  const TruthTables& t = spec.tables();
  switch (f.connective()) {
    case Connective::kAtom: {
      TruthValue value = v.at(f.name());
      if (!spec.has_value(value)) {
        throw AlienValue("atom '" + f.name() + "' carries a value outside the " +
                         spec.name() + " alphabet");
      }
      return spec.value_index(value);
    }
    case Connective::kNot:
      return t.negate(eval_index(spec, f.operand(), v));
    case Connective::kAnd:
      return t.conjoin(eval_index(spec, f.left(), v), eval_index(spec, f.right(), v));
    case Connective::kOr:
      return t.disjoin(eval_index(spec, f.left(), v), eval_index(spec, f.right(), v));
  }
  return 0;
}

}  // namespace

TruthValue eval_oracle(const LogicSpec& spec, const Formula& f, const Valuation& v) {
  return spec.value_at(eval_index(spec, f, v));
}

// ── Rendering ───────────────────────────────────────────────────────────────

std::string render_tables(const LogicSpec& spec, const TruthTables& tables) {
  const int n = tables.value_count;
  std::vector<std::string> names;
  std::size_t width = 1;
  for (int i = 0; i < n; ++i) {
    names.push_back(spec.value_name(spec.value_at(i)));
    width = std::max(width, names.back().size());
  }
  auto pad = [&](const std::string& s) {
    return s + std::string(width - std::min(width, s.size()), ' ');
  };
  std::ostringstream out;

  // Symbols occupy a single column regardless of their UTF-8 byte length.
  auto pad_symbol = [&](const char* symbol) {
    return std::string(symbol) + std::string(width - 1, ' ');
  };

  out << pad_symbol(" ") << " | " << "¬" << "\n";
  out << std::string(width, '-') << "-+-" << std::string(width, '-') << "\n";
  for (int a = 0; a < n; ++a) {
    out << pad(names[a]) << " | " << names[tables.negate(a)] << "\n";
  }

  auto binary = [&](const char* symbol, bool conj) {
    out << "\n" << pad_symbol(symbol) << " |";
    for (int b = 0; b < n; ++b) out << " " << pad(names[b]);
    out << "\n" << std::string(width, '-') << "-+"
        << std::string(static_cast<std::size_t>(n) * (width + 1), '-') << "\n";
    for (int a = 0; a < n; ++a) {
      out << pad(names[a]) << " |";
      for (int b = 0; b < n; ++b) {
        out << " " << pad(names[conj ? tables.conjoin(a, b) : tables.disjoin(a, b)]);
      }
      out << "\n";
    }
  };
  binary("∧", true);
  binary("∨", false);
  return out.str();
}

}  // namespace nsgame
