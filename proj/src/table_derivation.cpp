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
#include "nsgame/solver.hpp"

namespace nsgame {

TruthTables derive_tables(const LogicSpec& spec) {
  const int n = spec.value_count();
  const Formula x = Formula::atom("x");
  const Formula y = Formula::atom("y");
  const Formula neg = Formula::negation(x);
  const Formula conj = Formula::conjunction(x, y);
  const Formula disj = Formula::disjunction(x, y);

  TruthTables t;
  t.value_count = n;
  t.negation.resize(n);
  t.conjunction.resize(static_cast<std::size_t>(n) * n);
  t.disjunction.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    Valuation v{{"x", spec.value_at(a)}};
    t.negation[a] = static_cast<std::uint8_t>(spec.value_index(solve_value(spec, neg, v).value));
    for (int b = 0; b < n; ++b) {
      v.set("y", spec.value_at(b));
      t.conjunction[a * n + b] =
          static_cast<std::uint8_t>(spec.value_index(solve_value(spec, conj, v).value));
      t.disjunction[a * n + b] =
          static_cast<std::uint8_t>(spec.value_index(solve_value(spec, disj, v).value));
    }
  }
  return t;
}

}  // namespace nsgame
