// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coalition/game.hpp"

#include <cmath>
#include <stdexcept>

namespace coalition {
namespace {

// Influence spreads are float products that can land exactly on the success
// threshold; table and closed-form oracles compare exactly.
double default_eta_tol(const ProfitOracle& oracle) {
  return std::holds_alternative<IcSpread>(oracle) ? 1e-9 : 0.0;
}

}  // namespace

TruncatedGame make_game(int n, double eta, ProfitOracle profit, double eta_tol) {
  if (n < 1 || n > 62) throw std::invalid_argument("player count must be in [1, 62]");
  if (eta_tol < 0.0) eta_tol = default_eta_tol(profit);
  TruncatedGame g{n, eta, std::move(profit), eta_tol};
  if (!(eta >= 0.0)) throw std::invalid_argument("success threshold must be nonnegative");
  const double total = sigma(g, Coalition::all(n));
  if (eta > total + eta_tol + 1e-12 * (1.0 + std::fabs(total)))
    throw std::invalid_argument("success threshold exceeds the grand coalition value");
  return g;
}

double sigma(const TruncatedGame& g, Coalition s) { return eval_sigma(g.profit, g.n, s); }

bool is_successful(const TruncatedGame& g, Coalition s) {
  return sigma(g, s) >= g.eta - g.eta_tol;
}

double truncated_profit(const TruncatedGame& g, Coalition s) {
  const double v = sigma(g, s);
  return v >= g.eta - g.eta_tol ? v : 0.0;
}

double dissatisfaction(const TruncatedGame& g, Coalition s, const std::vector<double>& x) {
  const double demand = truncated_profit(g, s);
  const double got = coalition_sum(x, s);
  return demand > got ? demand - got : 0.0;
}

bool allocation_ok(const Allocation& a, double tol) {
  double sum = 0.0;
  for (double v : a.x) {
    if (!(v >= -tol)) return false;
    sum += v;
  }
  return std::fabs(sum - a.total) <= tol * std::fmax(1.0, std::fabs(a.total));
}

TruncatedGame materialize_table(const TruncatedGame& g) {
  if (g.n > 20) throw std::invalid_argument("materialization supports at most 20 players");
  ExplicitTable t;
  t.values.resize(coalition_count(g.n));
  for (std::uint64_t m = 0; m < t.values.size(); ++m)
    t.values[m] = sigma(g, Coalition(m, g.n));
  return TruncatedGame{g.n, g.eta, ProfitOracle(std::move(t)), g.eta_tol};
}

OracleDiagnostics validate_oracle(const TruncatedGame& g, double tol) {
  return validate_oracle(g.profit, g.n, tol);
}

}  // namespace coalition
