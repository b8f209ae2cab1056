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

#pragma once

#include <vector>

#include "coalition/coalition.hpp"
#include "coalition/profit_oracle.hpp"

namespace coalition {

// Profit game with a success threshold: a coalition earns its full profit
// sigma(S) when sigma(S) >= eta and nothing otherwise.
//
// eta_tol is the slack used in threshold comparisons. Profit forms whose
// values are plain sums (table/additive/coverage) compare exactly (tol 0);
// cascade-backed games default to 1e-9 because their values carry floating
// round-off (and Monte-Carlo noise), and an exact compare would flip
// coalitions sitting on the threshold.
struct TruncatedGame {
  int n = 0;
  double eta = 0.0;
  ProfitOracle profit;
  double eta_tol = 0.0;
};

// Payoff vector with its intended total (normally sigma(V)).
struct Allocation {
  std::vector<double> x;
  double total = 0.0;
};

// Builds a game and enforces the standing invariants: n >= 1 and
// 0 <= eta <= sigma(V) (up to eta_tol). eta_tol < 0 picks the per-form
// default described above. Throws std::invalid_argument.
TruncatedGame make_game(int n, double eta, ProfitOracle profit, double eta_tol = -1.0);

double sigma(const TruncatedGame& g, Coalition s);
bool is_successful(const TruncatedGame& g, Coalition s);

// f(S) = sigma(S) if the coalition clears the threshold, else 0.
double truncated_profit(const TruncatedGame& g, Coalition s);

// max(f(S) - x(S), 0).
double dissatisfaction(const TruncatedGame& g, Coalition s, const std::vector<double>& x);

// Allocation sanity: x_i >= -tol and sum(x) == total within
// 1e-9 * max(1, |total|).
bool allocation_ok(const Allocation& a, double tol = 1e-9);

// Same game with sigma materialized into an ExplicitTable (n <= 20). Keeps
// eta and eta_tol; useful before sweeping all coalitions repeatedly.
TruncatedGame materialize_table(const TruncatedGame& g);

OracleDiagnostics validate_oracle(const TruncatedGame& g, double tol = 1e-9);

}  // namespace coalition
