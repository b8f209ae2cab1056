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

#include "coalition/rlcv_solver.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "coalition/linprog.hpp"

namespace coalition {
namespace {

constexpr double kTightTol = 1e-7;

// Row x(S) + sigma(S) r >= sigma(S) over variables [x_0..x_{n-1}, r].
LpRow proportional_row(Coalition s, double sigma_s) {
  LpRow row;
  row.a.assign(static_cast<std::size_t>(s.n) + 1, 0.0);
  for (int i : s.members()) row.a[static_cast<std::size_t>(i)] = 1.0;
  row.a.back() = sigma_s;
  row.rel = Rel::kGe;
  row.rhs = sigma_s;
  return row;
}

LinearProgram rlcv_base(const TruncatedGame& g, double total) {
  const std::size_t width = static_cast<std::size_t>(g.n) + 1;
  LinearProgram lp;
  lp.c.assign(width, 0.0);
  lp.c.back() = 1.0;
  lp.upper.assign(width, kLpInf);
  lp.upper.back() = 1.0;  // r <= 1; r >= 0 from the variable bound
  LpRow budget;
  budget.a.assign(width, 0.0);
  for (int i = 0; i < g.n; ++i) budget.a[static_cast<std::size_t>(i)] = 1.0;
  budget.rel = Rel::kEq;
  budget.rhs = total;
  lp.rows.push_back(std::move(budget));
  return lp;
}

RlcvResult finish(const TruncatedGame& g, RlcvMethod method, const LpSolution& sol,
                  const std::vector<std::pair<std::uint64_t, double>>& solved_rows) {
  RlcvResult out;
  out.method = method;
  out.r = sol.x.back();
  out.x.x.assign(sol.x.begin(), sol.x.end() - 1);
  out.x.total = 0.0;
  for (double v : out.x.x) out.x.total += v;
  for (const auto& [mask, sigma_s] : solved_rows) {
    const double paid = coalition_sum(out.x.x, Coalition(mask, g.n));
    if (std::fabs(paid - (1.0 - out.r) * sigma_s) <= kTightTol)
      out.tight_coalitions.push_back(mask);
  }
  return out;
}

}  // namespace

RlcvResult rlcv_eta_zero(const TruncatedGame& g) {
  if (g.eta != 0.0)
    throw std::invalid_argument("singleton reduction applies only when eta = 0");
  const double total = sigma(g, Coalition::all(g.n));
  LinearProgram lp = rlcv_base(g, total);
  std::vector<std::pair<std::uint64_t, double>> rows;
  for (int i = 0; i < g.n; ++i) {
    const Coalition s = Coalition::singleton(i, g.n);
    const double v = sigma(g, s);
    if (v <= 0.0) continue;
    rows.emplace_back(s.mask, v);
    lp.rows.push_back(proportional_row(s, v));
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) throw std::logic_error("singleton LP must be solvable");
  return finish(g, RlcvMethod::kEtaZero, sol, rows);
}

RlcvResult rlcv_exact(const TruncatedGame& g) {
  if (g.n > 20) throw std::invalid_argument("exact enumeration supports at most 20 players");
  const double total = sigma(g, Coalition::all(g.n));
  LinearProgram lp = rlcv_base(g, total);
  std::vector<std::pair<std::uint64_t, double>> rows;
  for (std::uint64_t m = 1; m < coalition_count(g.n); ++m) {
    const Coalition s(m, g.n);
    const double v = sigma(g, s);
    if (v <= 0.0 || !is_successful(g, s)) continue;
    rows.emplace_back(m, v);
    lp.rows.push_back(proportional_row(s, v));
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) throw std::logic_error("full LP must be solvable");
  return finish(g, RlcvMethod::kExact, sol, rows);
}

RlcvResult rlcv_cut_generation(const TruncatedGame& g, int max_rounds) {
  if (g.n > 24) throw std::invalid_argument("lazy separation supports at most 24 players");
  const double total = sigma(g, Coalition::all(g.n));
  const LinearProgram base = rlcv_base(g, total);
  std::vector<std::pair<std::uint64_t, double>> rows;

  // First violated successful coalition in canonical mask order. The
  // violation cutoff is one order looser than the solver's feasibility
  // tolerance so an already-added boundary row can never be re-proposed.
  std::unordered_set<std::uint64_t> seen;
  auto oracle = [&](const std::vector<double>& point) -> SeparationResult {
    const double r = point.back();
    for (std::uint64_t m = 1; m < coalition_count(g.n); ++m) {
      if (seen.count(m)) continue;
      const Coalition s(m, g.n);
      const double v = sigma(g, s);
      if (v <= 0.0 || !is_successful(g, s)) continue;
      double paid = 0.0;
      for (int i : s.members()) paid += point[static_cast<std::size_t>(i)];
      if (paid < (1.0 - r) * v - 10.0 * kLpTol * std::fmax(1.0, v)) {
        rows.emplace_back(m, v);
        seen.insert(m);
        return SeparationResult::cut(proportional_row(s, v), m);
      }
    }
    return SeparationResult::ok();
  };

  const CutResult res = solve_with_cuts(base, oracle, max_rounds);
  if (res.status != LpStatus::kOptimal) throw std::logic_error("relative LP must be solvable");
  if (res.round_limit) throw LpIterationLimit("separation round limit reached");
  LpSolution sol;
  sol.status = res.status;
  sol.x = res.x;
  RlcvResult out = finish(g, RlcvMethod::kCutGen, sol, rows);
  out.rounds = res.rounds;
  return out;
}

double adversarial_cover_value(const TruncatedGame& g) {
  if (g.n > 20) throw std::invalid_argument("enumeration supports at most 20 players");
  const double total = sigma(g, Coalition::all(g.n));
  if (!(g.eta >= total - g.eta_tol - 1e-9 * std::fmax(1.0, total)))
    throw std::invalid_argument("adversarial value requires eta = sigma(V)");
  const std::size_t width = static_cast<std::size_t>(g.n) + 1;  // x..., t
  LinearProgram lp;
  lp.sense = Sense::kMax;
  lp.c.assign(width, 0.0);
  lp.c.back() = 1.0;
  LpRow budget;
  budget.a.assign(width, 0.0);
  for (int i = 0; i < g.n; ++i) budget.a[static_cast<std::size_t>(i)] = 1.0;
  budget.rel = Rel::kEq;
  budget.rhs = total;
  lp.rows.push_back(std::move(budget));
  for (std::uint64_t m = 1; m < coalition_count(g.n); ++m) {
    const Coalition s(m, g.n);
    if (!is_successful(g, s)) continue;
    LpRow row;
    row.a.assign(width, 0.0);
    for (int i : s.members()) row.a[static_cast<std::size_t>(i)] = 1.0;
    row.a.back() = -1.0;  // x(S) - t >= 0
    row.rel = Rel::kGe;
    row.rhs = 0.0;
    lp.rows.push_back(std::move(row));
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) throw std::logic_error("max-min LP must be bounded");
  return sol.value;
}

}  // namespace coalition
