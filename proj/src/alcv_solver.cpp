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

#include "coalition/alcv_solver.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "coalition/linprog.hpp"

namespace coalition {
namespace {

constexpr double kTightTol = 1e-7;

// Minimum violation a separation oracle reports. One order looser than the
// solver's feasibility tolerance so an already-satisfied boundary row can
// never be re-proposed.
double cut_slack(double scale) { return 10.0 * kLpTol * std::fmax(1.0, scale); }

// Row x(S) + eps >= rhs over variables [x_0..x_{n-1}, eps].
LpRow slack_row(Coalition s, double rhs) {
  LpRow row;
  row.a.assign(static_cast<std::size_t>(s.n) + 1, 0.0);
  for (int i : s.members()) row.a[static_cast<std::size_t>(i)] = 1.0;
  row.a.back() = 1.0;
  row.rel = Rel::kGe;
  row.rhs = rhs;
  return row;
}

LpRow budget_row(int n, std::size_t width, double total) {
  LpRow row;
  row.a.assign(width, 0.0);
  for (int i = 0; i < n; ++i) row.a[static_cast<std::size_t>(i)] = 1.0;
  row.rel = Rel::kEq;
  row.rhs = total;
  return row;
}

void require_allocation(const TruncatedGame& g, const std::vector<double>& x, double total) {
  if (static_cast<int>(x.size()) != g.n)
    throw std::invalid_argument("payoff vector size does not match the player count");
  double sum = 0.0;
  for (double v : x) {
    if (v < -1e-7 * std::fmax(1.0, total)) throw std::invalid_argument("negative payoff");
    sum += v;
  }
  if (std::fabs(sum - total) > 1e-6 * std::fmax(1.0, std::fabs(total)))
    throw std::invalid_argument("payoffs do not sum to the grand-coalition profit");
}

std::string format_bound(double additive_slack, double eta) {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "eps_opt <= value <= min(eps_opt + %.9g, max(3*eps_opt, %.9g))",
                additive_slack, eta);
  return buf;
}

}  // namespace

AlcvResult alcv_exact(const TruncatedGame& g) {
  if (g.n > 20) throw std::invalid_argument("exact enumeration supports at most 20 players");
  const double total = sigma(g, Coalition::all(g.n));
  const std::size_t width = static_cast<std::size_t>(g.n) + 1;  // x..., eps
  LinearProgram lp;
  lp.c.assign(width, 0.0);
  lp.c.back() = 1.0;
  lp.rows.push_back(budget_row(g.n, width, total));
  std::vector<std::pair<std::uint64_t, double>> rows;
  for (std::uint64_t m = 1; m < coalition_count(g.n); ++m) {
    const Coalition s(m, g.n);
    const double v = sigma(g, s);
    if (v <= 0.0 || !is_successful(g, s)) continue;
    rows.emplace_back(m, v);
    lp.rows.push_back(slack_row(s, v));
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) throw std::logic_error("absolute LP must be solvable");
  AlcvResult out;
  out.epsilon = sol.x.back();
  out.x.x.assign(sol.x.begin(), sol.x.end() - 1);
  out.x.total = total;
  for (const auto& [mask, sigma_s] : rows) {
    const double paid = coalition_sum(out.x.x, Coalition(mask, g.n));
    if (std::fabs(paid + out.epsilon - sigma_s) <= kTightTol) out.tight_coalitions.push_back(mask);
  }
  return out;
}

DoubleGreedyResult double_greedy_max(int n, const std::function<double(Coalition)>& g) {
  if (n < 1 || n > 62) throw std::invalid_argument("player count out of range");
  DoubleGreedyResult out;
  Coalition grow = Coalition::empty(n);
  Coalition shrink = Coalition::all(n);
  double v_grow = g(grow);
  double v_shrink = g(shrink);
  out.oracle_calls = 2;
  for (int i = 0; i < n; ++i) {
    double gain_add;
    double gain_drop;
    if (i + 1 == n) {
      // The two sets now differ only in player i, so both marginals are
      // already known: g(shrink) - g(grow) and its negation.
      gain_add = v_shrink - v_grow;
      gain_drop = -gain_add;
    } else {
      gain_add = g(grow.with(i)) - v_grow;
      gain_drop = g(shrink.without(i)) - v_shrink;
      out.oracle_calls += 2;
    }
    if (gain_add >= gain_drop) {
      grow = grow.with(i);
      v_grow += gain_add;
    } else {
      shrink = shrink.without(i);
      v_shrink += gain_drop;
    }
  }
  out.set = grow;
  out.value = v_grow;
  return out;
}

DoubleGreedyResult x_md_value(const TruncatedGame& g, const std::vector<double>& x) {
  const double total = sigma(g, Coalition::all(g.n));
  require_allocation(g, x, total);
  return double_greedy_max(
      g.n, [&](Coalition s) { return sigma(g, s) - coalition_sum(x, s); });
}

StrApproxResult lp_str_approx(const TruncatedGame& g, int max_rounds) {
  const double total = sigma(g, Coalition::all(g.n));
  const std::size_t width = static_cast<std::size_t>(g.n) + 1;  // x..., eps
  LinearProgram base;
  base.c.assign(width, 0.0);
  base.c.back() = 1.0;
  base.rows.push_back(budget_row(g.n, width, total));
  base.rows.push_back(slack_row(Coalition::all(g.n), total));

  const double slack = cut_slack(total);
  auto oracle = [&](const std::vector<double>& point) -> SeparationResult {
    const double eps = point.back();
    const std::vector<double> x(point.begin(), point.end() - 1);
    const DoubleGreedyResult md = x_md_value(g, x);
    if (md.value > eps + slack)
      return SeparationResult::cut(slack_row(md.set, sigma(g, md.set)), md.set.mask);
    return SeparationResult::ok();
  };

  const CutResult res = solve_with_cuts(base, oracle, max_rounds);
  if (res.status != LpStatus::kOptimal) throw std::logic_error("untruncated LP must be solvable");
  StrApproxResult out;
  out.eps_relaxed = std::fmax(0.0, res.value);
  out.eps = 3.0 * out.eps_relaxed;
  out.x.x.assign(res.x.begin(), res.x.end() - 1);
  out.x.total = total;
  out.rounds = res.rounds;
  out.round_limit = res.round_limit;
  return out;
}

LfpOracleOutcome lfp_partial_oracle(const TruncatedGame& g, const std::vector<double>& x,
                                    int k, double delta, int m_disc, LfpMode mode) {
  if (k < 1) throw std::invalid_argument("guarantee level must be positive");
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  if (m_disc < 1) throw std::invalid_argument("discretization count must be positive");
  if (mode == LfpMode::kExact && g.n > 20)
    throw std::invalid_argument("exact separation supports at most 20 players");
  const double total = sigma(g, Coalition::all(g.n));
  require_allocation(g, x, total);

  const double target = static_cast<double>(k) * delta;
  const double slack = cut_slack(total);
  const auto violated = [&](Coalition s) {
    return !s.is_empty() && is_successful(g, s) &&
           coalition_sum(x, s) < target - slack;
  };
  const auto exhaustive = [&]() {
    LfpOracleOutcome out;
    for (std::uint64_t m = 1; m < coalition_count(g.n); ++m) {
      const Coalition s(m, g.n);
      if (violated(s)) {
        out.verdict = LfpVerdict::kViolated;
        out.witness = s;
        return out;
      }
    }
    out.verdict = LfpVerdict::kFeasibleForK;
    return out;
  };

  // Quantized payments. A player whose payment alone reaches the target can
  // never join a hit, so its inclusion transition is dropped via the cap.
  const double quantum = delta / static_cast<double>(m_disc);
  if (static_cast<long long>(k) * m_disc > 100'000'000)
    throw std::invalid_argument("discretization too fine for the requested level");
  const int cells = k * m_disc;
  std::vector<int> q(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i)
    q[static_cast<std::size_t>(i)] = static_cast<int>(
        std::fmin(std::floor(std::fmax(x[static_cast<std::size_t>(i)], 0.0) / quantum),
                  static_cast<double>(cells)));

  // Profit of player j is its marginal onto the prefix {0..j-1}.
  std::vector<double> prefix(static_cast<std::size_t>(g.n) + 1, 0.0);
  for (int j = 1; j <= g.n; ++j)
    prefix[static_cast<std::size_t>(j)] =
        sigma(g, Coalition((std::uint64_t(1) << j) - 1, g.n));

  // best[j][l]: largest profit of a subset of players {0..j-1} whose
  // quantized payments sum to l quanta. Row 0 seeds the empty set so
  // subsets skipping early players stay reachable.
  constexpr double kUnreachable = -std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> best(
      static_cast<std::size_t>(g.n) + 1,
      std::vector<double>(static_cast<std::size_t>(cells), kUnreachable));
  best[0][0] = 0.0;
  for (int j = 1; j <= g.n; ++j) {
    const double gain = prefix[static_cast<std::size_t>(j)] - prefix[static_cast<std::size_t>(j - 1)];
    const int cost = q[static_cast<std::size_t>(j - 1)];
    const auto& prev = best[static_cast<std::size_t>(j - 1)];
    auto& cur = best[static_cast<std::size_t>(j)];
    for (int l = 0; l < cells; ++l) {
      double value = prev[static_cast<std::size_t>(l)];
      if (cost <= l && prev[static_cast<std::size_t>(l - cost)] != kUnreachable)
        value = std::fmax(value, prev[static_cast<std::size_t>(l - cost)] + gain);
      cur[static_cast<std::size_t>(l)] = value;
    }
  }

  // Re-verify every hit against the real oracle; quantization floors
  // payments, so a hit can sit at or above the target in truth.
  const double hit_floor = g.eta - g.eta_tol - 1e-9 * std::fmax(1.0, g.eta);
  bool any_hit = false;
  for (int l = 0; l < cells; ++l) {
    if (best[static_cast<std::size_t>(g.n)][static_cast<std::size_t>(l)] < hit_floor) continue;
    any_hit = true;
    std::uint64_t mask = 0;
    int at = l;
    for (int j = g.n; j >= 1; --j) {
      const auto& prev = best[static_cast<std::size_t>(j - 1)];
      const double here = best[static_cast<std::size_t>(j)][static_cast<std::size_t>(at)];
      if (prev[static_cast<std::size_t>(at)] == here) continue;  // skipping j-1 explains the value
      mask |= std::uint64_t(1) << (j - 1);
      at -= q[static_cast<std::size_t>(j - 1)];
    }
    const Coalition s(mask, g.n);
    if (violated(s)) {
      LfpOracleOutcome out;
      out.verdict = LfpVerdict::kViolated;
      out.witness = s;
      return out;
    }
  }

  if (any_hit && g.n <= 20) return exhaustive();
  if (mode == LfpMode::kExact) return exhaustive();
  LfpOracleOutcome out;
  out.verdict = LfpVerdict::kFeasibleForKMinusOne;
  return out;
}

LpReResult lp_re_solve(const TruncatedGame& g, double delta, LfpMode mode,
                       int max_rounds_per_level) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  if (mode == LfpMode::kExact && g.n > 20)
    throw std::invalid_argument("exact separation supports at most 20 players");
  const TruncatedGame* game = &g;
  TruncatedGame table;
  if (g.n <= 20) {  // the separation sweeps coalitions; make profits O(1)
    table = materialize_table(g);
    game = &table;
  }
  const double total = sigma(*game, Coalition::all(game->n));
  const int levels = static_cast<int>(std::ceil(game->eta / delta - 1e-9));

  LpReResult out;
  out.x.x.assign(static_cast<std::size_t>(game->n), total / game->n);
  out.x.total = total;

  std::vector<std::uint64_t> pool;
  std::unordered_set<std::uint64_t> pooled;
  for (int k = 1; k <= levels; ++k) {
    const double target = static_cast<double>(k) * delta;
    LinearProgram base;
    base.c.assign(static_cast<std::size_t>(game->n), 0.0);  // pure feasibility
    base.rows.push_back(budget_row(game->n, static_cast<std::size_t>(game->n), total));
    for (std::uint64_t m : pool) {
      LpRow row;
      row.a.assign(static_cast<std::size_t>(game->n), 0.0);
      for (int i : Coalition(m, game->n).members()) row.a[static_cast<std::size_t>(i)] = 1.0;
      row.rel = Rel::kGe;
      row.rhs = target;
      base.rows.push_back(std::move(row));
    }

    LfpVerdict accepted = LfpVerdict::kFeasibleForK;
    auto oracle = [&](const std::vector<double>& point) -> SeparationResult {
      const LfpOracleOutcome o = lfp_partial_oracle(*game, point, k, delta, game->n, mode);
      if (o.verdict == LfpVerdict::kViolated && !pooled.count(o.witness.mask)) {
        pool.push_back(o.witness.mask);
        pooled.insert(o.witness.mask);
        LpRow row;
        row.a.assign(static_cast<std::size_t>(game->n), 0.0);
        for (int i : o.witness.members()) row.a[static_cast<std::size_t>(i)] = 1.0;
        row.rel = Rel::kGe;
        row.rhs = target;
        return SeparationResult::cut(std::move(row), o.witness.mask);
      }
      accepted = o.verdict == LfpVerdict::kViolated ? LfpVerdict::kFeasibleForK : o.verdict;
      return SeparationResult::ok();
    };

    const CutResult res = solve_with_cuts(std::move(base), oracle, max_rounds_per_level);
    ++out.levels_tried;
    out.rounds += res.rounds;
    if (res.round_limit) {
      out.round_limit = true;
      break;
    }
    // Pool rows only bind genuinely successful coalitions, so an infeasible
    // relaxation proves the level itself is infeasible.
    if (res.status == LpStatus::kInfeasible) break;
    if (res.status != LpStatus::kOptimal) throw std::logic_error("level LP must be solvable");
    const int held = accepted == LfpVerdict::kFeasibleForK ? k : k - 1;
    if (held > out.k_held) {
      out.k_held = held;
      out.x.x = res.x;
    }
  }
  out.eps = std::fmax(0.0, game->eta - static_cast<double>(out.k_held) * delta);
  return out;
}

AlcvApproxResult alcv_approx(const TruncatedGame& g, double delta, LfpMode mode) {
  const double total = sigma(g, Coalition::all(g.n));
  const double slack = std::fmax(0.0, total - g.eta);
  const LpReResult re = lp_re_solve(g, delta, mode);
  const StrApproxResult str = lp_str_approx(g);

  AlcvApproxResult out;
  out.eps_re = re.eps;
  out.eps_str = str.eps;
  out.delta = delta;
  out.guarantee = format_bound(slack + 2.0 * delta, g.eta);
  out.round_limit = re.round_limit || str.round_limit;
  if (re.eps + slack < str.eps) {
    out.eps_prime = re.eps + slack;
    out.x = re.x;
  } else {
    out.eps_prime = str.eps;
    out.x = str.x;
  }
  return out;
}

}  // namespace coalition
