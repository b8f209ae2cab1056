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

#include "coalition/ladv_solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "coalition/linprog.hpp"

namespace coalition {
namespace {

std::uint64_t full_mask(int n) { return Coalition::all(n).mask; }

double masked_sum(const std::vector<double>& x, std::uint64_t mask) {
  double s = 0.0;
  for (std::uint64_t m = mask; m; m &= m - 1)
    s += x[static_cast<std::size_t>(std::countr_zero(m))];
  return s;
}

FEstimate exact_average(const TruncatedGame& g, const std::vector<double>& x) {
  const std::uint64_t count = coalition_count(g.n);
  // Incremental subset sums: x(S) = x(S minus lowest bit) + that payoff.
  std::vector<double> paid(count, 0.0);
  double sum = 0.0;
  for (std::uint64_t m = 1; m < count; ++m) {
    paid[m] = paid[m & (m - 1)] + x[static_cast<std::size_t>(std::countr_zero(m))];
    sum += std::fmax(truncated_profit(g, Coalition(m, g.n)) - paid[m], 0.0);
  }
  FEstimate out;
  out.value = sum / static_cast<double>(count);
  return out;
}

FEstimate sampled_average(const TruncatedGame& g, const std::vector<double>& x, int samples,
                          std::uint64_t seed) {
  std::mt19937_64 stream(seed);
  const std::uint64_t mask = full_mask(g.n);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Coalition s(stream() & mask, g.n);
    const double term = std::fmax(truncated_profit(g, s) - masked_sum(x, s.mask), 0.0);
    sum += term;
    sum_sq += term * term;
  }
  FEstimate out;
  out.exact = false;
  out.value = sum / samples;
  const double variance = std::fmax(sum_sq / samples - out.value * out.value, 0.0);
  out.std_error = std::sqrt(variance / samples);
  return out;
}

}  // namespace

FEstimate F_eval(const TruncatedGame& g, const std::vector<double>& x, int samples,
                 std::uint64_t seed) {
  if (static_cast<int>(x.size()) != g.n)
    throw std::invalid_argument("payoff vector size does not match the player count");
  if (g.n <= 20) return exact_average(g, x);
  if (samples < 1) throw std::invalid_argument("sample count must be positive");
  return sampled_average(g, x, samples, seed);
}

Allocation project_to_budget_simplex(const std::vector<double>& y, double total) {
  if (!(total > 0.0)) throw std::invalid_argument("budget must be positive");
  if (y.empty()) throw std::invalid_argument("cannot project an empty vector");
  std::vector<double> sorted(y);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  // Largest prefix whose uniform shift keeps every kept entry positive.
  double prefix = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    prefix += sorted[j];
    const double shift = (prefix - total) / static_cast<double>(j + 1);
    if (sorted[j] - shift > 0.0) theta = shift;
  }
  Allocation out;
  out.total = total;
  out.x.resize(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out.x[i] = std::fmax(y[i] - theta, 0.0);
  return out;
}

double sgd_guarantee_step(double total, int n, long long iterations) {
  if (!(total > 0.0) || n < 1 || iterations < 1)
    throw std::invalid_argument("step formula needs a positive budget, width and count");
  const double nn = static_cast<double>(n) * n;
  return (total * total) / (nn * std::sqrt(static_cast<double>(iterations)));
}

LadvResult sgd_ladv(const TruncatedGame& g, const SgdConfig& cfg) {
  if (cfg.iterations < 1) throw std::invalid_argument("iteration count must be positive");
  if (!(cfg.alpha > 0.0)) throw std::invalid_argument("step size must be positive");

  const TruncatedGame* game = &g;
  TruncatedGame table;
  if (g.n <= 20) {  // the loop reads profits every step; make them O(1)
    table = materialize_table(g);
    game = &table;
  }
  const int n = game->n;
  const double total = sigma(*game, Coalition::all(n));
  const std::uint64_t mask = full_mask(n);

  std::mt19937_64 draws(cfg.master_seed);
  // Separate stream for sampled objectives, so evaluation never perturbs
  // the update sequence.
  const std::uint64_t eval_seed = cfg.master_seed ^ 0x9E3779B97F4A7C15ULL;
  std::mt19937_64 eval_draws(eval_seed);
  const auto objective = [&](const std::vector<double>& x) {
    if (n <= 12) return exact_average(*game, x).value;
    return sampled_average(*game, x, 10000, eval_draws()).value;
  };

  LadvResult out;
  out.method = LadvMethod::kSgd;
  std::vector<double> x(static_cast<std::size_t>(n), total / n);
  double objective_now = objective(x);
  bool stale = false;
  out.value = objective_now;
  out.x.x = x;
  out.x.total = total;
  if (cfg.record_trace) out.trace.reserve(static_cast<std::size_t>(cfg.iterations));

  for (long long t = 1; t <= cfg.iterations; ++t) {
    if (stale) {
      objective_now = objective(x);
      stale = false;
      if (objective_now < out.value) {
        out.value = objective_now;
        out.x.x = x;
      }
    }
    const Coalition s(draws() & mask, n);
    double step_norm = 0.0;
    // The empty draw always triggers (profit 0 equals payoff 0) but its
    // indicator is the zero vector, so the iterate stays in place.
    if (!s.is_empty() && truncated_profit(*game, s) >= masked_sum(x, s.mask)) {
      std::vector<double> moved(x);
      for (int i : s.members()) moved[static_cast<std::size_t>(i)] += cfg.alpha;
      const Allocation next = project_to_budget_simplex(moved, total);
      double dist_sq = 0.0;
      for (int i = 0; i < n; ++i) {
        const double d = next.x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i)];
        dist_sq += d * d;
      }
      step_norm = std::sqrt(dist_sq);
      x = next.x;
      stale = true;
    }
    if (cfg.record_trace) out.trace.push_back({t, objective_now, step_norm});
  }
  return out;
}

LadvResult ladv_exact(const TruncatedGame& g) {
  if (g.n > 12) throw std::invalid_argument("exact hinge LP supports at most 12 players");
  const double total = sigma(g, Coalition::all(g.n));
  const std::uint64_t count = coalition_count(g.n);
  const double weight = 1.0 / static_cast<double>(count);

  // Variables: payoffs, then one hinge per coalition with positive
  // truncated profit (the others fix their hinge at zero).
  std::vector<std::uint64_t> hinged;
  for (std::uint64_t m = 1; m < count; ++m)
    if (truncated_profit(g, Coalition(m, g.n)) > 0.0) hinged.push_back(m);

  const std::size_t width = static_cast<std::size_t>(g.n) + hinged.size();
  LinearProgram lp;
  lp.c.assign(width, 0.0);
  for (std::size_t j = 0; j < hinged.size(); ++j) lp.c[static_cast<std::size_t>(g.n) + j] = weight;
  LpRow budget;
  budget.a.assign(width, 0.0);
  for (int i = 0; i < g.n; ++i) budget.a[static_cast<std::size_t>(i)] = 1.0;
  budget.rel = Rel::kEq;
  budget.rhs = total;
  lp.rows.push_back(std::move(budget));
  for (std::size_t j = 0; j < hinged.size(); ++j) {
    const Coalition s(hinged[j], g.n);
    LpRow row;  // x(S) + hinge_S >= f(S)
    row.a.assign(width, 0.0);
    for (int i : s.members()) row.a[static_cast<std::size_t>(i)] = 1.0;
    row.a[static_cast<std::size_t>(g.n) + j] = 1.0;
    row.rel = Rel::kGe;
    row.rhs = truncated_profit(g, s);
    lp.rows.push_back(std::move(row));
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) throw std::logic_error("hinge LP must be solvable");
  LadvResult out;
  out.method = LadvMethod::kExact;
  out.value = std::fmax(sol.value, 0.0);
  out.x.x.assign(sol.x.begin(), sol.x.begin() + g.n);
  out.x.total = total;
  return out;
}

}  // namespace coalition
