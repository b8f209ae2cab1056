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

#include "coalition/reference_oracles.hpp"

#include <stdexcept>
#include <vector>

#include "coalition/linprog.hpp"

namespace coalition {
namespace {

void check_small(const TruncatedGame& g) {
  if (g.n > 12) throw std::invalid_argument("brute-force oracle supports at most 12 players");
}

// sigma over every mask, evaluated once.
std::vector<double> sigma_sweep(const TruncatedGame& g) {
  std::vector<double> v(coalition_count(g.n));
  for (std::uint64_t m = 0; m < v.size(); ++m) v[m] = sigma(g, Coalition(m, g.n));
  return v;
}

// Coefficient row selecting the members of `mask` among the first n of
// `width` variables.
std::vector<double> member_row(std::uint64_t mask, int n, std::size_t width) {
  std::vector<double> a(width, 0.0);
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1u) a[static_cast<std::size_t>(i)] = 1.0;
  return a;
}

LpRow budget_row(const TruncatedGame& g, double total, std::size_t width) {
  return {member_row(Coalition::all(g.n).mask, g.n, width), Rel::kEq, total};
}

bool successful(const TruncatedGame& g, double value) { return value >= g.eta - g.eta_tol; }

}  // namespace

bool brute_core_feasible(const TruncatedGame& g) {
  check_small(g);
  const std::vector<double> v = sigma_sweep(g);
  const std::size_t width = static_cast<std::size_t>(g.n);
  LinearProgram lp;
  lp.c.assign(width, 0.0);
  lp.rows.push_back(budget_row(g, v.back(), width));
  for (std::uint64_t m = 1; m + 1 < v.size(); ++m) {
    if (!successful(g, v[m]) || v[m] <= 0.0) continue;  // f(S)=0: implied by x >= 0
    lp.rows.push_back({member_row(m, g.n, width), Rel::kGe, v[m]});
  }
  return solve_lp(lp).status == LpStatus::kOptimal;
}

double brute_rlcv(const TruncatedGame& g) {
  check_small(g);
  const std::vector<double> v = sigma_sweep(g);
  const std::size_t width = static_cast<std::size_t>(g.n) + 1;  // x..., r
  LinearProgram lp;
  lp.c.assign(width, 0.0);
  lp.c.back() = 1.0;
  lp.upper.assign(width, kLpInf);
  lp.upper.back() = 1.0;
  lp.rows.push_back(budget_row(g, v.back(), width));
  for (std::uint64_t m = 1; m < v.size(); ++m) {
    if (!successful(g, v[m]) || v[m] <= 0.0) continue;
    LpRow row{member_row(m, g.n, width), Rel::kGe, v[m]};
    row.a.back() = v[m];  // x(S) + sigma(S) r >= sigma(S)
    lp.rows.push_back(std::move(row));
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) throw std::logic_error("relative LP must be feasible");
  return sol.value;
}

double brute_alcv(const TruncatedGame& g) {
  check_small(g);
  const std::vector<double> v = sigma_sweep(g);
  const std::size_t width = static_cast<std::size_t>(g.n) + 1;  // x..., eps
  LinearProgram lp;
  lp.c.assign(width, 0.0);
  lp.c.back() = 1.0;
  lp.rows.push_back(budget_row(g, v.back(), width));
  for (std::uint64_t m = 1; m < v.size(); ++m) {
    if (!successful(g, v[m])) continue;
    LpRow row{member_row(m, g.n, width), Rel::kGe, v[m]};
    row.a.back() = 1.0;  // x(S) + eps >= sigma(S)
    lp.rows.push_back(std::move(row));
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) throw std::logic_error("absolute LP must be feasible");
  return sol.value;
}

double brute_alcv_re(const TruncatedGame& g) {
  check_small(g);
  const std::vector<double> v = sigma_sweep(g);
  const std::size_t width = static_cast<std::size_t>(g.n) + 1;
  LinearProgram lp;
  lp.c.assign(width, 0.0);
  lp.c.back() = 1.0;
  lp.rows.push_back(budget_row(g, v.back(), width));
  for (std::uint64_t m = 1; m < v.size(); ++m) {
    if (!successful(g, v[m])) continue;
    LpRow row{member_row(m, g.n, width), Rel::kGe, g.eta};
    row.a.back() = 1.0;  // x(S) + eps >= eta
    lp.rows.push_back(std::move(row));
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) throw std::logic_error("threshold LP must be feasible");
  return sol.value;
}

double brute_alcv_str(const TruncatedGame& g) {
  check_small(g);
  const std::vector<double> v = sigma_sweep(g);
  const std::size_t width = static_cast<std::size_t>(g.n) + 1;
  LinearProgram lp;
  lp.c.assign(width, 0.0);
  lp.c.back() = 1.0;
  lp.rows.push_back(budget_row(g, v.back(), width));
  for (std::uint64_t m = 1; m < v.size(); ++m) {
    LpRow row{member_row(m, g.n, width), Rel::kGe, v[m]};
    row.a.back() = 1.0;  // x(S) + eps >= sigma(S), no truncation
    lp.rows.push_back(std::move(row));
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) throw std::logic_error("untruncated LP must be feasible");
  return sol.value;
}

double brute_ladv(const TruncatedGame& g) {
  check_small(g);
  const std::vector<double> v = sigma_sweep(g);
  const std::size_t count = v.size();
  // One shortfall variable per coalition with positive demand.
  std::vector<std::uint64_t> demanding;
  for (std::uint64_t m = 1; m < count; ++m)
    if (successful(g, v[m]) && v[m] > 0.0) demanding.push_back(m);
  const std::size_t width = static_cast<std::size_t>(g.n) + demanding.size();
  LinearProgram lp;
  lp.c.assign(width, 0.0);
  const double scale = 1.0 / static_cast<double>(count);
  for (std::size_t j = 0; j < demanding.size(); ++j)
    lp.c[static_cast<std::size_t>(g.n) + j] = scale;
  lp.rows.push_back(budget_row(g, v.back(), width));
  for (std::size_t j = 0; j < demanding.size(); ++j) {
    LpRow row{member_row(demanding[j], g.n, width), Rel::kGe, v[demanding[j]]};
    row.a[static_cast<std::size_t>(g.n) + j] = 1.0;  // x(S) + s_S >= f(S)
    lp.rows.push_back(std::move(row));
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) throw std::logic_error("average LP must be feasible");
  return sol.value;
}

double brute_adversarial_value(const TruncatedGame& g) {
  check_small(g);
  const std::vector<double> v = sigma_sweep(g);
  if (!(g.eta >= v.back() - g.eta_tol))
    throw std::invalid_argument("adversarial value requires eta = sigma(V)");
  const std::size_t width = static_cast<std::size_t>(g.n) + 1;  // x..., t
  LinearProgram lp;
  lp.sense = Sense::kMax;
  lp.c.assign(width, 0.0);
  lp.c.back() = 1.0;
  lp.rows.push_back(budget_row(g, v.back(), width));
  for (std::uint64_t m = 1; m < v.size(); ++m) {
    if (!successful(g, v[m])) continue;
    LpRow row{member_row(m, g.n, width), Rel::kGe, 0.0};
    row.a.back() = -1.0;  // x(S) - t >= 0
    lp.rows.push_back(std::move(row));
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) throw std::logic_error("max-min LP must be bounded");
  return sol.value;
}

int brute_max_cut(const UndirectedGraph& g) {
  if (g.num_vertices > 20) throw std::invalid_argument("graph too large for brute force");
  int best = 0;
  for (std::uint64_t side = 0; side < (std::uint64_t(1) << g.num_vertices); ++side) {
    int cut = 0;
    for (const auto& [u, w] : g.edges)
      if (((side >> u) & 1u) != ((side >> w) & 1u)) ++cut;
    if (cut > best) best = cut;
  }
  return best;
}

int brute_min_dominating_set(const UndirectedGraph& g) {
  if (g.num_vertices > 20) throw std::invalid_argument("graph too large for brute force");
  const int n = g.num_vertices;
  std::vector<std::uint64_t> closed(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) closed[static_cast<std::size_t>(i)] = std::uint64_t(1) << i;
  for (const auto& [u, w] : g.edges) {
    closed[static_cast<std::size_t>(u)] |= std::uint64_t(1) << w;
    closed[static_cast<std::size_t>(w)] |= std::uint64_t(1) << u;
  }
  const std::uint64_t everyone = (std::uint64_t(1) << n) - 1;
  int best = n;
  for (std::uint64_t s = 0; s <= everyone; ++s) {
    std::uint64_t dominated = 0;
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1u) dominated |= closed[static_cast<std::size_t>(i)];
    if (dominated == everyone) {
      const int size = std::popcount(s);
      if (size < best) best = size;
    }
  }
  return best;
}

bool brute_sat(const CnfFormula& f) {
  if (f.n_vars > 20) throw std::invalid_argument("formula too large for brute force");
  for (std::uint64_t a = 0; a < (std::uint64_t(1) << f.n_vars); ++a) {
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool sat = false;
      for (int lit : clause) {
        const int v = lit > 0 ? lit : -lit;
        const bool val = (a >> (v - 1)) & 1u;
        if (val == (lit > 0)) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

double brute_submodular_max(const std::function<double(Coalition)>& g, int n) {
  if (n > 20) throw std::invalid_argument("set too large for brute force");
  double best = g(Coalition::empty(n));
  for (std::uint64_t m = 1; m < coalition_count(n); ++m) {
    const double v = g(Coalition(m, n));
    if (v > best) best = v;
  }
  return best;
}

}  // namespace coalition
