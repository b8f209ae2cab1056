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

#include "coalition/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

namespace coalition {
namespace {

// Phase-1 optimum above this is reported as infeasible. Looser than kLpTol
// because the artificial objective accumulates round-off across many rows.
constexpr double kPhase1Tol = 1e-7;

// Consecutive non-improving pivots before Dantzig pricing is abandoned for
// Bland's rule (which cannot cycle).
constexpr int kDegenerateStreak = 64;

struct Tableau {
  std::size_t m = 0;       // constraint rows
  std::size_t ncols = 0;   // variable columns (rhs stored separately)
  std::vector<double> t;   // m x ncols, row-major
  std::vector<double> rhs;
  std::vector<double> d;   // reduced costs
  std::vector<int> basis;  // basic column per row
  double z = 0.0;

  double* row(std::size_t i) { return t.data() + i * ncols; }
};

// One simplex phase on a prepared tableau (reduced costs in tb.d); columns
// >= ban_from may never enter. Returns false on unboundedness.
bool run_simplex(Tableau& tb, std::size_t ban_from, int& iterations, int max_iterations) {
  bool bland = false;
  int degenerate_streak = 0;
  for (;;) {
    // Pricing.
    int enter = -1;
    double best = -kLpTol;
    for (std::size_t j = 0; j < ban_from; ++j) {
      const double dj = tb.d[j];
      if (dj < -kLpTol) {
        if (bland) {
          enter = static_cast<int>(j);
          break;
        }
        if (dj < best) {
          best = dj;
          enter = static_cast<int>(j);
        }
      }
    }
    if (enter < 0) return true;  // optimal for this phase

    // Ratio test; ties broken toward the smallest basic variable index.
    std::size_t leave = tb.m;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < tb.m; ++i) {
      const double aij = tb.row(i)[enter];
      if (aij > kLpTol) {
        const double ratio = tb.rhs[i] / aij;
        if (leave == tb.m || ratio < best_ratio - kLpTol ||
            (ratio < best_ratio + kLpTol && tb.basis[i] < tb.basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave == tb.m) return false;  // unbounded direction

    if (++iterations > max_iterations)
      throw LpIterationLimit("simplex iteration limit (" + std::to_string(max_iterations) + ") hit");

    // Pivot on (leave, enter).
    double* pr = tb.row(leave);
    const double piv = pr[enter];
    for (std::size_t j = 0; j < tb.ncols; ++j) pr[j] /= piv;
    tb.rhs[leave] /= piv;
    pr[enter] = 1.0;
    const double theta = tb.rhs[leave];
    for (std::size_t i = 0; i < tb.m; ++i) {
      if (i == leave) continue;
      double* ri = tb.row(i);
      const double f = ri[enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < tb.ncols; ++j) ri[j] -= f * pr[j];
      tb.rhs[i] -= f * theta;
      ri[enter] = 0.0;
      if (tb.rhs[i] < 0.0 && tb.rhs[i] > -kLpTol) tb.rhs[i] = 0.0;
    }
    const double dj = tb.d[enter];
    const double dz = dj * theta;
    tb.z += dz;
    for (std::size_t j = 0; j < tb.ncols; ++j) tb.d[j] -= dj * pr[j];
    tb.d[enter] = 0.0;
    tb.basis[leave] = enter;

    if (!bland) {
      degenerate_streak = std::fabs(dz) < 1e-12 ? degenerate_streak + 1 : 0;
      if (degenerate_streak >= kDegenerateStreak) bland = true;
    }
  }
}

void reduced_costs_from_scratch(Tableau& tb, const std::vector<double>& cost) {
  tb.d = cost;
  tb.z = 0.0;
  for (std::size_t i = 0; i < tb.m; ++i) {
    const double cb = cost[tb.basis[i]];
    if (cb == 0.0) continue;
    const double* ri = tb.row(i);
    for (std::size_t j = 0; j < tb.ncols; ++j) tb.d[j] -= cb * ri[j];
    tb.z += cb * tb.rhs[i];
  }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.c.size();
  if (n == 0) throw std::invalid_argument("lp has no variables");
  if (!lp.upper.empty() && lp.upper.size() != n)
    throw std::invalid_argument("upper bound vector size mismatch");

  // Assemble the row system: caller rows, then bound rows for finite uppers.
  std::vector<LpRow> rows = lp.rows;
  for (auto& r : rows)
    if (r.a.size() != n) throw std::invalid_argument("lp row width mismatch");
  for (std::size_t j = 0; j < lp.upper.size(); ++j) {
    if (std::isfinite(lp.upper[j])) {
      LpRow r;
      r.a.assign(n, 0.0);
      r.a[j] = 1.0;
      r.rel = Rel::kLe;
      r.rhs = lp.upper[j];
      rows.push_back(std::move(r));
    }
  }

  const std::size_t m_all = rows.size();
  std::vector<double> c_int(lp.c);
  const double sense_sign = lp.sense == Sense::kMax ? -1.0 : 1.0;
  if (lp.sense == Sense::kMax)
    for (auto& v : c_int) v = -v;

  // Row conditioning: normalize to unit max coefficient, flip to rhs >= 0,
  // and resolve coefficient-free rows immediately.
  std::vector<double> scale(m_all, 1.0), sign(m_all, 1.0);
  std::vector<Rel> rel(m_all);
  std::vector<double> b(m_all, 0.0);
  std::vector<bool> dropped(m_all, false);
  std::size_t m = 0;
  for (std::size_t i = 0; i < m_all; ++i) {
    double maxa = 0.0;
    for (double v : rows[i].a) maxa = std::max(maxa, std::fabs(v));
    if (maxa < kLpTol) {
      const double r = rows[i].rhs;
      const bool ok = (rows[i].rel == Rel::kLe && r >= -kLpTol) ||
                      (rows[i].rel == Rel::kGe && r <= kLpTol) ||
                      (rows[i].rel == Rel::kEq && std::fabs(r) <= kLpTol);
      if (!ok) return {LpStatus::kInfeasible, 0.0, {}, {}, 0};
      dropped[i] = true;
      continue;
    }
    scale[i] = maxa;
    double rhs = rows[i].rhs / maxa;
    rel[i] = rows[i].rel;
    if (rhs < 0.0) {
      sign[i] = -1.0;
      rhs = -rhs;
      if (rel[i] == Rel::kLe)
        rel[i] = Rel::kGe;
      else if (rel[i] == Rel::kGe)
        rel[i] = Rel::kLe;
    }
    b[i] = rhs;
    ++m;
  }

  // Column layout: original variables, then slack/surplus, then artificials.
  std::size_t n_slack = 0, n_art = 0;
  for (std::size_t i = 0; i < m_all; ++i) {
    if (dropped[i]) continue;
    if (rel[i] != Rel::kEq) ++n_slack;
    if (rel[i] != Rel::kLe) ++n_art;
  }
  const std::size_t art_start = n + n_slack;
  const std::size_t ncols = n + n_slack + n_art;

  Tableau tb;
  tb.m = m;
  tb.ncols = ncols;
  tb.t.assign(m * ncols, 0.0);
  tb.rhs.assign(m, 0.0);
  tb.basis.assign(m, -1);

  std::vector<int> carrier(m_all, -1);  // identity column proving B^-1 e_i
  std::vector<std::size_t> dense_of(m_all, 0);
  {
    std::size_t slack_col = n, art_col = art_start, k = 0;
    for (std::size_t i = 0; i < m_all; ++i) {
      if (dropped[i]) continue;
      dense_of[i] = k;
      double* rk = tb.row(k);
      for (std::size_t j = 0; j < n; ++j) rk[j] = sign[i] * rows[i].a[j] / scale[i];
      tb.rhs[k] = b[i];
      if (rel[i] == Rel::kLe) {
        rk[slack_col] = 1.0;
        tb.basis[k] = static_cast<int>(slack_col);
        carrier[i] = static_cast<int>(slack_col);
        ++slack_col;
      } else if (rel[i] == Rel::kGe) {
        rk[slack_col] = -1.0;
        ++slack_col;
        rk[art_col] = 1.0;
        tb.basis[k] = static_cast<int>(art_col);
        carrier[i] = static_cast<int>(art_col);
        ++art_col;
      } else {
        rk[art_col] = 1.0;
        tb.basis[k] = static_cast<int>(art_col);
        carrier[i] = static_cast<int>(art_col);
        ++art_col;
      }
      ++k;
    }
  }

  const int max_iterations = 20000 + 25 * static_cast<int>(m + ncols);
  int iterations = 0;
  LpSolution out;
  out.x.assign(n, 0.0);
  out.duals.assign(m_all, 0.0);

  // Phase 1: drive the artificial variables to zero.
  if (n_art > 0) {
    std::vector<double> cost1(ncols, 0.0);
    for (std::size_t j = art_start; j < ncols; ++j) cost1[j] = 1.0;
    reduced_costs_from_scratch(tb, cost1);
    run_simplex(tb, ncols, iterations, max_iterations);  // bounded below by 0
    if (tb.z > kPhase1Tol) {
      out.status = LpStatus::kInfeasible;
      out.iterations = iterations;
      return out;
    }
    // Pivot lingering artificials out wherever the row has real support;
    // rows without support are redundant and stay inert.
    for (std::size_t i = 0; i < m; ++i) {
      if (static_cast<std::size_t>(tb.basis[i]) < art_start) continue;
      const double* ri = tb.row(i);
      int jpick = -1;
      for (std::size_t j = 0; j < art_start; ++j)
        if (std::fabs(ri[j]) > 1e-7) {
          jpick = static_cast<int>(j);
          break;
        }
      if (jpick < 0) continue;
      double* pr = tb.row(i);
      const double piv = pr[jpick];
      for (std::size_t j = 0; j < ncols; ++j) pr[j] /= piv;
      tb.rhs[i] /= piv;
      pr[jpick] = 1.0;
      for (std::size_t k2 = 0; k2 < m; ++k2) {
        if (k2 == i) continue;
        double* rk = tb.row(k2);
        const double f = rk[jpick];
        if (f == 0.0) continue;
        for (std::size_t j = 0; j < ncols; ++j) rk[j] -= f * pr[j];
        tb.rhs[k2] -= f * tb.rhs[i];
        rk[jpick] = 0.0;
      }
      tb.basis[i] = jpick;
    }
  }

  // Phase 2 on the true objective; artificial columns are banned.
  std::vector<double> cost2(ncols, 0.0);
  for (std::size_t j = 0; j < n; ++j) cost2[j] = c_int[j];
  reduced_costs_from_scratch(tb, cost2);
  if (!run_simplex(tb, art_start, iterations, max_iterations)) {
    out.status = LpStatus::kUnbounded;
    out.iterations = iterations;
    return out;
  }

  for (std::size_t i = 0; i < m; ++i) {
    const int j = tb.basis[i];
    if (j >= 0 && static_cast<std::size_t>(j) < n) out.x[j] = std::max(0.0, tb.rhs[i]);
  }
  double value = 0.0;
  for (std::size_t j = 0; j < n; ++j) value += lp.c[j] * out.x[j];
  out.value = value;

  // Duals from the final basis: y = cost_B * B^-1, read through each row's
  // initial identity carrier column, then undone of scaling/flips/sense.
  for (std::size_t i = 0; i < m_all; ++i) {
    if (dropped[i]) continue;
    const int col = carrier[i];
    double y = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      const double cb = cost2[tb.basis[k]];
      if (cb != 0.0) y += cb * tb.row(k)[col];
    }
    out.duals[i] = sense_sign * sign[i] * y / scale[i];
  }

  out.status = LpStatus::kOptimal;
  out.iterations = iterations;
  return out;
}

CutResult solve_with_cuts(LinearProgram base,
                          const std::function<SeparationResult(const std::vector<double>&)>& oracle,
                          int max_rounds) {
  CutResult out;
  for (;;) {
    LpSolution sol = solve_lp(base);
    if (sol.status != LpStatus::kOptimal) {
      out.status = sol.status;
      return out;
    }
    SeparationResult sep = oracle(sol.x);
    if (sep.feasible) {
      out.status = LpStatus::kOptimal;
      out.value = sol.value;
      out.x = std::move(sol.x);
      return out;
    }
    if (out.rounds >= max_rounds) {
      out.status = LpStatus::kOptimal;
      out.value = sol.value;
      out.x = std::move(sol.x);
      out.round_limit = true;
      return out;
    }
    ++out.rounds;
    out.witnesses.push_back(sep.witness_mask);
    base.rows.push_back(std::move(sep.row));
  }
}

}  // namespace coalition
