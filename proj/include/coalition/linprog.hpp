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

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace coalition {

// Single absolute tolerance used for feasibility, reduced costs and pivot
// eligibility, applied after rows are normalized to unit max coefficient.
inline constexpr double kLpTol = 1e-9;

enum class Rel { kLe, kEq, kGe };

struct LpRow {
  std::vector<double> a;
  Rel rel = Rel::kLe;
  double rhs = 0.0;
};

enum class Sense { kMin, kMax };

// All variables are nonnegative. Finite entries of `upper` become internal
// x_j <= u_j rows, appended after the caller's rows (their duals are reported
// in that order, so strong duality holds over the full reported system).
struct LinearProgram {
  Sense sense = Sense::kMin;
  std::vector<double> c;
  std::vector<LpRow> rows;
  std::vector<double> upper;  // empty, or size c; +inf = unbounded above
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;
  std::vector<double> x;
  // One multiplier per row of the solved system (caller rows, then bound
  // rows); satisfies sum_i duals[i]*rhs[i] == value at optimality.
  std::vector<double> duals;
  int iterations = 0;
};

struct LpIterationLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense two-phase simplex. Dantzig pricing, switching permanently to Bland's
// rule after a degenerate streak, so cycling cannot occur. Infeasible and
// unbounded are certified outcomes, not errors.
LpSolution solve_lp(const LinearProgram& lp);

// Separation callback outcome: either the point is accepted, or a violated
// row (with the coalition mask that produced it, when meaningful) is handed
// back to be appended to the program.
struct SeparationResult {
  bool feasible = true;
  LpRow row;
  std::uint64_t witness_mask = 0;

  static SeparationResult ok() { return {}; }
  static SeparationResult cut(LpRow r, std::uint64_t mask = 0) {
    SeparationResult s;
    s.feasible = false;
    s.row = std::move(r);
    s.witness_mask = mask;
    return s;
  }
};

struct CutResult {
  LpStatus status = LpStatus::kInfeasible;
  bool round_limit = false;
  double value = 0.0;
  std::vector<double> x;
  int rounds = 0;                // separation calls that produced a cut
  std::vector<std::uint64_t> witnesses;  // masks of the added rows
};

// Row-generation driver: solve, ask the oracle, append the violated row,
// repeat. Replaces the ellipsoid method the complexity arguments lean on; at
// this scale re-solving a dense LP per round is the simpler machine.
CutResult solve_with_cuts(LinearProgram base,
                          const std::function<SeparationResult(const std::vector<double>&)>& oracle,
                          int max_rounds = 100000);

inline constexpr double kLpInf = std::numeric_limits<double>::infinity();

}  // namespace coalition
