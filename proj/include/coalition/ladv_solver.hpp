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
#include <vector>

#include "coalition/game.hpp"

namespace coalition {

// Estimate of the average dissatisfaction
//   F(x) = 2^-n * sum over all S of max(f(S) - x(S), 0).
struct FEstimate {
  double value = 0.0;
  double std_error = 0.0;  // zero when exact
  bool exact = true;
};

// Exact sweep when n <= 20; beyond that, a seeded sample mean over uniform
// coalitions with its standard error.
FEstimate F_eval(const TruncatedGame& g, const std::vector<double>& x,
                 int samples = 10000, std::uint64_t seed = 0x5eed0f5eedULL);

// Euclidean projection onto {x >= 0, sum(x) = total} by sorting and
// shifting: the unique threshold theta with sum(max(y_i - theta, 0)) =
// total. total must be positive.
Allocation project_to_budget_simplex(const std::vector<double>& y, double total);

struct SgdConfig {
  long long iterations = 10000;  // T >= 1
  double alpha = 0.0;            // step size, must be > 0
  std::uint64_t master_seed = 0;
  bool record_trace = false;
};

// Step size under which T iterations of the subgradient run certify an
// expected optimality gap of sqrt(total^4 * n^4 / T).
double sgd_guarantee_step(double total, int n, long long iterations);

struct SgdTracePoint {
  long long iteration = 0;  // 1-based
  double objective = 0.0;   // estimate of F at this iterate
  double step_norm = 0.0;   // Euclidean move applied at this iterate
};

enum class LadvMethod { kExact, kSgd };

struct LadvResult {
  double value = 0.0;  // smallest average dissatisfaction seen
  Allocation x;
  LadvMethod method = LadvMethod::kExact;
  std::vector<SgdTracePoint> trace;  // filled when record_trace
};

// Projected stochastic subgradient descent. Starts at the uniform
// allocation (the projection of 0 onto the budget simplex), draws one
// coalition per step from the seeded stream, pays it alpha more whenever
// its profit reaches its current payoff, and projects back. Returns the
// best iterate under F, evaluated exactly when n <= 12 and with a fixed
// 10^4-sample estimate otherwise. Deterministic given the config.
LadvResult sgd_ladv(const TruncatedGame& g, const SgdConfig& cfg);

// Exact minimum of F via a linear program with one hinge variable per
// profitable coalition (n <= 12).
LadvResult ladv_exact(const TruncatedGame& g);

}  // namespace coalition
