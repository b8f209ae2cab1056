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
#include <string>
#include <vector>

#include "coalition/game.hpp"

namespace coalition {

// Absolute least-core solve: the smallest uniform slack eps such that some
// budget-exact payoff vector leaves every successful coalition short of its
// profit by at most eps.
struct AlcvResult {
  double epsilon = 0.0;
  Allocation x;
  // Masks with x(S) + eps == sigma(S) within 1e-7, over the solved rows.
  std::vector<std::uint64_t> tight_coalitions;
};

// Full enumeration of successful coalitions (n <= 20).
AlcvResult alcv_exact(const TruncatedGame& g);

// Deterministic one-pass maximizer for a submodular set function whose
// endpoint values g(empty) and g(V) are nonnegative. Scans players in index
// order, keeping each one when its gain to the growing set is at least its
// removal gain from the shrinking set.
struct DoubleGreedyResult {
  Coalition set;
  double value = 0.0;
  int oracle_calls = 0;  // never more than 2n
};

// 3 * value >= max_T g(T) + g(empty) + g(V), so value >= max_T g(T) / 3.
DoubleGreedyResult double_greedy_max(int n, const std::function<double(Coalition)>& g);

// Most dissatisfied coalition under x, approximately: maximizes
// g(S) = sigma(S) - x(S), which is submodular with g(empty) = g(V) = 0
// whenever x(V) = sigma(V). Throws std::invalid_argument when x is not a
// nonnegative budget-exact allocation.
DoubleGreedyResult x_md_value(const TruncatedGame& g, const std::vector<double>& x);

// Row generation on the untruncated program
//   min eps  s.t.  x(V) = sigma(V), x >= 0, x(S) + eps >= sigma(S) for all S,
// separated by x_md_value. The optimum over the generated rows can
// undershoot the true one by at most 3x (the separation misses violations
// it cannot see, but never by more than that factor), so tripling it gives
// eps in [eps_opt, 3 * eps_opt].
struct StrApproxResult {
  double eps = 0.0;          // 3x the relaxed optimum; certified upper bound
  double eps_relaxed = 0.0;  // optimum over the generated rows; lower bound
  Allocation x;
  int rounds = 0;
  bool round_limit = false;
};

StrApproxResult lp_str_approx(const TruncatedGame& g, int max_rounds = 100000);

// Separation for the level-k guarantee "every successful coalition receives
// at least k*delta".
enum class LfpVerdict { kViolated, kFeasibleForK, kFeasibleForKMinusOne };

enum class LfpMode {
  // Close the blind spots of the discretized scan with an exhaustive one
  // (n <= 20). Verdicts are exact: kViolated or kFeasibleForK.
  kExact,
  // Trust the discretized scan alone. A miss only certifies level k-1, and
  // only for coalitions whose prefix-marginal profit clears the threshold;
  // exact for additive-like profits, a lower bound otherwise.
  kDpOnly,
};

struct LfpOracleOutcome {
  LfpVerdict verdict = LfpVerdict::kFeasibleForK;
  Coalition witness;  // set when verdict == kViolated
};

// Decides whether some successful coalition S has x(S) < k*delta. Payments
// are floored to multiples of delta/m_disc and a subset-sum table over
// prefix marginals sigma({0..j}) - sigma({0..j-1}) is scanned; marginals
// underestimate sigma(S) when sigma is not additive. Hits are re-verified
// against the real oracle and undiscretized x, so a kViolated witness is
// always a genuine violated row.
LfpOracleOutcome lfp_partial_oracle(const TruncatedGame& g, const std::vector<double>& x,
                                    int k, double delta, int m_disc,
                                    LfpMode mode = LfpMode::kExact);

// Ascending search over guarantee levels k = 1..ceil(eta/delta), each level
// solved by row generation over a shared pool of discovered coalitions and
// separated by lfp_partial_oracle. An infeasible level genuinely has no
// solution and stops the climb; a discretized miss records level k-1 as
// held and keeps climbing. eps = eta - k_held*delta then overshoots the
// true threshold-relaxed optimum by at most 2*delta (at most delta in
// exact mode) and never undershoots it.
struct LpReResult {
  double eps = 0.0;
  int k_held = 0;        // largest level with a recorded feasible point
  int levels_tried = 0;  // levels whose LP was posed
  Allocation x;          // recorded point for k_held; uniform when k_held = 0
  int rounds = 0;        // separation rounds summed over levels
  bool round_limit = false;
};

LpReResult lp_re_solve(const TruncatedGame& g, double delta, LfpMode mode = LfpMode::kExact,
                       int max_rounds_per_level = 100000);

// Combined approximation: the threshold-relaxed branch is off from the
// absolute least-core value by at most sigma(V) - eta + 2*delta, the
// untruncated branch by a factor of 3 or an additive eta, whichever is
// smaller. The reported allocation witnesses the reported value: every
// successful coalition is short by at most eps_prime (exact mode).
struct AlcvApproxResult {
  double eps_prime = 0.0;  // min(eps_re + sigma(V) - eta, eps_str)
  double eps_str = 0.0;
  double eps_re = 0.0;
  double delta = 0.0;
  Allocation x;
  std::string guarantee;
  bool round_limit = false;
};

AlcvApproxResult alcv_approx(const TruncatedGame& g, double delta,
                             LfpMode mode = LfpMode::kExact);

}  // namespace coalition
