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

enum class RlcvMethod { kEtaZero, kExact, kCutGen };

// Relative least-core solve: the smallest r such that some budget-exact
// payoff vector leaves every successful coalition with at least a (1-r)
// fraction of its profit.
struct RlcvResult {
  double r = 0.0;
  Allocation x;
  RlcvMethod method = RlcvMethod::kExact;
  // Masks of binding constraints at the optimum (x(S) == (1-r) sigma(S)
  // within 1e-7), restricted to the rows the method actually solved with.
  std::vector<std::uint64_t> tight_coalitions;
  int rounds = 0;  // separation rounds, cut generation only
};

// Threshold-free games: the worst proportional shortfall is always attained
// by a single player, so the n singleton rows are the whole program.
// Throws std::invalid_argument when eta != 0.
RlcvResult rlcv_eta_zero(const TruncatedGame& g);

// Full enumeration of successful coalitions (n <= 20).
RlcvResult rlcv_exact(const TruncatedGame& g);

// Row generation with exhaustive separation over successful coalitions in
// canonical mask order (n <= 24). Equal to rlcv_exact at termination.
RlcvResult rlcv_cut_generation(const TruncatedGame& g, int max_rounds = 100000);

// Games with eta = sigma(V): the largest payoff that can be guaranteed to
// every successful coalition simultaneously, max_x min{x(S) : S successful}.
// Satisfies value = (1 - RLCV) * sigma(V). n <= 20.
double adversarial_cover_value(const TruncatedGame& g);

}  // namespace coalition
