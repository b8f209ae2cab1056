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

#include <stdexcept>

#include "coalition/coalition.hpp"
#include "coalition/social_graph.hpp"

namespace coalition {

// Raised when exact_spread would have to enumerate more probabilistic edges
// than the configured cap allows.
struct SpreadCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Expected number of activated target nodes when the seed nodes selected by
// `s` (bit i selects g.seeds[i]) start an independent cascade. Exact value via
// enumeration of all live-edge realizations of the strictly probabilistic
// edges (0 < p < 1); edges with p == 1 are always live, p == 0 never.
// Throws SpreadCapExceeded past cfg.max_probabilistic_edges.
double exact_spread(const SocialGraph& g, Coalition s, const SpreadConfig& cfg = {});

// Monte-Carlo estimate of the same quantity. Sample r flips its edge coins
// with a child RNG seeded deterministically from (cfg.master_seed, r), so the
// estimate is reproducible and independent of worker count. Worker count is
// capped by the COALITION_CORE_THREADS environment variable (default 1).
double mc_spread(const SocialGraph& g, Coalition s, const SpreadConfig& cfg);

// Worker cap from COALITION_CORE_THREADS (>= 1; unset or invalid -> 1).
int worker_count();

}  // namespace coalition
