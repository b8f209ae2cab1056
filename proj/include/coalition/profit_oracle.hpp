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

#include <string>
#include <variant>
#include <vector>

#include "coalition/coalition.hpp"
#include "coalition/social_graph.hpp"

namespace coalition {

// sigma(S) looked up from a table of 2^n values in canonical mask order.
struct ExplicitTable {
  std::vector<double> values;
};

// sigma(S) = sum of per-player weights.
struct Additive {
  std::vector<double> weights;
};

// Weighted coverage: sigma(S) = total weight of the elements covered by the
// players of S. covers[i] lists element indices covered by player i.
struct Coverage {
  std::vector<std::string> element_ids;
  std::vector<double> element_weights;
  std::vector<std::vector<int>> covers;
};

// sigma(S) = expected independent-cascade spread of the seed set S.
struct IcSpread {
  SocialGraph graph;
  SpreadConfig config;
};

using ProfitOracle = std::variant<ExplicitTable, Additive, Coverage, IcSpread>;

// Evaluate sigma(S) for an n-player oracle. Throws std::invalid_argument when
// s.n does not match n or the oracle payload does not fit n players.
double eval_sigma(const ProfitOracle& oracle, int n, Coalition s);

// First normalization/monotonicity/submodularity violation found by
// exhaustive enumeration, or ok. Cost O(2^n * n^2) oracle calls; n <= 20.
struct OracleDiagnostics {
  bool ok = true;
  std::string message;  // names a witness, e.g. the pair of sets that fails
};
OracleDiagnostics validate_oracle(const ProfitOracle& oracle, int n, double tol = 1e-9);

}  // namespace coalition
