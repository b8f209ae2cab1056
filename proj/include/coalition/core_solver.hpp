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

#include <optional>
#include <vector>

#include "coalition/game.hpp"

namespace coalition {

// Why the core is nonempty (or that neither sufficient condition holds,
// which for these games is equivalent to emptiness).
enum class CoreReason { kVetoPlayer, kAdditive, kNeither };

struct CoreStatus {
  bool nonempty = false;
  CoreReason reason = CoreReason::kNeither;
  int veto_player = -1;  // the player paid everything on the veto path
  std::optional<Allocation> allocation;
};

// Players i with sigma(V \ {i}) < eta: no coalition succeeds without them.
std::vector<int> find_veto_players(const TruncatedGame& g);

// sigma(V) == sum of singleton values, within tol * max(1, sigma(V)).
// For submodular sigma this single equality forces additivity everywhere.
bool is_additive_grand(const TruncatedGame& g, double tol = 1e-9);

// Decision procedure: a veto player j yields the allocation that pays j
// everything; otherwise grand-coalition additivity yields the singleton
// allocation; otherwise the core is empty. Veto wins when both hold.
CoreStatus core_status(const TruncatedGame& g);

struct CoreViolation {
  enum class Kind { kNone, kBudget, kCoalition };
  Kind kind = Kind::kNone;
  Coalition witness;       // set when kind == kCoalition
  double shortfall = 0.0;  // f(S) - x(S), or |x(V) - sigma(V)| for budget
  bool ok() const { return kind == Kind::kNone; }
};

// Exhaustive stability check of x: budget x(V) = sigma(V), then
// x(S) >= f(S) for every coalition in canonical order. First violation
// beyond tol wins. n <= 20.
CoreViolation verify_core_allocation(const TruncatedGame& g, const std::vector<double>& x,
                                     double tol = 1e-9);

}  // namespace coalition
