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

#include <functional>

#include "coalition/cnf.hpp"
#include "coalition/game.hpp"
#include "coalition/undirected_graph.hpp"

namespace coalition {

// Brute-force baselines. Each builds its linear program by full enumeration
// and solves it directly, or searches the whole space; none of them share
// logic with the solvers they exist to check. All game oracles require
// n <= 12 (the LPs are dense in 2^n).

// Stability: does any payoff vector x >= 0 with x(V) = sigma(V) satisfy
// x(S) >= f(S) for every coalition?
bool brute_core_feasible(const TruncatedGame& g);

// Minimum r such that some budget-exact x >= 0 has x(S) >= (1-r) sigma(S)
// for every successful coalition. Always in [0, 1].
double brute_rlcv(const TruncatedGame& g);

// Minimum eps with x(S) >= sigma(S) - eps over successful coalitions.
double brute_alcv(const TruncatedGame& g);

// Minimum eps with x(S) >= eta - eps over successful coalitions.
double brute_alcv_re(const TruncatedGame& g);

// Minimum eps with x(S) >= sigma(S) - eps over ALL coalitions (no
// truncation in the constraints).
double brute_alcv_str(const TruncatedGame& g);

// Minimum of (1/2^n) sum_S max{f(S) - x(S), 0} over budget-exact x >= 0.
double brute_ladv(const TruncatedGame& g);

// For games with eta = sigma(V): the best guaranteed payoff of a successful
// coalition, max over x of min{x(S) : S successful}. Equals
// (1 - RLCV) * sigma(V).
double brute_adversarial_value(const TruncatedGame& g);

int brute_max_cut(const UndirectedGraph& g);
int brute_min_dominating_set(const UndirectedGraph& g);
bool brute_sat(const CnfFormula& f);

// Exhaustive max of an arbitrary set function over 2^n subsets (n <= 20).
double brute_submodular_max(const std::function<double(Coalition)>& g, int n);

}  // namespace coalition
