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
#include <vector>

#include "coalition/cnf.hpp"
#include "coalition/game.hpp"
#include "coalition/undirected_graph.hpp"

namespace coalition {

// Generators that map classic decision problems onto cascade games whose
// solution values answer the source instance. All of them are deterministic
// constructions; the cascade graphs they emit stay within the exact-spread
// enumeration budget (at most 2n+2 probabilistic edges in the satisfiability
// construction for n variables, none anywhere else).

struct SatReduction {
  SocialGraph graph;
  TruncatedGame game;
};

// Tripartite cascade game whose relative least-core value lands on or above
// sat_threshold(n, m) exactly when the formula is satisfiable. Players, in
// bit order, are S_1..S_n, T_1..T_n, the clause dummies u_1..u_{n+1}, the
// sink dummies v_1..v_n, and Q; the counted targets are the literal nodes,
// one node per clause, and the sink w. With N = 2n + m the grand coalition
// spreads N + 7/8 and the success threshold is N + 1/2, which {Q} meets on
// its own. Requires m > 4n (pad tiny formulas by repeating clauses).
SatReduction sat_to_game(const CnfFormula& f);

// Decision threshold for sat_to_game instances:
// 1 - (1/3)(N + 7/8)/(N + 1/2) with N = 2n + m. Requires m > 4n.
double sat_threshold(int n_vars, int n_clauses);

struct MaxcutReduction {
  SocialGraph graph;
  TruncatedGame game;
};

// Layered unit-probability cascade with one node per edge of g plus a copy,
// so sigma(S) = 2 * (number of edges touching S) and every coalition is
// successful (threshold zero). The absolute least-core value of the game
// equals the maximum cut of g.
MaxcutReduction maxcut_to_game(const UndirectedGraph& g);

// Candidate point for the relative least-core program.
struct RlcvCandidate {
  Allocation x;
  double r = 0.0;
};

struct DomsetReduction {
  SocialGraph graph;
  TruncatedGame game;
  RlcvCandidate candidate;
};

// Closed-neighborhood bipartite cascade: sigma(S) counts the vertices S
// dominates, and only dominating sets are successful (threshold n). The
// bundled candidate (all-ones payoff, r = 1 - (k+1)/n) is feasible for the
// relative least-core program iff g has no dominating set of size <= k.
// Requires 1 <= k < n.
DomsetReduction domset_to_game(const UndirectedGraph& g, int k);

// Does (x, r) satisfy the relative least-core program: x >= 0, x(V) exactly
// the budget, and x(S) >= (1 - r) sigma(S) for every successful coalition?
// Comparisons carry an absolute slack of tol. n <= 20.
bool rlcv_candidate_feasible(const TruncatedGame& g, const RlcvCandidate& c,
                             double tol = 1e-9);

// Coverage game over the given collection: every universe element weighs
// total / |universe| and the success threshold is the full budget, so a
// coalition earns only by covering everything. The adversarial cover value
// of the game prices how replaceable the sets are. Requires a nonempty
// universe that the collection actually covers and total > 0.
TruncatedGame setcover_to_game(const std::vector<std::string>& universe,
                               const std::vector<std::vector<int>>& collection,
                               double total);

}  // namespace coalition
