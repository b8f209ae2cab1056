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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "coalition/alcv_solver.hpp"
#include "coalition/reductions.hpp"
#include "coalition/reference_oracles.hpp"
#include "coalition/rlcv_solver.hpp"
#include "doctest.h"
#include "support/samplers.hpp"

using namespace coalition;

namespace {

int probabilistic_edges(const SocialGraph& g) {
  int count = 0;
  for (const auto& e : g.edges)
    if (e.p > 0.0 && e.p < 1.0) ++count;
  return count;
}

// m clauses over one variable, `negated` of them holding -1 and the rest +1.
CnfFormula one_var_formula(int m, int negated) {
  CnfFormula f;
  f.n_vars = 1;
  for (int j = 0; j < m; ++j) f.clauses.push_back({j < negated ? -1 : 1});
  return f;
}

}  // namespace

TEST_CASE("satisfiability game structure on the one-variable fixture") {
  const SatReduction red = sat_to_game(one_var_formula(5, 0));
  CHECK(red.game.n == 6);  // S1, T1, u1, u2, v1, Q
  CHECK(red.game.eta == 7.5);
  CHECK(probabilistic_edges(red.graph) == 4);
  CHECK(red.graph.targets.size() == 8);  // x1, xbar1, c1..c5, w

  const Coalition q(0b100000, 6);
  CHECK(std::fabs(sigma(red.game, q) - 7.5) < 1e-9);  // N + 1/2
  CHECK(is_successful(red.game, q));

  const Coalition u_set(0b001100, 6);
  CHECK(std::fabs(sigma(red.game, u_set) - 5.5) < 1e-9);  // m + 1/2
  CHECK_FALSE(is_successful(red.game, u_set));

  CHECK(std::fabs(sigma(red.game, Coalition::all(6)) - 7.875) < 1e-9);  // N + 7/8

  // The satisfying assignment yields three disjoint successful coalitions.
  const Coalition a_side(0b010001, 6);  // {S1, v1}
  const Coalition b_side(0b001110, 6);  // {T1, u1, u2}
  CHECK(is_successful(red.game, a_side));
  CHECK(is_successful(red.game, b_side));
  CHECK((a_side.mask & b_side.mask) == 0);

  CHECK(validate_oracle(red.game).ok);
}

TEST_CASE("satisfiability game rejects malformed formulas") {
  CHECK_THROWS_AS(sat_to_game(one_var_formula(4, 0)), std::invalid_argument);
  CnfFormula empty_clause = one_var_formula(5, 0);
  empty_clause.clauses[2].clear();
  CHECK_THROWS_AS(sat_to_game(empty_clause), std::invalid_argument);
  CnfFormula bad_lit = one_var_formula(5, 0);
  bad_lit.clauses[0] = {2};
  CHECK_THROWS_AS(sat_to_game(bad_lit), std::invalid_argument);
}

TEST_CASE("satisfiability decision threshold") {
  CHECK(sat_threshold(1, 5) == doctest::Approx(0.65).epsilon(1e-12));
  CHECK(sat_threshold(2, 9) == doctest::Approx(1.0 - 13.875 / 40.5).epsilon(1e-12));
  CHECK(sat_threshold(1, 1000000) < 2.0 / 3.0);
  CHECK(sat_threshold(1, 1000000) > 2.0 / 3.0 - 1e-5);
  CHECK_THROWS_AS(sat_threshold(1, 4), std::invalid_argument);
}

TEST_CASE("least-core value of a satisfiability game separates at the threshold") {
  // Satisfiable formulas sit exactly AT the threshold (solver round-off puts
  // them within ~1e-12 of it on either side) while unsatisfiable ones fall
  // percent-scale below, so the comparison carries a 1e-9 slack.
  const double slack = 1e-9;

  // One variable, five clauses: mixing polarities makes the formula
  // unsatisfiable, a single polarity keeps it satisfiable.
  for (int negated = 0; negated <= 5; ++negated) {
    const CnfFormula f = one_var_formula(5, negated);
    const bool satisfiable = brute_sat(f);
    CHECK(satisfiable == (negated == 0 || negated == 5));
    const SatReduction red = sat_to_game(f);
    const double r = brute_rlcv(red.game);
    CAPTURE(negated);
    CHECK((r >= sat_threshold(1, 5) - slack) == satisfiable);
  }

  // Two variables, all four binary clause patterns padded to nine clauses
  // is unsatisfiable; dropping any one pattern restores satisfiability.
  auto two_var = [](int dropped) {
    const std::vector<std::vector<int>> patterns = {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}};
    CnfFormula f;
    f.n_vars = 2;
    for (int p = 0; p < 4; ++p) {
      if (p == dropped) continue;
      f.clauses.push_back(patterns[static_cast<std::size_t>(p)]);
    }
    while (f.clauses.size() < 9) f.clauses.push_back(f.clauses.front());
    return f;
  };
  for (int dropped = -1; dropped < 4; dropped += 2) {
    const CnfFormula f = two_var(dropped);
    const bool satisfiable = brute_sat(f);
    CHECK(satisfiable == (dropped >= 0));
    const SatReduction red = sat_to_game(f);
    CHECK(red.game.n == 10);
    CHECK(probabilistic_edges(red.graph) == 6);
    const double r = brute_rlcv(red.game);
    CAPTURE(dropped);
    CHECK((r >= sat_threshold(2, 9) - slack) == satisfiable);
  }
}

TEST_CASE("max-cut game fixtures") {
  UndirectedGraph k3;
  k3.num_vertices = 3;
  k3.edges = {{0, 1}, {1, 2}, {0, 2}};
  const MaxcutReduction red = maxcut_to_game(k3);
  CHECK(red.game.n == 3);
  CHECK(red.game.eta == 0.0);
  CHECK(probabilistic_edges(red.graph) == 0);
  CHECK(sigma(red.game, Coalition::all(3)) == 6.0);
  CHECK(alcv_exact(red.game).epsilon == doctest::Approx(2.0).epsilon(1e-9));

  UndirectedGraph single;
  single.num_vertices = 2;
  single.edges = {{0, 1}};
  CHECK(alcv_exact(maxcut_to_game(single).game).epsilon == doctest::Approx(1.0));

  UndirectedGraph edgeless;
  edgeless.num_vertices = 3;
  CHECK(alcv_exact(maxcut_to_game(edgeless).game).epsilon == 0.0);

  UndirectedGraph loop;
  loop.num_vertices = 2;
  loop.edges = {{1, 1}};
  CHECK_THROWS_AS(maxcut_to_game(loop), std::invalid_argument);
}

TEST_CASE("max-cut game spread counts incident edges twice") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const UndirectedGraph g = testing::random_graph(rng, 7);
    const MaxcutReduction red = maxcut_to_game(g);
    for (std::uint64_t mask = 0; mask < coalition_count(g.num_vertices); ++mask) {
      int touching = 0;
      for (const auto& [a, b] : g.edges)
        if (((mask >> a) & 1u) || ((mask >> b) & 1u)) ++touching;
      CHECK(sigma(red.game, Coalition(mask, g.num_vertices)) == 2.0 * touching);
    }
  }
}

TEST_CASE("least-core value of a max-cut game equals the maximum cut") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const UndirectedGraph g = testing::random_graph(rng, 8);
    const MaxcutReduction red = maxcut_to_game(g);
    CAPTURE(trial);
    CHECK(alcv_exact(red.game).epsilon ==
          doctest::Approx(static_cast<double>(brute_max_cut(g))).epsilon(1e-9));
  }
}

TEST_CASE("dominating-set game and candidate on the three-path") {
  UndirectedGraph path;
  path.num_vertices = 3;
  path.edges = {{0, 1}, {1, 2}};
  const DomsetReduction red = domset_to_game(path, 1);
  CHECK(red.game.eta == 3.0);
  CHECK(probabilistic_edges(red.graph) == 0);
  CHECK(red.candidate.r == doctest::Approx(1.0 / 3.0));
  CHECK(red.candidate.x.x == std::vector<double>{1.0, 1.0, 1.0});

  // The middle vertex dominates alone, and one unit misses (1 - r) * 3 = 2.
  const Coalition middle(0b010, 3);
  CHECK(sigma(red.game, middle) == 3.0);
  CHECK(coalition_sum(red.candidate.x.x, middle) == 1.0);
  CHECK_FALSE(rlcv_candidate_feasible(red.game, red.candidate));
  CHECK(brute_min_dominating_set(path) == 1);

  CHECK_THROWS_AS(domset_to_game(path, 0), std::invalid_argument);
  CHECK_THROWS_AS(domset_to_game(path, 3), std::invalid_argument);
}

TEST_CASE("dominating-set candidate feasibility tracks the minimum dominating set") {
  UndirectedGraph k4;
  k4.num_vertices = 4;
  k4.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK_FALSE(rlcv_candidate_feasible(domset_to_game(k4, 1).game, domset_to_game(k4, 1).candidate));

  UndirectedGraph c6;
  c6.num_vertices = 6;
  c6.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
  const DomsetReduction cycle = domset_to_game(c6, 1);
  CHECK(brute_min_dominating_set(c6) == 2);
  CHECK(rlcv_candidate_feasible(cycle.game, cycle.candidate));

  UndirectedGraph isolated;
  isolated.num_vertices = 4;
  const DomsetReduction apart = domset_to_game(isolated, 2);
  CHECK(rlcv_candidate_feasible(apart.game, apart.candidate));

  std::mt19937_64 rng(41);
  int feasible_seen = 0;
  int infeasible_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const UndirectedGraph g = testing::random_graph(rng, 8);
    const int k = 1 + static_cast<int>(rng() % (g.num_vertices - 1));
    const DomsetReduction red = domset_to_game(g, k);
    const bool feasible = rlcv_candidate_feasible(red.game, red.candidate);
    CAPTURE(trial);
    CHECK(feasible == (brute_min_dominating_set(g) >= k + 1));
    (feasible ? feasible_seen : infeasible_seen) += 1;
  }
  CHECK(feasible_seen > 5);
  CHECK(infeasible_seen > 5);
}

TEST_CASE("set-cover game fixtures") {
  CHECK(adversarial_cover_value(setcover_to_game({"a"}, {{0}}, 1.0)) == doctest::Approx(1.0));
  CHECK(adversarial_cover_value(setcover_to_game({"a"}, {{0}, {0}}, 1.0)) ==
        doctest::Approx(0.5));

  // A disjoint partition makes every set a veto player.
  const TruncatedGame partition =
      setcover_to_game({"p", "q", "r", "s"}, {{0}, {1}, {2, 3}}, 2.0);
  CHECK(adversarial_cover_value(partition) == doctest::Approx(2.0));

  // total / |universe| is inexact here; the grand coalition must still clear
  // the threshold.
  const TruncatedGame thirds = setcover_to_game({"a", "b", "c"}, {{0, 1, 2}}, 1.0);
  CHECK(is_successful(thirds, Coalition::all(1)));
  CHECK(adversarial_cover_value(thirds) == doctest::Approx(1.0));

  CHECK_THROWS_AS(setcover_to_game({}, {{0}}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(setcover_to_game({"a"}, {}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(setcover_to_game({"a"}, {{0}}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(setcover_to_game({"a"}, {{1}}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(setcover_to_game({"a", "b"}, {{0}}, 1.0), std::invalid_argument);
}

TEST_CASE("set-cover games agree with the brute-force adversarial value") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const int elements = 1 + static_cast<int>(rng() % 6);
    const int sets = 1 + static_cast<int>(rng() % 6);
    std::vector<std::string> universe;
    for (int e = 0; e < elements; ++e) universe.push_back("e" + std::to_string(e));
    std::vector<std::vector<int>> collection(static_cast<std::size_t>(sets));
    for (auto& cover : collection)
      for (int e = 0; e < elements; ++e)
        if (rng() & 1u) cover.push_back(e);
    for (int e = 0; e < elements; ++e) {
      bool covered = false;
      for (const auto& cover : collection)
        for (int c : cover) covered = covered || (c == e);
      if (!covered) collection[rng() % collection.size()].push_back(e);
    }
    const double total = 0.5 + static_cast<double>(rng() % 8);
    const TruncatedGame game = setcover_to_game(universe, collection, total);
    CAPTURE(trial);
    CHECK(adversarial_cover_value(game) ==
          doctest::Approx(brute_adversarial_value(game)).epsilon(1e-7));
  }
}
