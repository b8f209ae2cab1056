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

#include "coalition/reductions.hpp"

#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <utility>

#include "coalition/social_graph.hpp"

namespace coalition {

namespace {

void require_simple(const UndirectedGraph& g) {
  if (g.num_vertices < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= g.num_vertices || b >= g.num_vertices)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loops are not allowed");
    if (!seen.insert(std::minmax(a, b)).second)
      throw std::invalid_argument("duplicate edge");
  }
}

}  // namespace

SatReduction sat_to_game(const CnfFormula& f) {
  const int n = f.n_vars;
  const int m = static_cast<int>(f.clauses.size());
  if (n < 1) throw std::invalid_argument("formula needs at least one variable");
  if (m <= 4 * n)
    throw std::invalid_argument("construction needs more than 4n clauses; pad by repetition");
  for (const auto& clause : f.clauses) {
    if (clause.empty()) throw std::invalid_argument("empty clause");
    for (int lit : clause)
      if (lit == 0 || std::abs(lit) > n) throw std::invalid_argument("literal out of range");
  }

  // Node ids, player layer first: S_i, T_i, u_1..u_{n+1}, v_1..v_n, Q, then
  // the counted layer: x_i, xbar_i, c_j, w.
  const int s_base = 0;
  const int t_base = n;
  const int u_base = 2 * n;
  const int v_base = 3 * n + 1;
  const int q_node = 4 * n + 1;
  const int x_base = 4 * n + 2;
  const int xbar_base = 5 * n + 2;
  const int c_base = 6 * n + 2;
  const int w_node = 6 * n + 2 + m;

  SocialGraph graph;
  for (int id = 0; id <= q_node; ++id) graph.seeds.push_back(id);
  for (int id = x_base; id <= w_node; ++id) graph.targets.push_back(id);

  auto unit = [&graph](int src, int dst) { graph.edges.push_back({src, dst, 1.0}); };
  for (int i = 0; i < n; ++i) {
    unit(s_base + i, x_base + i);
    unit(s_base + i, xbar_base + i);
    unit(t_base + i, x_base + i);
    unit(t_base + i, xbar_base + i);
  }
  for (int j = 0; j < m; ++j) {
    std::set<int> sources;  // repeated literals must not duplicate edges
    for (int lit : f.clauses[static_cast<std::size_t>(j)])
      sources.insert(lit > 0 ? s_base + (lit - 1) : t_base + (-lit - 1));
    for (int src : sources) unit(src, c_base + j);
  }
  for (int i = 0; i < n; ++i) unit(u_base + i, c_base + i);
  for (int j = n; j < m; ++j) unit(u_base + n, c_base + j);
  // Each dummy family alone leaves the sink a coin flip: its survival
  // probabilities multiply to exactly 1/2.
  const double p_u = 1.0 - std::pow(0.5, 1.0 / (n + 1));
  const double p_v = 1.0 - std::pow(0.5, 1.0 / n);
  for (int i = 0; i <= n; ++i) graph.edges.push_back({u_base + i, w_node, p_u});
  for (int i = 0; i < n; ++i) graph.edges.push_back({v_base + i, w_node, p_v});
  for (int i = 0; i < n; ++i) {
    unit(q_node, x_base + i);
    unit(q_node, xbar_base + i);
  }
  for (int j = 0; j < m; ++j) unit(q_node, c_base + j);
  graph.edges.push_back({q_node, w_node, 0.5});
  validate_graph(graph);

  SatReduction out;
  out.graph = graph;
  out.game =
      make_game(4 * n + 2, 2.0 * n + m + 0.5, IcSpread{std::move(graph), SpreadConfig{}});
  return out;
}

double sat_threshold(int n_vars, int n_clauses) {
  if (n_vars < 1 || n_clauses <= 4 * n_vars)
    throw std::invalid_argument("threshold is defined for m > 4n only");
  const double big_n = 2.0 * n_vars + n_clauses;
  return 1.0 - (big_n + 7.0 / 8.0) / (3.0 * (big_n + 0.5));
}

MaxcutReduction maxcut_to_game(const UndirectedGraph& g) {
  require_simple(g);
  const int w = g.num_vertices;
  const int e = static_cast<int>(g.edges.size());

  SocialGraph graph;
  for (int id = 0; id < w; ++id) graph.seeds.push_back(id);
  for (int id = w; id < w + 2 * e; ++id) graph.targets.push_back(id);
  for (int idx = 0; idx < e; ++idx) {
    const auto [a, b] = g.edges[static_cast<std::size_t>(idx)];
    graph.edges.push_back({a, w + idx, 1.0});
    graph.edges.push_back({b, w + idx, 1.0});
    graph.edges.push_back({w + idx, w + e + idx, 1.0});
  }
  validate_graph(graph);

  MaxcutReduction out;
  out.graph = graph;
  out.game = make_game(w, 0.0, IcSpread{std::move(graph), SpreadConfig{}});
  return out;
}

DomsetReduction domset_to_game(const UndirectedGraph& g, int k) {
  require_simple(g);
  const int n = g.num_vertices;
  if (k < 1 || k >= n) throw std::invalid_argument("k must satisfy 1 <= k < n");

  SocialGraph graph;
  for (int id = 0; id < n; ++id) graph.seeds.push_back(id);
  for (int id = n; id < 2 * n; ++id) graph.targets.push_back(id);
  for (int i = 0; i < n; ++i) graph.edges.push_back({i, n + i, 1.0});
  for (const auto& [a, b] : g.edges) {
    graph.edges.push_back({a, n + b, 1.0});
    graph.edges.push_back({b, n + a, 1.0});
  }
  validate_graph(graph);

  DomsetReduction out;
  out.graph = graph;
  out.game = make_game(n, static_cast<double>(n), IcSpread{std::move(graph), SpreadConfig{}});
  out.candidate.x.x.assign(static_cast<std::size_t>(n), 1.0);
  out.candidate.x.total = static_cast<double>(n);
  out.candidate.r = 1.0 - (k + 1.0) / n;
  return out;
}

bool rlcv_candidate_feasible(const TruncatedGame& g, const RlcvCandidate& c, double tol) {
  if (g.n > 20) throw std::invalid_argument("enumeration supports at most 20 players");
  if (static_cast<int>(c.x.x.size()) != g.n)
    throw std::invalid_argument("payoff vector size does not match the player count");
  const TruncatedGame table = materialize_table(g);
  double sum = 0.0;
  for (double v : c.x.x) {
    if (v < -tol) return false;
    sum += v;
  }
  const double total = sigma(table, Coalition::all(g.n));
  if (std::fabs(sum - total) > tol * std::fmax(1.0, std::fabs(total))) return false;
  for (std::uint64_t mask = 1; mask < coalition_count(g.n); ++mask) {
    const Coalition s(mask, g.n);
    if (!is_successful(table, s)) continue;
    if (coalition_sum(c.x.x, s) < (1.0 - c.r) * sigma(table, s) - tol) return false;
  }
  return true;
}

TruncatedGame setcover_to_game(const std::vector<std::string>& universe,
                               const std::vector<std::vector<int>>& collection,
                               double total) {
  const int u = static_cast<int>(universe.size());
  if (u < 1) throw std::invalid_argument("universe is empty");
  if (collection.empty()) throw std::invalid_argument("collection is empty");
  if (!(total > 0.0)) throw std::invalid_argument("total must be positive");
  std::vector<char> covered(universe.size(), 0);
  for (const auto& cover : collection)
    for (int e : cover) {
      if (e < 0 || e >= u) throw std::invalid_argument("element index out of range");
      covered[static_cast<std::size_t>(e)] = 1;
    }
  for (char hit : covered)
    if (!hit) throw std::invalid_argument("collection does not cover the universe");

  Coverage oracle;
  oracle.element_ids = universe;
  oracle.element_weights.assign(universe.size(), total / u);
  oracle.covers = collection;
  // The scaled weights carry round-off when total/|universe| is inexact, so
  // success gets a proportional slack; missing any element costs far more.
  return make_game(static_cast<int>(collection.size()), total, std::move(oracle),
                   1e-9 * std::fmax(1.0, total));
}

}  // namespace coalition
