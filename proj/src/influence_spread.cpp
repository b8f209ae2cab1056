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

#include "coalition/influence_spread.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace coalition {
namespace {

// Graph with ids compacted to dense indices. Edges with p == 0 are dropped,
// p == 1 edges are always live, the rest are indexed for coin flips.
struct Compiled {
  int num_nodes = 0;
  std::vector<int> seed_nodes;
  std::vector<char> is_target;
  // adj[v] = (dst, k) with k = -1 for a sure edge, else probabilistic index.
  std::vector<std::vector<std::pair<int, int>>> adj;
  std::vector<double> probs;
};

Compiled compile(const SocialGraph& g) {
  validate_graph(g);
  std::unordered_map<int, int> id_of;
  auto intern = [&](int id) {
    auto [it, fresh] = id_of.emplace(id, static_cast<int>(id_of.size()));
    (void)fresh;
    return it->second;
  };
  Compiled c;
  for (int s : g.seeds) c.seed_nodes.push_back(intern(s));
  std::vector<int> target_nodes;
  for (int t : g.targets) target_nodes.push_back(intern(t));
  for (const auto& e : g.edges) {
    intern(e.src);
    intern(e.dst);
  }
  c.num_nodes = static_cast<int>(id_of.size());
  c.is_target.assign(c.num_nodes, 0);
  for (int t : target_nodes) c.is_target[t] = 1;
  c.adj.assign(c.num_nodes, {});
  for (const auto& e : g.edges) {
    if (e.p == 0.0) continue;
    int k = -1;
    if (e.p < 1.0) {
      k = static_cast<int>(c.probs.size());
      c.probs.push_back(e.p);
    }
    c.adj[id_of.at(e.src)].emplace_back(id_of.at(e.dst), k);
  }
  return c;
}

// Count of activated targets given per-probabilistic-edge liveness.
int cascade_count(const Compiled& c, Coalition s, const std::vector<char>& live,
                  std::vector<int>& stack, std::vector<unsigned>& visited, unsigned epoch) {
  stack.clear();
  int count = 0;
  for (int i : s.members()) {
    const int v = c.seed_nodes[static_cast<std::size_t>(i)];
    if (visited[v] != epoch) {
      visited[v] = epoch;
      if (c.is_target[v]) ++count;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [w, k] : c.adj[v]) {
      if (k >= 0 && !live[static_cast<std::size_t>(k)]) continue;
      if (visited[w] != epoch) {
        visited[w] = epoch;
        if (c.is_target[w]) ++count;
        stack.push_back(w);
      }
    }
  }
  return count;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t splitmix64(std::uint64_t& state) {
  return mix64(state += 0x9E3779B97F4A7C15ULL);
}

double unit_double(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

void check_coalition(const Compiled& c, Coalition s) {
  if (static_cast<std::size_t>(s.n) != c.seed_nodes.size())
    throw std::invalid_argument("coalition width does not match seed count");
}

}  // namespace

void validate_graph(const SocialGraph& g) {
  std::unordered_set<int> seen;
  for (int s : g.seeds) {
    if (s < 0) throw std::invalid_argument("negative node id");
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate seed node");
  }
  for (int t : g.targets) {
    if (t < 0) throw std::invalid_argument("negative node id");
    if (!seen.insert(t).second)
      throw std::invalid_argument("target node duplicates a seed or target");
  }
  for (const auto& e : g.edges) {
    if (e.src < 0 || e.dst < 0) throw std::invalid_argument("negative node id");
    if (!(e.p >= 0.0 && e.p <= 1.0))
      throw std::invalid_argument("edge probability outside [0,1]");
  }
  if (g.seeds.size() > 62) throw std::invalid_argument("too many seed nodes");
}

int worker_count() {
  const char* env = std::getenv("COALITION_CORE_THREADS");
  if (!env) return 1;
  const int v = std::atoi(env);
  return std::clamp(v, 1, 256);
}

double exact_spread(const SocialGraph& g, Coalition s, const SpreadConfig& cfg) {
  const Compiled c = compile(g);
  check_coalition(c, s);
  const int p = static_cast<int>(c.probs.size());
  if (p > cfg.max_probabilistic_edges)
    throw SpreadCapExceeded("exact spread over " + std::to_string(p) +
                            " probabilistic edges exceeds the cap of " +
                            std::to_string(cfg.max_probabilistic_edges) +
                            "; use Monte Carlo evaluation");
  std::vector<char> live(static_cast<std::size_t>(p), 0);
  std::vector<int> stack;
  std::vector<unsigned> visited(static_cast<std::size_t>(c.num_nodes), 0);
  unsigned epoch = 0;
  double total = 0.0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << p); ++bits) {
    double w = 1.0;
    for (int k = 0; k < p; ++k) {
      const bool on = (bits >> k) & 1u;
      live[static_cast<std::size_t>(k)] = on;
      w *= on ? c.probs[static_cast<std::size_t>(k)] : 1.0 - c.probs[static_cast<std::size_t>(k)];
    }
    total += w * cascade_count(c, s, live, stack, visited, ++epoch);
  }
  return total;
}

double mc_spread(const SocialGraph& g, Coalition s, const SpreadConfig& cfg) {
  const Compiled c = compile(g);
  check_coalition(c, s);
  if (cfg.samples == 0) throw std::invalid_argument("mc_spread needs samples >= 1");
  const std::size_t p = c.probs.size();

  // Each sample's coins come from its own splitmix64 stream keyed by
  // (master_seed, sample index), so chunk boundaries cannot change the sum.
  auto run_range = [&](std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
    std::vector<char> live(p, 0);
    std::vector<int> stack;
    std::vector<unsigned> visited(static_cast<std::size_t>(c.num_nodes), 0);
    unsigned epoch = 0;
    std::uint64_t acc = 0;
    for (std::uint64_t r = lo; r < hi; ++r) {
      std::uint64_t state =
          mix64(cfg.master_seed ^ (0x9E3779B97F4A7C15ULL * (r + 1)));
      for (std::size_t k = 0; k < p; ++k)
        live[k] = unit_double(splitmix64(state)) < c.probs[k];
      acc += static_cast<std::uint64_t>(cascade_count(c, s, live, stack, visited, ++epoch));
    }
    return acc;
  };

  const int workers =
      static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(worker_count()), cfg.samples));
  std::uint64_t activated = 0;
  if (workers <= 1) {
    activated = run_range(0, cfg.samples);
  } else {
    std::vector<std::uint64_t> part(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (cfg.samples + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
      const std::uint64_t hi = std::min(cfg.samples, lo + chunk);
      pool.emplace_back([&, w, lo, hi] { part[static_cast<std::size_t>(w)] = run_range(lo, hi); });
    }
    for (auto& t : pool) t.join();
    for (std::uint64_t v : part) activated += v;
  }
  return static_cast<double>(activated) / static_cast<double>(cfg.samples);
}

}  // namespace coalition
