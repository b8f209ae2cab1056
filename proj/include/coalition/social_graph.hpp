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

namespace coalition {

// Directed influence edge: src activates dst with probability p, independently
// of every other edge.
struct InfluenceEdge {
  int src = 0;
  int dst = 0;
  double p = 0.0;
};

// Directed graph for the independent-cascade process. Node ids are arbitrary
// non-negative integers. `seeds` are the player nodes (their order defines the
// coalition bit layout); `targets` are the nodes whose activations are counted.
// The two lists must be disjoint.
struct SocialGraph {
  std::vector<int> seeds;
  std::vector<int> targets;
  std::vector<InfluenceEdge> edges;
};

enum class SpreadMode { kExact, kMonteCarlo };

struct SpreadConfig {
  SpreadMode mode = SpreadMode::kExact;
  // Exact evaluation enumerates live-edge realizations of edges with
  // 0 < p < 1; refuse beyond this many to keep the 2^k blowup bounded.
  int max_probabilistic_edges = 20;
  std::uint64_t samples = 100000;
  std::uint64_t master_seed = 0;
};

// Throws std::invalid_argument on malformed graphs (duplicate ids, seed/target
// overlap, probabilities outside [0,1], edges touching unknown nodes are fine
// since any integer id introduces a node, but negative ids are rejected).
void validate_graph(const SocialGraph& g);

}  // namespace coalition
