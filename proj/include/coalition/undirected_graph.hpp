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
#include <utility>
#include <vector>

namespace coalition {

// Simple undirected graph on vertices 0..num_vertices-1.
struct UndirectedGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// Edge-list text: one "u v" pair per line; a line holding a single integer
// sets the vertex count (required for isolated trailing vertices, otherwise
// max id + 1 is used). '#' starts a comment. Self-loops and duplicate edges
// are rejected. Throws std::invalid_argument with a line diagnostic.
UndirectedGraph parse_undirected_graph(const std::string& text);
UndirectedGraph graph_from_file(const std::string& path);

}  // namespace coalition
