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

#include "coalition/undirected_graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coalition {
namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::invalid_argument("graph line " + std::to_string(line) + ": " + what);
}

}  // namespace

UndirectedGraph parse_undirected_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  UndirectedGraph g;
  int declared = -1;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u)) continue;  // blank
    if (!(ls >> v)) {
      if (declared >= 0) fail(lineno, "duplicate vertex-count line");
      if (u < 0) fail(lineno, "negative vertex count");
      declared = u;
      continue;
    }
    int extra;
    if (ls >> extra) fail(lineno, "expected 'u v'");
    if (u < 0 || v < 0) fail(lineno, "negative vertex id");
    if (u == v) fail(lineno, "self-loop");
    const auto key = std::minmax(u, v);
    if (!seen.insert(key).second) fail(lineno, "duplicate edge");
    g.edges.emplace_back(u, v);
    g.num_vertices = std::max({g.num_vertices, u + 1, v + 1});
  }
  if (declared >= 0) {
    if (declared < g.num_vertices) fail(lineno, "vertex count smaller than an edge endpoint");
    g.num_vertices = declared;
  }
  return g;
}

UndirectedGraph graph_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_undirected_graph(buf.str());
}

}  // namespace coalition
