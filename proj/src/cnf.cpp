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

#include "coalition/cnf.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coalition {
namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::invalid_argument("dimacs line " + std::to_string(line) + ": " + what);
}

}  // namespace

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  CnfFormula f;
  int declared_clauses = -1;
  std::vector<int> current;
  int clause_start_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      if (declared_clauses >= 0) fail(lineno, "duplicate problem header");
      std::string p, fmt;
      if (!(ls >> p >> fmt >> f.n_vars >> declared_clauses) || fmt != "cnf")
        fail(lineno, "expected 'p cnf <vars> <clauses>'");
      if (f.n_vars < 1 || declared_clauses < 0) fail(lineno, "non-positive header counts");
      continue;
    }
    if (declared_clauses < 0) fail(lineno, "clause before the problem header");
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (current.empty()) fail(lineno, "empty clause");
        f.clauses.push_back(current);
        current.clear();
      } else {
        if (current.empty()) clause_start_line = lineno;
        const int v = lit > 0 ? lit : -lit;
        if (v > f.n_vars) fail(lineno, "literal " + std::to_string(lit) + " out of range");
        current.push_back(lit);
      }
    }
    if (!ls.eof()) fail(lineno, "non-integer token in clause data");
  }
  if (!current.empty()) fail(clause_start_line, "clause not terminated by 0");
  if (declared_clauses < 0) fail(lineno, "missing problem header");
  if (static_cast<int>(f.clauses.size()) != declared_clauses)
    fail(lineno, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  return f;
}

CnfFormula from_dimacs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dimacs(buf.str());
}

}  // namespace coalition
