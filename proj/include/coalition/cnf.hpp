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

namespace coalition {

// CNF formula over variables 1..n_vars; a literal is +v or -v, clauses are
// non-empty literal lists. Duplicate clauses are allowed (the hardness
// construction needs padding on tiny formulas).
struct CnfFormula {
  int n_vars = 0;
  std::vector<std::vector<int>> clauses;
};

// DIMACS CNF parser. Strict: requires the "p cnf <vars> <clauses>" header,
// rejects literals out of range, empty clauses, and clause-count mismatches.
// Comment lines start with 'c'; a clause may span lines and ends at 0.
// Throws std::invalid_argument with a line diagnostic.
CnfFormula parse_dimacs(const std::string& text);
CnfFormula from_dimacs(const std::string& path);

}  // namespace coalition
