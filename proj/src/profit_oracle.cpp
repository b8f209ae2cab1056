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

#include "coalition/profit_oracle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "coalition/influence_spread.hpp"

namespace coalition {
namespace {

double eval_table(const ExplicitTable& t, int n, Coalition s) {
  if (t.values.size() != coalition_count(n))
    throw std::invalid_argument("explicit table size does not match player count");
  return t.values[s.mask];
}

double eval_additive(const Additive& a, int n, Coalition s) {
  if (a.weights.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("weight vector size does not match player count");
  return coalition_sum(a.weights, s);
}

double eval_coverage(const Coverage& c, int n, Coalition s) {
  if (c.covers.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("cover list size does not match player count");
  if (!c.element_ids.empty() && c.element_ids.size() != c.element_weights.size())
    throw std::invalid_argument("element id and weight lists differ in length");
  std::vector<char> covered(c.element_weights.size(), 0);
  for (int i : s.members()) {
    for (int e : c.covers[static_cast<std::size_t>(i)]) {
      if (e < 0 || static_cast<std::size_t>(e) >= covered.size())
        throw std::invalid_argument("cover entry is not a valid element index");
      covered[static_cast<std::size_t>(e)] = 1;
    }
  }
  double total = 0.0;
  for (std::size_t e = 0; e < covered.size(); ++e)
    if (covered[e]) total += c.element_weights[e];
  return total;
}

double eval_spread(const IcSpread& ic, int n, Coalition s) {
  if (ic.graph.seeds.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("seed list size does not match player count");
  if (ic.config.mode == SpreadMode::kMonteCarlo) return mc_spread(ic.graph, s, ic.config);
  return exact_spread(ic.graph, s, ic.config);
}

std::string mask_str(Coalition s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : s.members()) {
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

double eval_sigma(const ProfitOracle& oracle, int n, Coalition s) {
  if (s.n != n) throw std::invalid_argument("coalition width does not match player count");
  return std::visit(
      [&](const auto& form) -> double {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, ExplicitTable>)
          return eval_table(form, n, s);
        else if constexpr (std::is_same_v<T, Additive>)
          return eval_additive(form, n, s);
        else if constexpr (std::is_same_v<T, Coverage>)
          return eval_coverage(form, n, s);
        else
          return eval_spread(form, n, s);
      },
      oracle);
}

OracleDiagnostics validate_oracle(const ProfitOracle& oracle, int n, double tol) {
  if (n < 0 || n > 20)
    return {false, "exhaustive validation supports at most 20 players"};
  const std::uint64_t count = coalition_count(n);
  std::vector<double> v(count);
  for (std::uint64_t m = 0; m < count; ++m) v[m] = eval_sigma(oracle, n, Coalition(m, n));
  if (std::fabs(v[0]) > tol) {
    std::ostringstream os;
    os << "value at the empty coalition is " << v[0] << ", expected 0";
    return {false, os.str()};
  }
  // Monotonicity and submodularity over all (S, i) pairs; submodularity is
  // checked as decreasing marginals against (S+i, j) for j outside S+i.
  for (std::uint64_t m = 0; m < count; ++m) {
    const Coalition s(m, n);
    for (int i = 0; i < n; ++i) {
      if (s.contains(i)) continue;
      const Coalition si = s.with(i);
      const double gain_s = v[si.mask] - v[m];
      if (gain_s < -tol) {
        std::ostringstream os;
        os << "not monotone: adding player " << i << " to " << mask_str(s) << " changes "
           << v[m] << " to " << v[si.mask];
        return {false, os.str()};
      }
      for (int j = 0; j < n; ++j) {
        if (si.contains(j)) continue;
        const Coalition sj = s.with(j);
        const double gain_sj = v[sj.with(i).mask] - v[sj.mask];
        if (gain_sj > gain_s + tol) {
          std::ostringstream os;
          os << "not submodular: marginal of player " << i << " grows from " << gain_s
             << " at " << mask_str(s) << " to " << gain_sj << " at " << mask_str(sj);
          return {false, os.str()};
        }
      }
    }
  }
  return {true, ""};
}

}  // namespace coalition
