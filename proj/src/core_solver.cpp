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

#include "coalition/core_solver.hpp"

#include <cmath>
#include <stdexcept>

namespace coalition {

std::vector<int> find_veto_players(const TruncatedGame& g) {
  std::vector<int> veto;
  const Coalition all = Coalition::all(g.n);
  for (int i = 0; i < g.n; ++i)
    if (!is_successful(g, all.without(i))) veto.push_back(i);
  return veto;
}

bool is_additive_grand(const TruncatedGame& g, double tol) {
  const double total = sigma(g, Coalition::all(g.n));
  double sum = 0.0;
  for (int i = 0; i < g.n; ++i) sum += sigma(g, Coalition::singleton(i, g.n));
  return std::fabs(total - sum) <= tol * std::fmax(1.0, std::fabs(total));
}

CoreStatus core_status(const TruncatedGame& g) {
  CoreStatus st;
  const double total = sigma(g, Coalition::all(g.n));
  const std::vector<int> veto = find_veto_players(g);
  if (!veto.empty()) {
    st.nonempty = true;
    st.reason = CoreReason::kVetoPlayer;
    st.veto_player = veto.front();
    Allocation a;
    a.x.assign(static_cast<std::size_t>(g.n), 0.0);
    a.x[static_cast<std::size_t>(st.veto_player)] = total;
    a.total = total;
    st.allocation = std::move(a);
    return st;
  }
  if (is_additive_grand(g)) {
    st.nonempty = true;
    st.reason = CoreReason::kAdditive;
    Allocation a;
    a.total = total;
    for (int i = 0; i < g.n; ++i) a.x.push_back(sigma(g, Coalition::singleton(i, g.n)));
    st.allocation = std::move(a);
    return st;
  }
  return st;
}

CoreViolation verify_core_allocation(const TruncatedGame& g, const std::vector<double>& x,
                                     double tol) {
  if (g.n > 20) throw std::invalid_argument("exhaustive check supports at most 20 players");
  if (x.size() != static_cast<std::size_t>(g.n))
    throw std::invalid_argument("allocation size does not match player count");
  const double total = sigma(g, Coalition::all(g.n));
  const double paid = coalition_sum(x, Coalition::all(g.n));
  CoreViolation out;
  if (std::fabs(paid - total) > tol * std::fmax(1.0, std::fabs(total))) {
    out.kind = CoreViolation::Kind::kBudget;
    out.shortfall = std::fabs(paid - total);
    return out;
  }
  for (std::uint64_t m = 0; m < coalition_count(g.n); ++m) {
    const Coalition s(m, g.n);
    const double gap = truncated_profit(g, s) - coalition_sum(x, s);
    if (gap > tol) {
      out.kind = CoreViolation::Kind::kCoalition;
      out.witness = s;
      out.shortfall = gap;
      return out;
    }
  }
  return out;
}

}  // namespace coalition
