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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace coalition {

// A subset of an n-player ground set, packed into a bit mask.
// Bit i (little-endian) is player i; the integer value of the mask is the
// canonical enumeration order used everywhere masks are iterated or stored.
struct Coalition {
  std::uint64_t mask = 0;
  int n = 0;

  Coalition() = default;
  Coalition(std::uint64_t mask_, int n_) : mask(mask_), n(n_) {
    if (n_ < 0 || n_ > 62) throw std::invalid_argument("coalition width out of range");
    if (n_ < 62 && mask_ >> n_) throw std::invalid_argument("coalition mask has bits beyond width");
  }

  static Coalition empty(int n) { return Coalition(0, n); }
  static Coalition all(int n) {
    return Coalition(n >= 62 ? ~std::uint64_t(0) >> (64 - n) : (std::uint64_t(1) << n) - 1, n);
  }
  static Coalition singleton(int i, int n) { return Coalition(std::uint64_t(1) << i, n); }

  bool contains(int i) const { return (mask >> i) & 1u; }
  int size() const { return std::popcount(mask); }
  bool is_empty() const { return mask == 0; }

  Coalition with(int i) const { return Coalition(mask | (std::uint64_t(1) << i), n); }
  Coalition without(int i) const { return Coalition(mask & ~(std::uint64_t(1) << i), n); }
  Coalition complement() const { return Coalition(all(n).mask & ~mask, n); }

  bool subset_of(Coalition other) const { return (mask & ~other.mask) == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend bool operator==(const Coalition& a, const Coalition& b) {
    return a.mask == b.mask && a.n == b.n;
  }
};

// Number of coalitions of an n-player set. Valid for n <= 62.
inline std::uint64_t coalition_count(int n) { return std::uint64_t(1) << n; }

// x(S): total payoff of S under the per-player vector x.
inline double coalition_sum(const std::vector<double>& x, Coalition s) {
  double total = 0.0;
  for (std::uint64_t m = s.mask; m; m &= m - 1) total += x[static_cast<std::size_t>(std::countr_zero(m))];
  return total;
}

}  // namespace coalition
