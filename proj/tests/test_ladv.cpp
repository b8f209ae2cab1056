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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "coalition/ladv_solver.hpp"
#include "coalition/reference_oracles.hpp"
#include "doctest.h"
#include "support/samplers.hpp"

using namespace coalition;

namespace {

TruncatedGame empty_core_pair(double eta = 0.0) {
  return make_game(2, eta, ExplicitTable{{0, 1, 1, 1.5}});
}

double norm_sq_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

}  // namespace

TEST_CASE("average dissatisfaction on the hand fixture") {
  const TruncatedGame g = empty_core_pair();
  CHECK(F_eval(g, {0.75, 0.75}).value == doctest::Approx(0.125));
  CHECK(F_eval(g, {1.5, 0.0}).value == doctest::Approx(0.25));
  CHECK(F_eval(g, {0.75, 0.75}).exact);
  CHECK(F_eval(g, {0.75, 0.75}).std_error == 0.0);
}

TEST_CASE("core allocations have zero average dissatisfaction") {
  const TruncatedGame g = make_game(3, 0.0, Additive{{1, 2, 3}});
  CHECK(F_eval(g, {1, 2, 3}).value == 0.0);
}

TEST_CASE("wide games fall back to a seeded sample mean") {
  // 21 identical earners, everything paid to player 0: the shortfall of S
  // is its weight among players 1..20, averaging (21 - 1) / 4 = 5.
  const int n = 21;
  const TruncatedGame g = make_game(n, 0.0, Additive{std::vector<double>(n, 1.0)});
  std::vector<double> x(n, 0.0);
  x[0] = 21.0;
  const FEstimate est = F_eval(g, x);
  CHECK_FALSE(est.exact);
  CHECK(est.std_error > 0.0);
  CHECK(est.std_error < 0.1);
  CHECK(std::fabs(est.value - 5.0) <= 5.0 * est.std_error);

  const FEstimate again = F_eval(g, x);
  CHECK(again.value == est.value);  // same seed, same estimate

  std::vector<double> fair(n, 1.0);
  const FEstimate zero = F_eval(g, fair);
  CHECK(zero.value == 0.0);
}

TEST_CASE("simplex projection fixtures") {
  const Allocation a = project_to_budget_simplex({2.0, -1.0}, 1.5);
  CHECK(a.x[0] == doctest::Approx(1.5));
  CHECK(a.x[1] == doctest::Approx(0.0));

  const Allocation b = project_to_budget_simplex({1.0, 1.0}, 1.0);
  CHECK(b.x[0] == doctest::Approx(0.5));
  CHECK(b.x[1] == doctest::Approx(0.5));

  const Allocation c = project_to_budget_simplex({0.25, 1.25, 0.0}, 1.5);
  CHECK(c.x == std::vector<double>{0.25, 1.25, 0.0});  // already feasible

  CHECK_THROWS_AS(project_to_budget_simplex({1.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(project_to_budget_simplex({}, 1.0), std::invalid_argument);
}

TEST_CASE("simplex projection is idempotent and closest") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const double total = 0.5 + static_cast<double>(rng() % 40) / 4.0;
    std::vector<double> y(static_cast<std::size_t>(n));
    for (auto& v : y) v = static_cast<double>(rng() % 2000) / 100.0 - 10.0;
    const Allocation p = project_to_budget_simplex(y, total);
    CAPTURE(trial);
    CHECK(allocation_ok(p, 1e-9));
    const Allocation pp = project_to_budget_simplex(p.x, total);
    CHECK(norm_sq_diff(pp.x, p.x) <= 1e-18);
    for (int probe = 0; probe < 20; ++probe) {
      std::vector<double> z(static_cast<std::size_t>(n));
      double sum = 0.0;
      for (auto& v : z) {
        v = static_cast<double>(rng() % 1000) + 1.0;
        sum += v;
      }
      for (auto& v : z) v *= total / sum;
      CHECK(norm_sq_diff(y, p.x) <= norm_sq_diff(y, z) + 1e-9);
    }
  }
}

TEST_CASE("exact hinge solve on the hand fixture") {
  const LadvResult res = ladv_exact(empty_core_pair());
  CHECK(res.value == doctest::Approx(0.125).epsilon(1e-9));
  CHECK(allocation_ok(res.x));
  CHECK(F_eval(empty_core_pair(), res.x.x).value == doctest::Approx(res.value));

  CHECK(ladv_exact(make_game(3, 0.0, Additive{{1, 2, 3}})).value == doctest::Approx(0.0));
}

TEST_CASE("exact hinge solve matches the baseline and a fine grid") {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const TruncatedGame g = testing::random_game(rng, n);
    CAPTURE(trial);
    const LadvResult res = ladv_exact(g);
    CHECK(res.value == doctest::Approx(brute_ladv(g)).epsilon(1e-6));
    CHECK(F_eval(g, res.x.x).value <= res.value + 1e-9);
  }

  // Independent of any linear programming: sweep a fine grid of the
  // three-player budget simplex.
  const TruncatedGame g = make_game(3, 1.0, ExplicitTable{{0, 1, 1, 1.5, 1, 1.75, 2, 2.25}});
  const double total = 2.25;
  double best = 1e300;
  const int steps = 1500;
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; i + j <= steps; ++j) {
      const double x0 = total * i / steps;
      const double x1 = total * j / steps;
      best = std::fmin(best, F_eval(g, {x0, x1, total - x0 - x1}).value);
    }
  }
  CHECK(ladv_exact(g).value == doctest::Approx(best).epsilon(2e-3));
}

TEST_CASE("average dissatisfaction is convex") {
  std::mt19937_64 rng(223);
  for (int instance = 0; instance < 8; ++instance) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const TruncatedGame g = testing::random_game(rng, n);
    const double total = sigma(g, Coalition::all(n));
    for (int probe = 0; probe < 500; ++probe) {
      std::vector<double> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
      for (auto& v : a) v = static_cast<double>(rng() % 1000) / 250.0;
      for (auto& v : b) v = static_cast<double>(rng() % 1000) / 250.0;
      const double t = static_cast<double>(rng() % 1001) / 1000.0;
      std::vector<double> mix(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        mix[static_cast<std::size_t>(i)] = t * a[static_cast<std::size_t>(i)] +
                                           (1.0 - t) * b[static_cast<std::size_t>(i)];
      const double lhs = F_eval(g, mix).value;
      const double rhs = t * F_eval(g, a).value + (1.0 - t) * F_eval(g, b).value;
      CAPTURE(instance);
      CHECK(lhs <= rhs + 1e-9);
      (void)total;
    }
  }
}

TEST_CASE("averaged update direction matches the finite-difference gradient") {
  std::mt19937_64 rng(227);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const TruncatedGame g = testing::random_game(rng, n);
    std::vector<double> x(static_cast<std::size_t>(n));
    for (auto& v : x) v = static_cast<double>(rng() % 1000) / 333.0;
    // Only probe differentiable points: no coalition may sit on its kink.
    // The empty coalition contributes a constant zero term, so it never
    // counts as a kink even though f and the payoff both vanish there.
    double nearest = 1e300;
    for (std::uint64_t m = 1; m < coalition_count(n); ++m) {
      const Coalition s(m, n);
      nearest = std::fmin(nearest, std::fabs(truncated_profit(g, s) - coalition_sum(x, s)));
    }
    if (nearest < 1e-4) continue;
    ++checked;
    const double h = 1e-6;
    for (int i = 0; i < n; ++i) {
      double expected = 0.0;  // average of -1 over triggering coalitions containing i
      for (std::uint64_t m = 0; m < coalition_count(n); ++m) {
        const Coalition s(m, n);
        if (s.contains(i) && truncated_profit(g, s) >= coalition_sum(x, s)) expected -= 1.0;
      }
      expected /= static_cast<double>(coalition_count(n));
      std::vector<double> hi(x), lo(x);
      hi[static_cast<std::size_t>(i)] += h;
      lo[static_cast<std::size_t>(i)] -= h;
      const double grad = (F_eval(g, hi).value - F_eval(g, lo).value) / (2.0 * h);
      CAPTURE(trial);
      CHECK(grad == doctest::Approx(expected).epsilon(1e-6));
    }
  }
  CHECK(checked >= 25);
}

TEST_CASE("subgradient run on the hand fixture") {
  const TruncatedGame g = empty_core_pair();
  SgdConfig cfg;
  cfg.iterations = 10000;
  cfg.alpha = sgd_guarantee_step(1.5, 2, cfg.iterations);
  cfg.master_seed = 7;
  const LadvResult res = sgd_ladv(g, cfg);
  CHECK(res.method == LadvMethod::kSgd);
  CHECK(res.value >= 0.125 - 1e-12);  // exact objective can never dip below the optimum
  CHECK(res.value <= 0.175);
  CHECK(allocation_ok(res.x, 1e-9));
  CHECK(F_eval(g, res.x.x).value == doctest::Approx(res.value));

  const LadvResult rerun = sgd_ladv(g, cfg);
  CHECK(rerun.value == res.value);  // bitwise
  CHECK(rerun.x.x == res.x.x);
}

TEST_CASE("subgradient run settles on nonempty-core games") {
  std::mt19937_64 rng(229);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const TruncatedGame g = testing::random_game(rng, n);
    if (!brute_core_feasible(g)) continue;
    const double total = sigma(g, Coalition::all(n));
    SgdConfig cfg;
    cfg.iterations = 10000;
    cfg.alpha = sgd_guarantee_step(total, n, cfg.iterations);
    cfg.master_seed = 1000 + static_cast<std::uint64_t>(trial);
    const LadvResult res = sgd_ladv(g, cfg);
    CAPTURE(trial);
    CHECK(res.value <= 0.05 * total);
  }
}

TEST_CASE("longer runs never report a worse minimum") {
  const TruncatedGame g = empty_core_pair(1.0);
  SgdConfig cfg;
  cfg.alpha = 0.01;
  cfg.master_seed = 99;
  double prev = 1e300;
  for (const long long t : {500LL, 2000LL, 10000LL}) {
    cfg.iterations = t;
    const double value = sgd_ladv(g, cfg).value;
    CHECK(value <= prev + 1e-15);
    prev = value;
  }
}

TEST_CASE("trace records every iteration") {
  const TruncatedGame g = empty_core_pair();
  SgdConfig cfg;
  cfg.iterations = 64;
  cfg.alpha = 0.05;
  cfg.master_seed = 3;
  cfg.record_trace = true;
  const LadvResult res = sgd_ladv(g, cfg);
  REQUIRE(res.trace.size() == 64);
  double best = 1e300;
  for (std::size_t i = 0; i < res.trace.size(); ++i) {
    CHECK(res.trace[i].iteration == static_cast<long long>(i) + 1);
    CHECK(res.trace[i].objective >= 0.0);
    CHECK(res.trace[i].step_norm >= 0.0);
    best = std::fmin(best, res.trace[i].objective);
  }
  CHECK(best == doctest::Approx(res.value));
}

TEST_CASE("subgradient config is validated") {
  SgdConfig bad;
  bad.iterations = 0;
  bad.alpha = 0.1;
  CHECK_THROWS_AS(sgd_ladv(empty_core_pair(), bad), std::invalid_argument);
  bad.iterations = 10;
  bad.alpha = 0.0;
  CHECK_THROWS_AS(sgd_ladv(empty_core_pair(), bad), std::invalid_argument);
  CHECK_THROWS_AS(ladv_exact(make_game(13, 0.0, Additive{std::vector<double>(13, 1.0)})),
                  std::invalid_argument);
}
