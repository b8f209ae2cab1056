# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the python bindings against small hand-checked games."""

import json
import math

import pytest

import coalition_core as cc

FIXTURE = json.dumps(
    {"n": 2, "eta": 0, "profit": {"type": "table", "values": [0, 1, 1, 1.5]}}
)
ADDITIVE = json.dumps(
    {"n": 3, "eta": 0, "profit": {"type": "additive", "weights": [1, 2, 3]}}
)
GRAPH = json.dumps(
    {"seeds": [0, 1], "targets": [2], "edges": [[0, 2, 0.5], [1, 2, 0.5]]}
)


def test_game_accessors_and_round_trip():
    game = cc.load_game(FIXTURE)
    assert game.n == 2
    assert game.eta == 0
    assert game.sigma(0b11) == 1.5
    assert game.profit(0b01) == 1.0
    assert game.is_successful(0b00)
    again = cc.load_game(game.to_json())
    assert again.sigma(0b11) == game.sigma(0b11)
    assert "Game(n=2" in repr(game)


def test_core_check_both_verdicts():
    empty = cc.core_check(cc.load_game(FIXTURE))
    assert not empty["nonempty"]
    assert empty["reason"] == "none"
    assert empty["x"] is None

    nonempty = cc.core_check(cc.load_game(ADDITIVE))
    assert nonempty["nonempty"]
    assert nonempty["reason"] == "additive"
    assert nonempty["x"] == [1.0, 2.0, 3.0]


def test_least_core_values_match_hand_computation():
    game = cc.load_game(FIXTURE)
    assert cc.rlcv(game)["value"] == pytest.approx(0.25)
    assert cc.rlcv(game, method="cutgen")["value"] == pytest.approx(0.25)
    assert cc.alcv(game)["value"] == pytest.approx(0.25)
    assert cc.ladv_exact(game)["value"] == pytest.approx(0.125)

    approx = cc.alcv_approx(game, delta=0.05)
    assert 0.25 - 1e-9 <= approx["value"] <= 0.75 + 1e-9
    assert approx["guarantee"]

    with pytest.raises(ValueError):
        cc.rlcv(game, method="bogus")


def test_average_dissatisfaction_pipeline():
    game = cc.load_game(FIXTURE)
    est = cc.F_eval(game, [0.75, 0.75])
    assert est["exact"]
    assert est["value"] == pytest.approx(0.125)
    assert est["std_error"] == 0.0

    alpha = cc.sgd_guarantee_step(1.5, 2, 2000)
    assert alpha == pytest.approx(1.5**2 / (4 * math.sqrt(2000)))
    run = cc.sgd_ladv(game, iterations=2000, alpha=alpha, seed=7)
    rerun = cc.sgd_ladv(game, iterations=2000, alpha=alpha, seed=7)
    assert run["value"] == rerun["value"]
    assert run["x"] == rerun["x"]
    assert 0.125 - 1e-12 <= run["value"] <= 0.2

    assert cc.project_to_budget_simplex([2.0, 0.0], 1.0) == [1.0, 0.0]
    assert cc.project_to_budget_simplex([1.0, 0.5], 1.0) == pytest.approx([0.75, 0.25])


def test_spread_exact_and_sampled():
    graph = cc.load_graph(GRAPH)
    assert graph.targets == [2]
    assert cc.spread(graph, 0b11) == pytest.approx(0.75)
    sampled = cc.spread(graph, 0b11, samples=200000, seed=3)
    assert abs(sampled - 0.75) < 0.01


def test_generators_round_trip_through_solvers():
    maxcut = cc.gen_maxcut("3\n0 1\n1 2\n0 2\n")
    assert cc.alcv(maxcut)["value"] == pytest.approx(2.0)

    sat = cc.gen_sat("p cnf 1 5\n1 0\n1 0\n1 0\n1 0\n1 0\n")
    assert sat["game"].n == 6
    assert sat["game"].eta == 7.5
    assert sat["sat_threshold"] == pytest.approx(cc.sat_threshold(1, 5))
    assert cc.rlcv(sat["game"])["value"] >= sat["sat_threshold"] - 1e-9

    domset = cc.gen_domset("3\n0 1\n1 2\n", 1)
    assert domset["r"] == pytest.approx(1.0 / 3.0)
    assert not cc.rlcv_candidate_feasible(domset["game"], domset["x"], domset["r"])

    cover = cc.gen_setcover(["a", "b"], [[0], [1]], 2.0)
    assert cc.adversarial_value(cover) == pytest.approx(2.0)


def test_invalid_documents_raise():
    with pytest.raises(ValueError):
        cc.load_game("{}")
    with pytest.raises(ValueError):
        cc.load_game(json.dumps({"n": 2, "eta": 9, "profit": {"type": "additive", "weights": [1, 1]}}))
