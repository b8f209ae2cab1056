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

"""Solvers for truncated monotone submodular profit games."""

from ._coalition import (
    F_eval,
    Game,
    SocialGraph,
    adversarial_value,
    alcv,
    alcv_approx,
    core_check,
    gen_domset,
    gen_maxcut,
    gen_sat,
    gen_setcover,
    ladv_exact,
    load_game,
    load_graph,
    project_to_budget_simplex,
    rlcv,
    rlcv_candidate_feasible,
    sat_threshold,
    sgd_guarantee_step,
    sgd_ladv,
    spread,
)

__all__ = [
    "F_eval",
    "Game",
    "SocialGraph",
    "adversarial_value",
    "alcv",
    "alcv_approx",
    "core_check",
    "gen_domset",
    "gen_maxcut",
    "gen_sat",
    "gen_setcover",
    "ladv_exact",
    "load_game",
    "load_graph",
    "project_to_budget_simplex",
    "rlcv",
    "rlcv_candidate_feasible",
    "sat_threshold",
    "sgd_guarantee_step",
    "sgd_ladv",
    "spread",
]
