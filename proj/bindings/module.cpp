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

// Python bindings. Games and graphs travel as the same JSON documents the
// command line uses; solver results come back as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "coalition/alcv_solver.hpp"
#include "coalition/cnf.hpp"
#include "coalition/core_solver.hpp"
#include "coalition/game.hpp"
#include "coalition/influence_spread.hpp"
#include "coalition/json_io.hpp"
#include "coalition/ladv_solver.hpp"
#include "coalition/reductions.hpp"
#include "coalition/rlcv_solver.hpp"
#include "coalition/undirected_graph.hpp"

namespace py = pybind11;

namespace {

using coalition::TruncatedGame;

py::list to_list(const std::vector<double>& v) {
  py::list out;
  for (double value : v) out.append(value);
  return out;
}

py::list to_list(const std::vector<std::uint64_t>& v) {
  py::list out;
  for (std::uint64_t value : v) out.append(value);
  return out;
}

const char* reason_name(coalition::CoreReason reason) {
  switch (reason) {
    case coalition::CoreReason::kVetoPlayer:
      return "veto";
    case coalition::CoreReason::kAdditive:
      return "additive";
    default:
      return "none";
  }
}

const char* rlcv_method_name(coalition::RlcvMethod method) {
  switch (method) {
    case coalition::RlcvMethod::kEtaZero:
      return "eta-zero";
    case coalition::RlcvMethod::kCutGen:
      return "cutgen";
    default:
      return "exact";
  }
}

py::dict rlcv_dict(const coalition::RlcvResult& res) {
  py::dict out;
  out["value"] = res.r;
  out["x"] = to_list(res.x.x);
  out["method"] = rlcv_method_name(res.method);
  out["tight_coalitions"] = to_list(res.tight_coalitions);
  out["rounds"] = res.rounds;
  return out;
}

}  // namespace

PYBIND11_MODULE(_coalition, m) {
  m.doc() =
      "Solvers for cooperative games whose profit is a monotone submodular "
      "function truncated below a success threshold.";

  py::class_<TruncatedGame>(m, "Game")
      .def_readonly("n", &TruncatedGame::n)
      .def_readonly("eta", &TruncatedGame::eta)
      .def_readonly("eta_tol", &TruncatedGame::eta_tol)
      .def(
          "sigma",
          [](const TruncatedGame& g, std::uint64_t s) {
            return sigma(g, coalition::Coalition(s, g.n));
          },
          py::arg("coalition"), "Raw profit of the coalition bitmask.")
      .def(
          "profit",
          [](const TruncatedGame& g, std::uint64_t s) {
            return truncated_profit(g, coalition::Coalition(s, g.n));
          },
          py::arg("coalition"), "Profit after truncation below the threshold.")
      .def(
          "is_successful",
          [](const TruncatedGame& g, std::uint64_t s) {
            return is_successful(g, coalition::Coalition(s, g.n));
          },
          py::arg("coalition"))
      .def("to_json", [](const TruncatedGame& g) { return coalition::game_to_json(g).dump(2); })
      .def("__repr__", [](const TruncatedGame& g) {
        return "Game(n=" + std::to_string(g.n) + ", eta=" + std::to_string(g.eta) + ")";
      });

  py::class_<coalition::SocialGraph>(m, "SocialGraph")
      .def_readonly("seeds", &coalition::SocialGraph::seeds)
      .def_readonly("targets", &coalition::SocialGraph::targets)
      .def("to_json",
           [](const coalition::SocialGraph& g) { return coalition::graph_to_json(g).dump(2); });

  m.def(
      "load_game",
      [](const std::string& text) {
        return coalition::game_from_json(coalition::parse_json_text(text));
      },
      py::arg("json_text"), "Parses a game document (same format as the CLI).");
  m.def(
      "load_graph",
      [](const std::string& text) {
        return coalition::graph_from_json(coalition::parse_json_text(text));
      },
      py::arg("json_text"), "Parses an influence graph document.");

  m.def(
      "core_check",
      [](const TruncatedGame& g) {
        const coalition::CoreStatus status = coalition::core_status(g);
        py::dict out;
        out["nonempty"] = status.nonempty;
        out["reason"] = reason_name(status.reason);
        out["x"] = status.allocation ? py::object(to_list(status.allocation->x))
                                     : py::object(py::none());
        return out;
      },
      py::arg("game"), "Decides core nonemptiness and returns a witness allocation.");

  m.def(
      "rlcv",
      [](const TruncatedGame& g, const std::string& method) {
        if (method == "exact") return rlcv_dict(coalition::rlcv_exact(g));
        if (method == "cutgen") return rlcv_dict(coalition::rlcv_cut_generation(g));
        if (method == "eta-zero") return rlcv_dict(coalition::rlcv_eta_zero(g));
        throw std::invalid_argument("rlcv: unknown method " + method);
      },
      py::arg("game"), py::arg("method") = "exact",
      "Smallest uniform relaxation r making the relaxed core nonempty.");

  m.def(
      "alcv",
      [](const TruncatedGame& g) {
        const coalition::AlcvResult res = coalition::alcv_exact(g);
        py::dict out;
        out["value"] = res.epsilon;
        out["x"] = to_list(res.x.x);
        out["tight_coalitions"] = to_list(res.tight_coalitions);
        return out;
      },
      py::arg("game"), "Smallest additive slack making the relaxed core nonempty.");

  m.def(
      "alcv_approx",
      [](const TruncatedGame& g, double delta) {
        const coalition::AlcvApproxResult res = coalition::alcv_approx(g, delta);
        py::dict out;
        out["value"] = res.eps_prime;
        out["eps_str"] = res.eps_str;
        out["eps_re"] = res.eps_re;
        out["delta"] = res.delta;
        out["x"] = to_list(res.x.x);
        out["guarantee"] = res.guarantee;
        out["round_limit"] = res.round_limit;
        return out;
      },
      py::arg("game"), py::arg("delta") = 0.1,
      "Polynomial-call upper bound on the additive least-core value.");

  m.def(
      "adversarial_value",
      [](const TruncatedGame& g) { return coalition::adversarial_cover_value(g); },
      py::arg("game"), "Relaxation needed when every player must be paid zero.");

  m.def(
      "ladv_exact",
      [](const TruncatedGame& g) {
        const coalition::LadvResult res = coalition::ladv_exact(g);
        py::dict out;
        out["value"] = res.value;
        out["x"] = to_list(res.x.x);
        return out;
      },
      py::arg("game"), "Minimum average dissatisfaction, by linear program.");

  m.def(
      "F_eval",
      [](const TruncatedGame& g, const std::vector<double>& x, int samples,
         std::uint64_t seed) {
        const coalition::FEstimate est = coalition::F_eval(g, x, samples, seed);
        py::dict out;
        out["value"] = est.value;
        out["std_error"] = est.std_error;
        out["exact"] = est.exact;
        return out;
      },
      py::arg("game"), py::arg("x"), py::arg("samples") = 10000, py::arg("seed") = 0,
      "Average dissatisfaction of an allocation; exact up to 20 players.");

  m.def("project_to_budget_simplex",
        [](const std::vector<double>& y, double total) {
          return to_list(coalition::project_to_budget_simplex(y, total).x);
        },
        py::arg("y"), py::arg("total"),
        "Closest nonnegative vector with the given coordinate sum.");

  m.def("sgd_guarantee_step", &coalition::sgd_guarantee_step, py::arg("total"), py::arg("n"),
        py::arg("iterations"), "Step size meeting the convergence guarantee.");

  m.def(
      "sgd_ladv",
      [](const TruncatedGame& g, long long iterations, double alpha, std::uint64_t seed,
         bool record_trace) {
        coalition::SgdConfig cfg;
        cfg.iterations = iterations;
        cfg.alpha = alpha;
        cfg.master_seed = seed;
        cfg.record_trace = record_trace;
        const coalition::LadvResult res = coalition::sgd_ladv(g, cfg);
        py::dict out;
        out["value"] = res.value;
        out["x"] = to_list(res.x.x);
        py::list trace;
        for (const coalition::SgdTracePoint& point : res.trace) {
          py::dict row;
          row["iteration"] = point.iteration;
          row["objective"] = point.objective;
          row["step_norm"] = point.step_norm;
          trace.append(row);
        }
        out["trace"] = trace;
        return out;
      },
      py::arg("game"), py::arg("iterations") = 10000, py::arg("alpha") = 0.0,
      py::arg("seed") = 0, py::arg("record_trace") = false,
      "Projected subgradient descent on the average dissatisfaction.");

  m.def(
      "spread",
      [](const coalition::SocialGraph& g, std::uint64_t seeds, py::object samples,
         std::uint64_t seed) {
        const coalition::Coalition s(seeds, static_cast<int>(g.seeds.size()));
        coalition::SpreadConfig cfg;
        if (samples.is_none()) return coalition::exact_spread(g, s, cfg);
        cfg.mode = coalition::SpreadMode::kMonteCarlo;
        cfg.samples = samples.cast<std::uint64_t>();
        cfg.master_seed = seed;
        return coalition::mc_spread(g, s, cfg);
      },
      py::arg("graph"), py::arg("seeds"), py::arg("samples") = py::none(),
      py::arg("seed") = 0,
      "Expected influenced targets; exact by default, sampled when samples is set.");

  m.def(
      "gen_sat",
      [](const std::string& dimacs) {
        const coalition::CnfFormula formula = coalition::parse_dimacs(dimacs);
        coalition::SatReduction red = coalition::sat_to_game(formula);
        py::dict out;
        out["game"] = std::move(red.game);
        out["sat_threshold"] =
            coalition::sat_threshold(formula.n_vars, static_cast<int>(formula.clauses.size()));
        return out;
      },
      py::arg("dimacs"),
      "Game whose uniform least-core value encodes satisfiability of the formula.");

  m.def(
      "gen_maxcut",
      [](const std::string& edge_list) {
        return coalition::maxcut_to_game(coalition::parse_undirected_graph(edge_list)).game;
      },
      py::arg("edge_list"), "Game whose additive least-core value equals the maximum cut.");

  m.def(
      "gen_domset",
      [](const std::string& edge_list, int k) {
        coalition::DomsetReduction red =
            coalition::domset_to_game(coalition::parse_undirected_graph(edge_list), k);
        py::dict out;
        out["game"] = std::move(red.game);
        out["x"] = to_list(red.candidate.x.x);
        out["r"] = red.candidate.r;
        return out;
      },
      py::arg("edge_list"), py::arg("k"),
      "Game plus candidate point feasible iff no dominating set of size k exists.");

  m.def(
      "gen_setcover",
      [](const std::vector<std::string>& universe,
         const std::vector<std::vector<int>>& collection, double total) {
        return coalition::setcover_to_game(universe, collection, total);
      },
      py::arg("universe"), py::arg("collection"), py::arg("total"),
      "Coverage game whose adversarial value separates set-cover instances.");

  m.def("sat_threshold", &coalition::sat_threshold, py::arg("n_vars"), py::arg("n_clauses"),
        "Uniform relaxation cutoff separating satisfiable formulas.");

  m.def(
      "rlcv_candidate_feasible",
      [](const TruncatedGame& g, const std::vector<double>& x, double r, double tol) {
        coalition::RlcvCandidate candidate;
        candidate.x.x = x;
        for (double value : x) candidate.x.total += value;
        candidate.r = r;
        return coalition::rlcv_candidate_feasible(g, candidate, tol);
      },
      py::arg("game"), py::arg("x"), py::arg("r"), py::arg("tol") = 1e-9,
      "Checks a point against every uniformly relaxed coalition constraint.");
}
