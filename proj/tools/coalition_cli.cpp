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

// Command-line surface for the solver library. Reports go to stdout as JSON
// documents {value, allocation, method, certificate, guarantee, runtime_ms}
// (plus subcommand-specific keys); a one-line human summary goes to stderr.
// Exit codes: 0 ok, 1 usage, 2 unreadable or invalid input, 3 solver limit.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coalition/alcv_solver.hpp"
#include "coalition/cnf.hpp"
#include "coalition/core_solver.hpp"
#include "coalition/influence_spread.hpp"
#include "coalition/json_io.hpp"
#include "coalition/ladv_solver.hpp"
#include "coalition/linprog.hpp"
#include "coalition/reductions.hpp"
#include "coalition/reference_oracles.hpp"
#include "coalition/rlcv_solver.hpp"
#include "coalition/undirected_graph.hpp"

namespace {

using coalition::Json;

// Command-level misuse that CLI11 cannot catch (bad flag combinations).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A result was produced but a configured round budget was exhausted.
struct SolverLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

coalition::TruncatedGame load_game(const std::string& path) {
  return coalition::game_from_json(coalition::parse_json_text(read_input(path)));
}

Json base_report() {
  Json report;
  report["value"] = nullptr;
  report["allocation"] = nullptr;
  report["method"] = nullptr;
  report["certificate"] = nullptr;
  report["guarantee"] = nullptr;
  report["runtime_ms"] = 0.0;
  return report;
}

Json allocation_json(const std::vector<double>& x) { return Json(x); }

Json masks_json(const std::vector<std::uint64_t>& masks) {
  Json out = Json::array();
  for (std::uint64_t m : masks) out.push_back(m);
  return out;
}

using Clock = std::chrono::steady_clock;

// Fills runtime_ms, emits the JSON report on stdout and the summary on
// stderr. Everything except runtime_ms is deterministic for fixed inputs.
void emit(Json report, Clock::time_point start, const std::string& summary) {
  const double ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() - start)
          .count();
  report["runtime_ms"] = ms;
  std::cout << report.dump(2) << "\n";
  std::cerr << summary << "\n";
}

void write_document(const Json& doc, const std::string& out_path, const std::string& summary) {
  if (out_path.empty() || out_path == "-") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write \"" + out_path + "\"");
    out << doc.dump(2) << "\n";
  }
  std::cerr << summary << "\n";
}

std::string format_value(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", v);
  return buffer;
}

int run_core_check(const std::string& game_path) {
  const auto start = Clock::now();
  const coalition::TruncatedGame g = load_game(game_path);
  const coalition::CoreStatus status = coalition::core_status(g);
  Json report;
  report["verdict"] = status.nonempty ? "nonempty" : "empty";
  report["reason"] = status.reason == coalition::CoreReason::kVetoPlayer ? "veto-player"
                     : status.reason == coalition::CoreReason::kAdditive ? "additive"
                                                                         : "none";
  Json defaults = base_report();
  for (auto& [key, value] : defaults.items()) report[key] = std::move(value);
  report["method"] = "decision";
  if (status.allocation) report["allocation"] = allocation_json(status.allocation->x);
  if (status.reason == coalition::CoreReason::kVetoPlayer)
    report["certificate"] = Json{{"veto_player", status.veto_player}};
  emit(report, start,
       status.nonempty
           ? "core nonempty (" + std::string(report["reason"].get<std::string>()) + ")"
           : "core empty: no veto player and the grand coalition is not additive");
  return 0;
}

int run_rlcv(const std::string& game_path, const std::string& method) {
  const auto start = Clock::now();
  const coalition::TruncatedGame g = load_game(game_path);
  coalition::RlcvResult res;
  if (method == "eta-zero")
    res = coalition::rlcv_eta_zero(g);
  else if (method == "exact")
    res = coalition::rlcv_exact(g);
  else
    res = coalition::rlcv_cut_generation(g);
  Json report = base_report();
  report["value"] = res.r;
  report["allocation"] = allocation_json(res.x.x);
  report["method"] = method;
  report["certificate"] =
      Json{{"tight_coalitions", masks_json(res.tight_coalitions)}, {"rounds", res.rounds}};
  emit(report, start,
       "relative least-core value = " + format_value(res.r) + " (" + method + ")");
  return 0;
}

int run_alcv(const std::string& game_path, const std::string& method, double delta) {
  const auto start = Clock::now();
  const coalition::TruncatedGame g = load_game(game_path);
  Json report = base_report();
  report["method"] = method;
  if (method == "exact") {
    const coalition::AlcvResult res = coalition::alcv_exact(g);
    report["value"] = res.epsilon;
    report["allocation"] = allocation_json(res.x.x);
    report["certificate"] = Json{{"tight_coalitions", masks_json(res.tight_coalitions)}};
    emit(report, start, "absolute least-core value = " + format_value(res.epsilon));
    return 0;
  }
  if (!(delta > 0.0)) throw UsageError("--method approx needs --delta D > 0");
  const coalition::AlcvApproxResult res = coalition::alcv_approx(g, delta);
  report["value"] = res.eps_prime;
  report["allocation"] = allocation_json(res.x.x);
  report["certificate"] = Json{{"eps_str", res.eps_str},
                               {"eps_re", res.eps_re},
                               {"delta", res.delta},
                               {"round_limit", res.round_limit}};
  report["guarantee"] = res.guarantee;
  emit(report, start,
       "absolute least-core value <= " + format_value(res.eps_prime) + " (approx, delta=" +
           format_value(delta) + ")");
  if (res.round_limit) throw SolverLimit("separation round budget exhausted");
  return 0;
}

int run_ladv(const std::string& game_path, const std::string& method, long long iterations,
             double alpha, std::uint64_t seed, bool theorem8) {
  const auto start = Clock::now();
  const coalition::TruncatedGame g = load_game(game_path);
  Json report = base_report();
  report["method"] = method;
  if (method == "exact") {
    const coalition::LadvResult res = coalition::ladv_exact(g);
    report["value"] = res.value;
    report["allocation"] = allocation_json(res.x.x);
    emit(report, start, "least average dissatisfaction = " + format_value(res.value));
    return 0;
  }
  coalition::SgdConfig cfg;
  cfg.iterations = iterations;
  cfg.master_seed = seed;
  if (theorem8) {
    const double total = coalition::sigma(g, coalition::Coalition::all(g.n));
    cfg.alpha = coalition::sgd_guarantee_step(total, g.n, iterations);
  } else if (alpha > 0.0) {
    cfg.alpha = alpha;
  } else {
    throw UsageError("--method sgd needs --alpha A > 0 or --theorem8");
  }
  const coalition::LadvResult res = coalition::sgd_ladv(g, cfg);
  report["value"] = res.value;
  report["allocation"] = allocation_json(res.x.x);
  report["certificate"] = Json{{"iterations", cfg.iterations},
                               {"alpha", cfg.alpha},
                               {"master_seed", cfg.master_seed},
                               {"theorem8", theorem8}};
  emit(report, start,
       "least average dissatisfaction <= " + format_value(res.value) + " (sgd, T=" +
           std::to_string(cfg.iterations) + ", alpha=" + format_value(cfg.alpha) + ")");
  return 0;
}

int run_adversarial(const std::string& game_path) {
  const auto start = Clock::now();
  const coalition::TruncatedGame g = load_game(game_path);
  const double value = coalition::adversarial_cover_value(g);
  Json report = base_report();
  report["value"] = value;
  report["method"] = "exact";
  emit(report, start, "adversarial cover value = " + format_value(value));
  return 0;
}

int run_spread(const std::string& graph_path, const std::vector<int>& seed_bits,
               std::uint64_t samples, std::uint64_t seed, bool monte_carlo) {
  const auto start = Clock::now();
  const coalition::SocialGraph graph =
      coalition::graph_from_json(coalition::parse_json_text(read_input(graph_path)));
  const int n = static_cast<int>(graph.seeds.size());
  std::uint64_t mask = 0;
  for (int bit : seed_bits) {
    if (bit < 0 || bit >= n) throw UsageError("--seeds indices must be in [0, n)");
    mask |= std::uint64_t(1) << bit;
  }
  const coalition::Coalition s(mask, n);
  coalition::SpreadConfig cfg;
  Json report = base_report();
  double value = 0.0;
  if (monte_carlo) {
    cfg.mode = coalition::SpreadMode::kMonteCarlo;
    cfg.samples = samples;
    cfg.master_seed = seed;
    value = coalition::mc_spread(graph, s, cfg);
    report["method"] = "monte_carlo";
    report["certificate"] = Json{{"samples", samples}, {"master_seed", seed}};
  } else {
    value = coalition::exact_spread(graph, s, cfg);
    report["method"] = "exact";
  }
  report["value"] = value;
  emit(report, start,
       "spread = " + format_value(value) + " over " + std::to_string(seed_bits.size()) +
           " seeds (" + report["method"].get<std::string>() + ")");
  return 0;
}

int run_oracle(const std::string& quantity, const std::string& instance_path) {
  const auto start = Clock::now();
  Json report = base_report();
  report["method"] = "brute-force";
  std::string summary;
  if (quantity == "core-feasible") {
    const bool feasible = coalition::brute_core_feasible(load_game(instance_path));
    report["value"] = feasible;
    summary = feasible ? "core feasible" : "core infeasible";
  } else if (quantity == "rlcv" || quantity == "alcv" || quantity == "ladv" ||
             quantity == "adversarial") {
    const coalition::TruncatedGame g = load_game(instance_path);
    const double value = quantity == "rlcv"   ? coalition::brute_rlcv(g)
                         : quantity == "alcv" ? coalition::brute_alcv(g)
                         : quantity == "ladv" ? coalition::brute_ladv(g)
                                              : coalition::brute_adversarial_value(g);
    report["value"] = value;
    summary = quantity + " = " + format_value(value);
  } else if (quantity == "max-cut" || quantity == "min-domset") {
    const coalition::UndirectedGraph g =
        coalition::parse_undirected_graph(read_input(instance_path));
    const int value = quantity == "max-cut" ? coalition::brute_max_cut(g)
                                            : coalition::brute_min_dominating_set(g);
    report["value"] = value;
    summary = quantity + " = " + std::to_string(value);
  } else if (quantity == "sat") {
    const bool satisfiable =
        coalition::brute_sat(coalition::parse_dimacs(read_input(instance_path)));
    report["value"] = satisfiable;
    summary = satisfiable ? "satisfiable" : "unsatisfiable";
  } else {
    throw UsageError("unknown oracle quantity \"" + quantity + "\"");
  }
  emit(report, start, summary);
  return 0;
}

int run_gen(const std::string& kind, const std::string& instance_path, int k, double cover_total,
            const std::string& out_path) {
  if (kind == "sat") {
    const coalition::CnfFormula f = coalition::parse_dimacs(read_input(instance_path));
    const coalition::SatReduction red = coalition::sat_to_game(f);
    Json doc = coalition::game_to_json(red.game);
    doc["sat_threshold"] =
        coalition::sat_threshold(f.n_vars, static_cast<int>(f.clauses.size()));
    write_document(doc, out_path,
                   "satisfiability game: " + std::to_string(red.game.n) + " players, eta = " +
                       format_value(red.game.eta));
    return 0;
  }
  if (kind == "maxcut") {
    const coalition::UndirectedGraph g =
        coalition::parse_undirected_graph(read_input(instance_path));
    const coalition::MaxcutReduction red = coalition::maxcut_to_game(g);
    write_document(coalition::game_to_json(red.game), out_path,
                   "max-cut game: " + std::to_string(red.game.n) + " players, " +
                       std::to_string(g.edges.size()) + " edges");
    return 0;
  }
  if (kind == "domset") {
    const coalition::UndirectedGraph g =
        coalition::parse_undirected_graph(read_input(instance_path));
    const coalition::DomsetReduction red = coalition::domset_to_game(g, k);
    Json doc = coalition::game_to_json(red.game);
    doc["candidate"] =
        Json{{"x", allocation_json(red.candidate.x.x)}, {"r", red.candidate.r}};
    write_document(doc, out_path,
                   "dominating-set game: " + std::to_string(red.game.n) +
                       " players, k = " + std::to_string(k) +
                       ", candidate r = " + format_value(red.candidate.r));
    return 0;
  }
  // setcover: {"universe": [ids], "collection": [[ids]], "M": number}.
  const Json doc = coalition::parse_json_text(read_input(instance_path));
  if (!doc.contains("universe") || !doc.contains("collection"))
    throw std::invalid_argument("set-cover instance needs \"universe\" and \"collection\"");
  std::vector<std::string> universe;
  for (const Json& id : doc.at("universe")) {
    if (!id.is_string()) throw std::invalid_argument("universe ids must be strings");
    universe.push_back(id.get<std::string>());
  }
  std::vector<std::vector<int>> collection;
  for (const Json& cover : doc.at("collection")) {
    std::vector<int> indices;
    for (const Json& id : cover) {
      if (!id.is_string()) throw std::invalid_argument("collection entries must hold element ids");
      const auto it = std::find(universe.begin(), universe.end(), id.get<std::string>());
      if (it == universe.end())
        throw std::invalid_argument("unknown element id \"" + id.get<std::string>() + "\"");
      indices.push_back(static_cast<int>(it - universe.begin()));
    }
    collection.push_back(std::move(indices));
  }
  const double total = doc.contains("M") ? doc.at("M").get<double>() : cover_total;
  const coalition::TruncatedGame game =
      coalition::setcover_to_game(universe, collection, total);
  write_document(coalition::game_to_json(game), out_path,
                 "set-cover game: " + std::to_string(game.n) + " sets over " +
                     std::to_string(universe.size()) + " elements, budget = " +
                     format_value(total));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvers for threshold profit games: core membership, least-core "
               "values, average dissatisfaction, and hardness-instance generators"};
  app.require_subcommand(1);

  std::string game_path = "-";
  std::string method = "exact";
  double delta = 0.1;
  long long iterations = 10000;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  bool theorem8 = false;
  std::vector<int> seed_bits;
  std::uint64_t samples = 100000;
  int k = 1;
  double cover_total = 1.0;
  std::string out_path;
  std::string quantity;
  std::string gen_kind;
  std::string instance_path = "-";

  CLI::App* core = app.add_subcommand("core-check", "Decide whether the core is nonempty");
  core->add_option("game", game_path, "game JSON file, or - for stdin");

  CLI::App* rlcv = app.add_subcommand("rlcv", "Relative least-core value");
  rlcv->add_option("game", game_path, "game JSON file, or - for stdin");
  rlcv->add_option("--method", method, "eta-zero, exact, or cutgen")
      ->check(CLI::IsMember({"eta-zero", "exact", "cutgen"}));

  CLI::App* alcv = app.add_subcommand("alcv", "Absolute least-core value");
  alcv->add_option("game", game_path, "game JSON file, or - for stdin");
  alcv->add_option("--method", method, "exact or approx")
      ->check(CLI::IsMember({"exact", "approx"}));
  alcv->add_option("--delta", delta, "discretization step for --method approx");

  CLI::App* ladv = app.add_subcommand("ladv", "Least average dissatisfaction value");
  ladv->add_option("game", game_path, "game JSON file, or - for stdin");
  ladv->add_option("--method", method, "exact or sgd")->check(CLI::IsMember({"exact", "sgd"}));
  ladv->add_option("--T", iterations, "subgradient iterations");
  ladv->add_option("--alpha", alpha, "subgradient step size");
  ladv->add_option("--seed", seed, "subgradient master seed");
  ladv->add_flag("--theorem8", theorem8,
                 "derive the step size from the iteration budget (overrides --alpha)");

  CLI::App* adversarial =
      app.add_subcommand("adversarial", "Adversarial cover value (eta = sigma(V) games)");
  adversarial->add_option("game", game_path, "game JSON file, or - for stdin");

  CLI::App* spread = app.add_subcommand("spread", "Influence spread of a seed set");
  spread->add_option("graph", game_path, "graph JSON file, or - for stdin");
  spread->add_option("--seeds", seed_bits, "seed indices, e.g. 0,3,5")
      ->delimiter(',')
      ->required();
  CLI::Option* samples_opt =
      spread->add_option("--samples", samples, "Monte-Carlo sample count (default: exact)");
  spread->add_option("--seed", seed, "Monte-Carlo master seed");

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force baseline for a quantity");
  oracle->add_option("quantity", quantity,
                     "core-feasible, rlcv, alcv, ladv, adversarial, max-cut, min-domset, or sat")
      ->required();
  oracle->add_option("instance", instance_path, "instance file, or - for stdin");

  CLI::App* gen = app.add_subcommand("gen", "Generate a hardness-reduction game");
  gen->add_option("kind", gen_kind, "sat, maxcut, domset, or setcover")
      ->check(CLI::IsMember({"sat", "maxcut", "domset", "setcover"}))
      ->required();
  gen->add_option("instance", instance_path,
                  "DIMACS file (sat), edge list (maxcut/domset), or instance JSON (setcover)")
      ->required();
  gen->add_option("--k", k, "dominating-set size bound (domset)");
  gen->add_option("--M", cover_total, "weight budget (setcover; instance \"M\" wins)");
  gen->add_option("-o,--output", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (core->parsed()) return run_core_check(game_path);
    if (rlcv->parsed()) return run_rlcv(game_path, method);
    if (alcv->parsed()) return run_alcv(game_path, method, delta);
    if (ladv->parsed()) return run_ladv(game_path, method, iterations, alpha, seed, theorem8);
    if (adversarial->parsed()) return run_adversarial(game_path);
    if (spread->parsed())
      return run_spread(game_path, seed_bits, samples, seed, samples_opt->count() > 0);
    if (oracle->parsed()) return run_oracle(quantity, instance_path);
    if (gen->parsed()) return run_gen(gen_kind, instance_path, k, cover_total, out_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const SolverLimit& e) {
    std::cerr << "error: solver limit: " << e.what() << "\n";
    return 3;
  } catch (const coalition::SpreadCapExceeded& e) {
    std::cerr << "error: solver limit: " << e.what() << "\n";
    return 3;
  } catch (const coalition::LpIterationLimit& e) {
    std::cerr << "error: solver limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
