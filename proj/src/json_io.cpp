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

#include "coalition/json_io.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace coalition {

namespace {

[[noreturn]] void fail(const std::string& message) { throw std::invalid_argument(message); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) fail(std::string("missing key \"") + key + "\"");
  return doc.at(key);
}

double number_field(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_number()) fail(std::string("key \"") + key + "\" must be a number");
  return v.get<double>();
}

int int_field(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_number_integer()) fail(std::string("key \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<double> number_array(const Json& v, const char* key) {
  if (!v.is_array()) fail(std::string("key \"") + key + "\" must be an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (const Json& item : v) {
    if (!item.is_number()) fail(std::string("key \"") + key + "\" must hold numbers only");
    out.push_back(item.get<double>());
  }
  return out;
}

ProfitOracle profit_from_json(const Json& profit, int n) {
  const Json& type = field(profit, "type");
  if (!type.is_string()) fail("profit \"type\" must be a string");
  const std::string kind = type.get<std::string>();
  if (kind == "table") {
    std::vector<double> values = number_array(field(profit, "values"), "values");
    if (n > 20 || values.size() != coalition_count(n))
      fail("table \"values\" must hold exactly 2^n numbers (n <= 20)");
    return ExplicitTable{std::move(values)};
  }
  if (kind == "additive") {
    std::vector<double> weights = number_array(field(profit, "weights"), "weights");
    if (static_cast<int>(weights.size()) != n) fail("additive \"weights\" must hold n numbers");
    return Additive{std::move(weights)};
  }
  if (kind == "coverage") {
    const Json& elements = field(profit, "elements");
    if (!elements.is_array()) fail("coverage \"elements\" must be an array");
    Coverage cov;
    std::unordered_map<std::string, int> index;
    for (const Json& e : elements) {
      const Json& idv = field(e, "id");
      if (!idv.is_string()) fail("element \"id\" must be a string");
      std::string id = idv.get<std::string>();
      const double weight = number_field(e, "weight");
      if (weight < 0.0) fail("element weights must be nonnegative");
      if (!index.emplace(id, static_cast<int>(cov.element_ids.size())).second)
        fail("duplicate element id \"" + id + "\"");
      cov.element_ids.push_back(std::move(id));
      cov.element_weights.push_back(weight);
    }
    const Json& players = field(profit, "players");
    if (!players.is_array() || static_cast<int>(players.size()) != n)
      fail("coverage \"players\" must hold one element list per player");
    for (const Json& cover : players) {
      if (!cover.is_array()) fail("each player cover must be an array of element ids");
      std::vector<int> ids;
      for (const Json& id : cover) {
        if (!id.is_string()) fail("player covers must reference element ids");
        const auto it = index.find(id.get<std::string>());
        if (it == index.end()) fail("unknown element id \"" + id.get<std::string>() + "\"");
        ids.push_back(it->second);
      }
      cov.covers.push_back(std::move(ids));
    }
    return cov;
  }
  if (kind == "ic_graph") {
    IcSpread ic;
    ic.graph = graph_from_json(profit);
    if (static_cast<int>(ic.graph.seeds.size()) != n)
      fail("ic_graph must list exactly n seeds");
    if (profit.contains("config")) {
      const Json& cfg = profit.at("config");
      if (cfg.contains("mode")) {
        const std::string mode = field(cfg, "mode").get<std::string>();
        if (mode == "exact")
          ic.config.mode = SpreadMode::kExact;
        else if (mode == "monte_carlo")
          ic.config.mode = SpreadMode::kMonteCarlo;
        else
          fail("config \"mode\" must be \"exact\" or \"monte_carlo\"");
      }
      if (cfg.contains("max_probabilistic_edges"))
        ic.config.max_probabilistic_edges = int_field(cfg, "max_probabilistic_edges");
      if (cfg.contains("samples")) ic.config.samples = field(cfg, "samples").get<std::uint64_t>();
      if (cfg.contains("master_seed"))
        ic.config.master_seed = field(cfg, "master_seed").get<std::uint64_t>();
    }
    return ic;
  }
  fail("unknown profit type \"" + kind + "\"");
}

Json profit_to_json(const ProfitOracle& oracle) {
  Json out;
  if (const auto* table = std::get_if<ExplicitTable>(&oracle)) {
    out["type"] = "table";
    out["values"] = table->values;
  } else if (const auto* additive = std::get_if<Additive>(&oracle)) {
    out["type"] = "additive";
    out["weights"] = additive->weights;
  } else if (const auto* cov = std::get_if<Coverage>(&oracle)) {
    out["type"] = "coverage";
    Json elements = Json::array();
    for (std::size_t e = 0; e < cov->element_ids.size(); ++e)
      elements.push_back({{"id", cov->element_ids[e]}, {"weight", cov->element_weights[e]}});
    out["elements"] = std::move(elements);
    Json players = Json::array();
    for (const auto& cover : cov->covers) {
      Json ids = Json::array();
      for (int e : cover) ids.push_back(cov->element_ids[static_cast<std::size_t>(e)]);
      players.push_back(std::move(ids));
    }
    out["players"] = std::move(players);
  } else {
    const auto& ic = std::get<IcSpread>(oracle);
    out["type"] = "ic_graph";
    Json graph = graph_to_json(ic.graph);
    for (auto& [key, value] : graph.items()) out[key] = std::move(value);
    Json cfg;
    cfg["mode"] = ic.config.mode == SpreadMode::kExact ? "exact" : "monte_carlo";
    cfg["max_probabilistic_edges"] = ic.config.max_probabilistic_edges;
    cfg["samples"] = ic.config.samples;
    cfg["master_seed"] = ic.config.master_seed;
    out["config"] = std::move(cfg);
  }
  return out;
}

// Keep in sync with the per-form default picked by make_game.
double form_default_eta_tol(const ProfitOracle& oracle) {
  return std::holds_alternative<IcSpread>(oracle) ? 1e-9 : 0.0;
}

}  // namespace

TruncatedGame game_from_json(const Json& doc) {
  const int n = int_field(doc, "n");
  if (n < 1) fail("\"n\" must be at least 1");
  const double eta = number_field(doc, "eta");
  ProfitOracle oracle = profit_from_json(field(doc, "profit"), n);
  const double eta_tol = doc.contains("eta_tol") ? number_field(doc, "eta_tol") : -1.0;
  if (doc.contains("eta_tol") && eta_tol < 0.0) fail("\"eta_tol\" must be nonnegative");
  return make_game(n, eta, std::move(oracle), eta_tol);
}

Json game_to_json(const TruncatedGame& g) {
  Json doc;
  doc["n"] = g.n;
  doc["eta"] = g.eta;
  if (g.eta_tol != form_default_eta_tol(g.profit)) doc["eta_tol"] = g.eta_tol;
  doc["profit"] = profit_to_json(g.profit);
  return doc;
}

SocialGraph graph_from_json(const Json& doc) {
  SocialGraph g;
  const Json& seeds = field(doc, "seeds");
  const Json& targets = field(doc, "targets");
  if (!seeds.is_array() || !targets.is_array()) fail("\"seeds\" and \"targets\" must be arrays");
  for (const Json& id : seeds) {
    if (!id.is_number_integer()) fail("seed ids must be integers");
    g.seeds.push_back(id.get<int>());
  }
  for (const Json& id : targets) {
    if (!id.is_number_integer()) fail("target ids must be integers");
    g.targets.push_back(id.get<int>());
  }
  const Json& edges = field(doc, "edges");
  if (!edges.is_array()) fail("\"edges\" must be an array of [src, dst, p] triples");
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number())
      fail("each edge must be an [src, dst, p] triple");
    g.edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
  }
  validate_graph(g);
  return g;
}

Json graph_to_json(const SocialGraph& g) {
  Json doc;
  doc["seeds"] = g.seeds;
  doc["targets"] = g.targets;
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({e.src, e.dst, e.p});
  doc["edges"] = std::move(edges);
  return doc;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& err) {
    fail(std::string("invalid JSON: ") + err.what());
  }
}

}  // namespace coalition
