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

#include "coalition/game.hpp"
#include "coalition/social_graph.hpp"
#include "json.hpp"

namespace coalition {

// Key order is preserved so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

// Game document: {"n": int, "eta": number, "profit": {"type": "table" |
// "additive" | "coverage" | "ic_graph", ...payload...}} plus an optional
// top-level "eta_tol" (emitted only when it differs from the form default).
// Payloads: table {"values": [2^n numbers in coalition-encoding order]};
// additive {"weights": [n numbers]}; coverage {"elements": [{"id","weight"}],
// "players": [[element ids]]}; ic_graph embeds the graph document keys plus
// an optional "config" {"mode","max_probabilistic_edges","samples",
// "master_seed"}. Parse problems throw std::invalid_argument naming the key.
TruncatedGame game_from_json(const Json& doc);
Json game_to_json(const TruncatedGame& g);

// Graph document: {"seeds": [ids], "targets": [ids],
// "edges": [[src, dst, p], ...]}.
SocialGraph graph_from_json(const Json& doc);
Json graph_to_json(const SocialGraph& g);

// Strict parse (rejects trailing garbage); wraps the parser diagnostic in
// std::invalid_argument so callers see one error type for bad input.
Json parse_json_text(const std::string& text);

}  // namespace coalition
