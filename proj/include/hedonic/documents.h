// Copyright 2026 The Hedonic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Game and partition documents, and JSON encodings of engine results.
//
// A game document looks like
//
//   {
//     "format": "hedonic-game/1",
//     "players": ["a","b","c"],
//     "edges": [["a","b"],["b","c"]],
//     "model": "FO",
//     "aggregation": "mean"
//   }
//
// "model" may be replaced by "models": {"a": "FO", "b": "AL", ...} covering
// every player. An optional "valuations" field holds one row per player, in
// player order, of rational strings such as "2/3" (plain JSON integers are
// accepted on input). A partition document is
//
//   {"format": "hedonic-partition/1", "blocks": [["a","b"],["c"]]}
//
// Unknown fields are rejected, naming their JSON pointer.

#ifndef HEDONIC_DOCUMENTS_H_
#define HEDONIC_DOCUMENTS_H_

#include <string>
#include <string_view>

#include "hedonic/game.h"
#include "hedonic/partition_search.h"
#include "hedonic/stability.h"
#include "json.hpp"

namespace hedonic {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kGameFormat = "hedonic-game/1";
inline constexpr std::string_view kPartitionFormat = "hedonic-partition/1";

// Parses document text. Throws SyntaxError (with line and column) on
// malformed JSON and InvalidInput on semantic problems.
Json ParseJson(std::string_view text);

// `where` is the JSON pointer of doc inside an enclosing request, used in
// error messages.
Game GameFromJson(const Json& doc, const std::string& where = "");
Game ParseGame(std::string_view text);
Json GameToJson(const Game& game);
// Normalized document text; ParseGame(SerializeGame(g)) rebuilds g.
std::string SerializeGame(const Game& game);

Partition PartitionFromJson(const Game& game, const Json& doc,
                            const std::string& where = "");
Partition ParsePartition(const Game& game, std::string_view text);
Json PartitionToJson(const Game& game, const Partition& partition);
std::string SerializePartition(const Game& game, const Partition& partition);

// Top-level fields one per line, values compact.
std::string DumpDocument(const Json& doc);

// Same game with every player switched to kind. Throws InvalidInput for
// the fractional model on a game without valuations.
Game WithHomogeneousModel(const Game& game, ModelKind kind);

Json CoalitionToJson(const Game& game, Coalition c);
Json BlocksToJson(const Game& game, const Partition& partition);
Json StabilityReportToJson(const Game& game, const Partition& partition,
                           const StabilityReport& report);
// Model-dependent caveats that every result carries.
Json GameNotes(const Game& game);

Json HuntReportToJson(const HuntReport& report);
Json CounterexampleToJson(ModelKind model, const Counterexample& ce);

}  // namespace hedonic

#endif  // HEDONIC_DOCUMENTS_H_
