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

#include "hedonic/documents.h"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>

#include "hedonic/errors.h"

namespace hedonic {
namespace {

[[noreturn]] void Fail(const std::string& where, const std::string& message) {
  throw InvalidInput((where.empty() ? "/" : where) + ": " + message);
}

void RejectUnknownFields(const Json& doc, const std::string& where,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      Fail(where + "/" + key, "unknown field \"" + key + "\"");
    }
  }
}

void RequireFormat(const Json& doc, const std::string& where,
                   std::string_view expected) {
  if (!doc.contains("format")) {
    Fail(where, "missing \"format\" (expected \"" + std::string(expected) +
                    "\")");
  }
  const Json& format = doc["format"];
  if (!format.is_string() || format.get<std::string>() != expected) {
    Fail(where + "/format", "unsupported format " + format.dump() +
                                " (expected \"" + std::string(expected) +
                                "\")");
  }
}

std::string RequireString(const Json& value, const std::string& where) {
  if (!value.is_string()) Fail(where, "expected a string, got " + value.dump());
  return value.get<std::string>();
}

int ResolveLabel(const std::map<std::string, int>& index, const Json& value,
                 const std::string& where) {
  std::string label = RequireString(value, where);
  auto it = index.find(label);
  if (it == index.end()) Fail(where, "unknown player \"" + label + "\"");
  return it->second;
}

ModelKind RequireModel(const Json& value, const std::string& where) {
  std::string tag = RequireString(value, where);
  auto kind = ParseModelTag(tag);
  if (!kind) {
    Fail(where, "unknown model \"" + tag +
                    "\" (expected FO, EO, FR, SF, EQ or AL)");
  }
  return *kind;
}

Rational RequireRational(const Json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (!value.is_string()) {
    Fail(where, "expected a rational string such as \"2/3\", got " +
                    value.dump());
  }
  try {
    return Rational::Parse(value.get<std::string>());
  } catch (const std::exception& e) {
    Fail(where, e.what());
  }
}

GameSpec SpecOf(const Game& game) {
  GameSpec spec;
  spec.labels = game.labels();
  spec.edges = game.graph().Edges();
  spec.models.clear();
  for (int i = 0; i < game.num_players(); ++i) {
    spec.models.push_back(game.model(i).kind);
  }
  spec.aggregation = game.aggregation();
  if (const auto& v = game.valuations()) {
    std::vector<std::vector<Rational>> rows(game.num_players());
    for (int i = 0; i < game.num_players(); ++i) {
      for (int j = 0; j < game.num_players(); ++j) rows[i].push_back(v->at(i, j));
    }
    spec.valuations = std::move(rows);
  }
  return spec;
}

}  // namespace

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    std::size_t offset = e.byte == 0 ? 0 : std::min(e.byte - 1, text.size());
    int line = 1;
    int column = 1;
    for (std::size_t k = 0; k < offset; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at ..."
    // prefix; the position is reported separately.
    auto colon = what.find(": ", what.find("parse error"));
    if (colon != std::string::npos) what = what.substr(colon + 2);
    throw SyntaxError(what, line, column);
  }
}

Game GameFromJson(const Json& doc, const std::string& where) {
  if (!doc.is_object()) Fail(where, "a game document must be a JSON object");
  RejectUnknownFields(doc, where,
                      {"format", "players", "edges", "model", "models",
                       "valuations", "aggregation"});
  RequireFormat(doc, where, kGameFormat);

  GameSpec spec;
  if (!doc.contains("players") || !doc["players"].is_array()) {
    Fail(where + "/players", "expected an array of player labels");
  }
  std::map<std::string, int> index;
  const Json& players = doc["players"];
  for (std::size_t k = 0; k < players.size(); ++k) {
    std::string at = where + "/players/" + std::to_string(k);
    std::string label = RequireString(players[k], at);
    if (label.empty()) Fail(at, "empty player label");
    if (!index.emplace(label, static_cast<int>(k)).second) {
      Fail(at, "duplicate player label \"" + label + "\"");
    }
    spec.labels.push_back(label);
  }
  if (spec.labels.empty()) Fail(where + "/players", "a game needs a player");
  if (static_cast<int>(spec.labels.size()) > kMaxPlayers) {
    Fail(where + "/players",
         "at most " + std::to_string(kMaxPlayers) + " players are supported");
  }
  const int n = static_cast<int>(spec.labels.size());

  if (doc.contains("edges")) {
    const Json& edges = doc["edges"];
    if (!edges.is_array()) Fail(where + "/edges", "expected an array of pairs");
    for (std::size_t k = 0; k < edges.size(); ++k) {
      std::string at = where + "/edges/" + std::to_string(k);
      if (!edges[k].is_array() || edges[k].size() != 2) {
        Fail(at, "an edge is a pair of player labels");
      }
      int a = ResolveLabel(index, edges[k][0], at + "/0");
      int b = ResolveLabel(index, edges[k][1], at + "/1");
      if (a == b) Fail(at, "self-loop on player \"" + spec.labels[a] + "\"");
      spec.edges.emplace_back(a, b);
    }
  }

  const bool has_model = doc.contains("model");
  const bool has_models = doc.contains("models");
  if (has_model == has_models) {
    Fail(where, "exactly one of \"model\" or \"models\" is required");
  }
  if (has_model) {
    spec.models = {RequireModel(doc["model"], where + "/model")};
  } else {
    const Json& models = doc["models"];
    if (!models.is_object()) {
      Fail(where + "/models", "expected an object mapping player to model");
    }
    std::vector<std::optional<ModelKind>> per_player(n);
    for (const auto& [label, tag] : models.items()) {
      std::string at = where + "/models/" + label;
      auto it = index.find(label);
      if (it == index.end()) Fail(at, "unknown player \"" + label + "\"");
      per_player[it->second] = RequireModel(tag, at);
    }
    spec.models.clear();
    for (int i = 0; i < n; ++i) {
      if (!per_player[i]) {
        Fail(where + "/models", "no model for player \"" + spec.labels[i] + "\"");
      }
      spec.models.push_back(*per_player[i]);
    }
  }

  if (doc.contains("aggregation")) {
    std::string name = RequireString(doc["aggregation"], where + "/aggregation");
    auto aggregation = ParseAggregation(name);
    if (!aggregation) {
      Fail(where + "/aggregation",
           "unknown aggregation \"" + name + "\" (expected mean or sum)");
    }
    spec.aggregation = *aggregation;
  }

  if (doc.contains("valuations")) {
    const Json& rows = doc["valuations"];
    std::string at = where + "/valuations";
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
      Fail(at, "expected " + std::to_string(n) + " rows, one per player");
    }
    std::vector<std::vector<Rational>> table(n);
    for (int i = 0; i < n; ++i) {
      std::string row_at = at + "/" + std::to_string(i);
      if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n) {
        Fail(row_at, "expected " + std::to_string(n) + " entries");
      }
      for (int j = 0; j < n; ++j) {
        table[i].push_back(
            RequireRational(rows[i][j], row_at + "/" + std::to_string(j)));
      }
    }
    spec.valuations = std::move(table);
  }

  try {
    return BuildGame(spec);
  } catch (const InvalidInput& e) {
    Fail(where, e.what());
  }
}

Game ParseGame(std::string_view text) { return GameFromJson(ParseJson(text)); }

Json GameToJson(const Game& game) {
  Json doc = Json::object();
  doc["format"] = kGameFormat;
  doc["players"] = game.labels();
  Json edges = Json::array();
  for (const auto& [a, b] : game.graph().Edges()) {
    edges.push_back({game.label(a), game.label(b)});
  }
  doc["edges"] = std::move(edges);
  if (game.is_homogeneous()) {
    doc["model"] = ModelTag(game.model(0).kind);
  } else {
    Json models = Json::object();
    for (int i = 0; i < game.num_players(); ++i) {
      models[game.label(i)] = ModelTag(game.model(i).kind);
    }
    doc["models"] = std::move(models);
  }
  if (const auto& v = game.valuations()) {
    Json rows = Json::array();
    for (int i = 0; i < game.num_players(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < game.num_players(); ++j) {
        row.push_back(v->at(i, j).ToString());
      }
      rows.push_back(std::move(row));
    }
    doc["valuations"] = std::move(rows);
  }
  doc["aggregation"] = AggregationName(game.aggregation());
  return doc;
}

std::string DumpDocument(const Json& doc) {
  if (!doc.is_object() || doc.empty()) return doc.dump() + "\n";
  std::string out = "{\n";
  std::size_t k = 0;
  for (const auto& [key, value] : doc.items()) {
    out += "  " + Json(key).dump() + ": " + value.dump();
    out += ++k < doc.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

std::string SerializeGame(const Game& game) {
  return DumpDocument(GameToJson(game));
}

Partition PartitionFromJson(const Game& game, const Json& doc,
                            const std::string& where) {
  if (!doc.is_object()) {
    Fail(where, "a partition document must be a JSON object");
  }
  RejectUnknownFields(doc, where, {"format", "blocks"});
  RequireFormat(doc, where, kPartitionFormat);
  if (!doc.contains("blocks") || !doc["blocks"].is_array()) {
    Fail(where + "/blocks", "expected an array of blocks");
  }
  std::map<std::string, int> index;
  for (int i = 0; i < game.num_players(); ++i) index[game.label(i)] = i;

  const Json& blocks = doc["blocks"];
  std::vector<Coalition> coalitions;
  Coalition covered;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::string at = where + "/blocks/" + std::to_string(b);
    if (!blocks[b].is_array() || blocks[b].empty()) {
      Fail(at, "a block is a nonempty array of player labels");
    }
    Coalition block;
    for (std::size_t k = 0; k < blocks[b].size(); ++k) {
      std::string member_at = at + "/" + std::to_string(k);
      int i = ResolveLabel(index, blocks[b][k], member_at);
      if (covered.contains(i) || block.contains(i)) {
        Fail(member_at, "player \"" + game.label(i) +
                            "\" appears in more than one block");
      }
      block = block.With(i);
    }
    covered = covered | block;
    coalitions.push_back(block);
  }
  for (int i = 0; i < game.num_players(); ++i) {
    if (!covered.contains(i)) {
      Fail(where + "/blocks",
           "player \"" + game.label(i) + "\" is not in any block");
    }
  }
  return Canonicalize(game.num_players(), coalitions);
}

Partition ParsePartition(const Game& game, std::string_view text) {
  return PartitionFromJson(game, ParseJson(text));
}

Json CoalitionToJson(const Game& game, Coalition c) {
  Json members = Json::array();
  ForEachMember(c, [&](int i) { members.push_back(game.label(i)); });
  return members;
}

Json BlocksToJson(const Game& game, const Partition& partition) {
  Json blocks = Json::array();
  for (Coalition block : partition.blocks()) {
    blocks.push_back(CoalitionToJson(game, block));
  }
  return blocks;
}

Json PartitionToJson(const Game& game, const Partition& partition) {
  Json doc = Json::object();
  doc["format"] = kPartitionFormat;
  doc["blocks"] = BlocksToJson(game, partition);
  return doc;
}

std::string SerializePartition(const Game& game, const Partition& partition) {
  return DumpDocument(PartitionToJson(game, partition));
}

Game WithHomogeneousModel(const Game& game, ModelKind kind) {
  GameSpec spec = SpecOf(game);
  spec.models = {kind};
  return BuildGame(spec);
}

Json GameNotes(const Game& game) {
  Json notes = Json::array();
  if (game.uses(ModelKind::kSelfishFirst) ||
      game.uses(ModelKind::kTrulyAltruistic)) {
    notes.push_back(
        "SF/AL: the average over friends inside the coalition is taken as 0 "
        "when there are none");
  }
  if (game.uses(ModelKind::kFractional)) {
    notes.push_back("FR: valuations are combined by " +
                    std::string(AggregationName(game.aggregation())));
  }
  for (const std::string& warning : game.warnings()) notes.push_back(warning);
  return notes;
}

Json StabilityReportToJson(const Game& game, const Partition& partition,
                           const StabilityReport& report) {
  Json verdicts = Json::array();
  for (const Verdict& verdict : report.verdicts) {
    Json v = Json::object();
    v["notion"] = NotionName(verdict.notion);
    v["kind"] = IsPrimaryNotion(verdict.notion) ? "primary" : "auxiliary";
    v["stable"] = verdict.stable();
    Json witness = nullptr;
    if (const auto* c = std::get_if<Coalition>(&verdict.witness)) {
      witness = {{"type", "blocking-coalition"},
                 {"coalition", CoalitionToJson(game, *c)}};
    } else if (const auto* p = std::get_if<PlayerWitness>(&verdict.witness)) {
      witness = {{"type", "player"}, {"player", game.label(p->player)}};
    } else if (const auto* d = std::get_if<Deviation>(&verdict.witness)) {
      witness = {{"type", "deviation"},
                 {"player", game.label(d->player)},
                 {"target", CoalitionToJson(game, d->target)}};
    }
    v["witness"] = std::move(witness);
    verdicts.push_back(std::move(v));
  }
  Json doc = Json::object();
  doc["format"] = "hedonic-report/1";
  doc["partition"] = BlocksToJson(game, partition);
  doc["all_stable"] = report.all_stable();
  doc["verdicts"] = std::move(verdicts);
  doc["aggregation"] = AggregationName(game.aggregation());
  doc["notes"] = GameNotes(game);
  return doc;
}

Json CounterexampleToJson(ModelKind model, const Counterexample& ce) {
  Game game = HuntGame(model, ce.n, ce.edge_mask);
  Json certificate = Json::array();
  for (const auto& [partition, blocker] : ce.certificate.blocked_partitions) {
    certificate.push_back({{"partition", BlocksToJson(game, partition)},
                           {"blocking", CoalitionToJson(game, blocker)}});
  }
  Json doc = Json::object();
  doc["format"] = "hedonic-empty-core-certificate/1";
  doc["n"] = ce.n;
  doc["edge_mask"] = ce.edge_mask;
  doc["game"] = GameToJson(game);
  doc["certificate"] = std::move(certificate);
  return doc;
}

Json HuntReportToJson(const HuntReport& report) {
  Json scanned = Json::object();
  for (int n = 1; n < static_cast<int>(report.games_scanned.size()); ++n) {
    scanned[std::to_string(n)] = report.games_scanned[n];
  }
  Json counterexamples = Json::array();
  for (const Counterexample& ce : report.counterexamples) {
    counterexamples.push_back(CounterexampleToJson(report.model, ce));
  }
  Json doc = Json::object();
  doc["format"] = "hedonic-hunt/1";
  doc["model"] = ModelTag(report.model);
  doc["n_max"] = report.n_max;
  doc["filter"] = report.connected_only ? "connected" : "all";
  doc["games_scanned"] = std::move(scanned);
  doc["total_games"] = report.total_games();
  doc["empty_cores_found"] = report.counterexamples.size();
  doc["counterexamples"] = std::move(counterexamples);
  return doc;
}

}  // namespace hedonic
