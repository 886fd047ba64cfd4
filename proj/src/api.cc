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

#include "hedonic/api.h"

#include <algorithm>
#include <stdexcept>

#include "hedonic/errors.h"
#include "hedonic/fixtures.h"
#include "hedonic/preferences.h"

namespace hedonic::api {
namespace {

// Request envelope problems, answered with 400.
class BadRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json ErrorBody(const std::string& message) {
  Json body = Json::object();
  body["error"] = message;
  return body;
}

Response Reply(int status, const Json& body) { return {status, body.dump()}; }

Json DecodeBody(std::string_view body) {
  Json doc;
  try {
    doc = ParseJson(body);
  } catch (const SyntaxError& e) {
    throw BadRequest(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw BadRequest("request body must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "game" && key != "partition" && key != "notions" &&
        key != "model") {
      throw BadRequest("/" + key + ": unknown field \"" + key + "\"");
    }
  }
  return doc;
}

Game RequestGame(const Json& body) {
  if (!body.contains("game")) throw BadRequest("missing \"game\"");
  Game game = GameFromJson(body["game"], "/game");
  if (body.contains("model")) {
    const Json& tag = body["model"];
    auto kind = tag.is_string() ? ParseModelTag(tag.get<std::string>())
                                : std::nullopt;
    if (!kind) throw InvalidInput("/model: unknown model " + tag.dump());
    game = WithHomogeneousModel(game, *kind);
  }
  return game;
}

Partition RequestPartition(const Game& game, const Json& body) {
  if (!body.contains("partition")) throw BadRequest("missing \"partition\"");
  return PartitionFromJson(game, body["partition"], "/partition");
}

std::vector<StabilityNotion> RequestNotions(const Json& body) {
  if (!body.contains("notions")) {
    return {std::begin(kAllNotions), std::end(kAllNotions)};
  }
  const Json& list = body["notions"];
  if (!list.is_array()) throw BadRequest("/notions: expected an array");
  std::vector<StabilityNotion> notions;
  for (const Json& name : list) {
    auto notion = name.is_string() ? ParseNotion(name.get<std::string>())
                                   : std::nullopt;
    if (!notion) throw InvalidInput("/notions: unknown notion " + name.dump());
    notions.push_back(*notion);
  }
  if (notions.empty()) throw InvalidInput("/notions: no notions requested");
  return notions;
}

}  // namespace

Json Evaluate(const Game& game, const Partition& partition) {
  Json rows = Json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    Coalition c = partition.coalition_of(i);
    Json row = Json::object();
    row["player"] = game.label(i);
    row["model"] = ModelTag(game.model(i).kind);
    row["coalition"] = CoalitionToJson(game, c);
    row["utility"] = PlayerUtility(game, i, c).ToString();
    rows.push_back(std::move(row));
  }
  Json doc = Json::object();
  doc["format"] = "hedonic-evaluation/1";
  doc["partition"] = BlocksToJson(game, partition);
  doc["rows"] = std::move(rows);
  doc["aggregation"] = AggregationName(game.aggregation());
  doc["notes"] = GameNotes(game);
  return doc;
}

Json Certify(const Game& game, const Partition& partition,
             std::span<const StabilityNotion> notions, const Options& options) {
  SearchOptions search{options.search_workers};
  return StabilityReportToJson(game, partition,
                               hedonic::Certify(game, partition, notions, search));
}

Json Blocking(const Game& game, const Partition& partition,
              const Options& options) {
  SearchOptions search{options.search_workers};
  auto blocker = FindBlockingCoalition(game, partition, search);
  Json doc = Json::object();
  doc["blocking"] = blocker ? CoalitionToJson(game, *blocker) : Json(nullptr);
  return doc;
}

Json Core(const Game& game, const Options& options) {
  CoreOptions core_options;
  core_options.deadline = std::chrono::steady_clock::now() + options.core_budget;
  CoreResult result = ComputeCore(game, core_options);
  Json partitions = Json::array();
  for (const Partition& p : result.core) {
    partitions.push_back(BlocksToJson(game, p));
  }
  Json doc = Json::object();
  doc["format"] = "hedonic-core/1";
  doc["exhaustive"] = result.exhaustive;
  doc["partitions_scanned"] = result.partitions_scanned;
  doc["blocked"] = result.blocked;
  doc["core_size"] = result.core.size();
  doc["core"] = std::move(partitions);
  doc["notes"] = GameNotes(game);
  return doc;
}

Json Examples() {
  Json examples = Json::array();
  for (const Fixture& fixture : BundledFixtures()) {
    Json entry = Json::object();
    entry["name"] = fixture.name;
    entry["game"] = GameToJson(ParseGame(fixture.text));
    examples.push_back(std::move(entry));
  }
  Json doc = Json::object();
  doc["examples"] = std::move(examples);
  return doc;
}

Json Health() {
  Json caps = Json::object();
  caps["max_players"] = kMaxPlayers;
  caps["blocking_search_max_n"] = kMaxBlockingSearchPlayers;
  caps["core_max_n"] = kDefaultPartitionCap;
  caps["sweep_max_n"] = kGraphSweepCap;
  Json doc = Json::object();
  doc["status"] = "ok";
  doc["version"] = kVersion;
  doc["caps"] = std::move(caps);
  return doc;
}

std::vector<StabilityNotion> ParseNotionList(std::string_view list) {
  std::vector<StabilityNotion> notions;
  while (!list.empty()) {
    auto comma = list.find(',');
    std::string_view name = list.substr(0, comma);
    list = comma == std::string_view::npos ? std::string_view()
                                           : list.substr(comma + 1);
    if (name.empty()) continue;
    auto notion = ParseNotion(name);
    if (!notion) {
      throw InvalidInput("unknown notion \"" + std::string(name) +
                         "\" (expected core, individual-rationality, nash or "
                         "individual-stability)");
    }
    notions.push_back(*notion);
  }
  if (notions.empty()) return {std::begin(kAllNotions), std::end(kAllNotions)};
  return notions;
}

Response Handle(std::string_view method, std::string_view path,
                std::string_view body, const Options& options) {
  try {
    if (method == "GET" && path == "/api/health") return Reply(200, Health());
    if (method == "GET" && path == "/api/examples") {
      return Reply(200, Examples());
    }
    if (method != "POST") {
      return Reply(404, ErrorBody("no route for " + std::string(method) + " " +
                                  std::string(path)));
    }
    if (path == "/api/evaluate") {
      Json req = DecodeBody(body);
      Game game = RequestGame(req);
      return Reply(200, Evaluate(game, RequestPartition(game, req)));
    }
    if (path == "/api/certify") {
      Json req = DecodeBody(body);
      Game game = RequestGame(req);
      Partition partition = RequestPartition(game, req);
      auto notions = RequestNotions(req);
      return Reply(200, Certify(game, partition, notions, options));
    }
    if (path == "/api/blocking") {
      Json req = DecodeBody(body);
      Game game = RequestGame(req);
      return Reply(200, Blocking(game, RequestPartition(game, req), options));
    }
    if (path == "/api/core") {
      Json req = DecodeBody(body);
      return Reply(200, Core(RequestGame(req), options));
    }
    return Reply(404, ErrorBody("no route for POST " + std::string(path)));
  } catch (const BadRequest& e) {
    return Reply(400, ErrorBody(e.what()));
  } catch (const SyntaxError& e) {
    return Reply(400, ErrorBody(e.what()));
  } catch (const InvalidInput& e) {
    return Reply(422, ErrorBody(e.what()));
  } catch (const CapExceeded& e) {
    return Reply(422, ErrorBody(e.what()));
  } catch (const DeadlineExceeded& e) {
    Json err = ErrorBody(e.what());
    err["partial"] = false;
    return Reply(422, err);
  } catch (const std::overflow_error& e) {
    return Reply(422, ErrorBody(std::string("arithmetic overflow: ") + e.what()));
  }
}

}  // namespace hedonic::api
