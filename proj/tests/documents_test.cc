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

#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "hedonic/errors.h"
#include "hedonic/fixtures.h"
#include "hedonic/preferences.h"
#include "test_util.h"

namespace hedonic {
namespace {

std::string ReadFixture(const std::string& name) {
  std::ifstream in(std::string(HEDONIC_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string ErrorOf(std::string_view text) {
  try {
    ParseGame(text);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("bundled fixtures are normalized and match the files") {
  for (const Fixture& fixture : BundledFixtures()) {
    CAPTURE(fixture.name);
    std::string file = ReadFixture(std::string(fixture.name) + ".game");
    CHECK(file == fixture.text);
    CHECK(SerializeGame(ParseGame(file)) == file);
  }
  CHECK(FindFixture("story").has_value());
  CHECK_FALSE(FindFixture("nope").has_value());

  Game story = ParseGame(ReadFixture("story.game"));
  CHECK(story.num_players() == 5);
  CHECK(story.graph().num_edges() == 7);
  CHECK(story.model(0).kind == ModelKind::kTrulyAltruistic);
  for (const char* name : {"story-split.partition", "story-singletons.partition"}) {
    std::string text = ReadFixture(name);
    CHECK(SerializePartition(story, ParsePartition(story, text)) == text);
  }
  Game k4 = ParseGame(ReadFixture("complete4.game"));
  std::string grand = ReadFixture("complete4-grand.partition");
  CHECK(ParsePartition(k4, grand) == Partition::Grand(4));
  CHECK(SerializePartition(k4, Partition::Grand(4)) == grand);
}

TEST_CASE("games round-trip through their documents") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Game game = testing::RandomGame(rng, 1 + trial % 9);
    std::string text = SerializeGame(game);
    Game back = ParseGame(text);
    REQUIRE(SerializeGame(back) == text);
    REQUIRE(back.labels() == game.labels());
    REQUIRE(back.graph() == game.graph());
    Partition p = testing::RandomPartition(rng, game.num_players());
    REQUIRE(ParsePartition(back, SerializePartition(game, p)) == p);
    for (int i = 0; i < game.num_players(); ++i) {
      REQUIRE(PlayerUtility(back, i, p.coalition_of(i)) ==
              PlayerUtility(game, i, p.coalition_of(i)));
    }
  }
}

TEST_CASE("normalization") {
  Game game = ParseGame(R"({"format":"hedonic-game/1","players":["x","y","z"],
    "edges":[["z","x"],["y","x"]],
    "models":{"z":"FR","x":"FR","y":"FR"},
    "valuations":[[0,"2/4",1],["-1",0,"3"],[" 1/3 ",0,0]]})");
  CHECK(SerializeGame(game) ==
        "{\n"
        "  \"format\": \"hedonic-game/1\",\n"
        "  \"players\": [\"x\",\"y\",\"z\"],\n"
        "  \"edges\": [[\"x\",\"y\"],[\"x\",\"z\"]],\n"
        "  \"model\": \"FR\",\n"
        "  \"valuations\": [[\"0\",\"1/2\",\"1\"],[\"-1\",\"0\",\"3\"],[\"1/3\",\"0\",\"0\"]],\n"
        "  \"aggregation\": \"mean\"\n"
        "}\n");

  Game mixed = ParseGame(R"({"format":"hedonic-game/1","players":["p","q"],
    "edges":[], "models":{"q":"EO","p":"FO"}, "aggregation":"sum"})");
  CHECK(GameToJson(mixed)["models"].dump() == R"({"p":"FO","q":"EO"})");
  CHECK(GameToJson(mixed)["aggregation"] == "sum");

  Game defaults = ParseGame(R"({"format":"hedonic-game/1","players":["p"],"model":"EQ"})");
  CHECK(GameToJson(defaults)["edges"].empty());
  CHECK(GameToJson(defaults)["aggregation"] == "mean");
}

TEST_CASE("game document errors") {
  CHECK(ErrorOf(R"({"format":"hedonic-game/1","players":["a","b","a"],"model":"FO"})") ==
        "/players/2: duplicate player label \"a\"");
  CHECK(ErrorOf(R"({"format":"hedonic-game/1","players":["a"],"model":"FO","colour":1})") ==
        "/colour: unknown field \"colour\"");
  CHECK(ErrorOf(R"({"players":["a"],"model":"FO"})").find("missing \"format\"") !=
        std::string::npos);
  CHECK(ErrorOf(R"({"format":"hedonic-game/2","players":["a"],"model":"FO"})")
            .find("/format: unsupported format") == 0);
  CHECK(ErrorOf(R"({"format":"hedonic-game/1","players":[],"model":"FO"})") ==
        "/players: a game needs a player");
  CHECK(ErrorOf(R"({"format":"hedonic-game/1","players":["a","b"],"model":"FO",
                    "edges":[["a","c"]]})") == "/edges/0/1: unknown player \"c\"");
  CHECK(ErrorOf(R"({"format":"hedonic-game/1","players":["a","b"],"model":"FO",
                    "edges":[["b","b"]]})") == "/edges/0: self-loop on player \"b\"");
  CHECK(ErrorOf(R"({"format":"hedonic-game/1","players":["a"]})") ==
        "/: exactly one of \"model\" or \"models\" is required");
  CHECK(ErrorOf(R"({"format":"hedonic-game/1","players":["a"],"model":"XX"})")
            .find("/model: unknown model \"XX\"") == 0);
  CHECK(ErrorOf(R"({"format":"hedonic-game/1","players":["a","b"],
                    "models":{"a":"FO"}})") == "/models: no model for player \"b\"");
  CHECK(ErrorOf(R"({"format":"hedonic-game/1","players":["a","b"],"model":"FR"})")
            .find("no valuations") != std::string::npos);
  CHECK(ErrorOf(R"({"format":"hedonic-game/1","players":["a","b"],"model":"FR",
                    "valuations":[[0,1],[1]]})") == "/valuations/1: expected 2 entries");
  CHECK(ErrorOf(R"({"format":"hedonic-game/1","players":["a","b"],"model":"FR",
                    "valuations":[[0,"1/0"],[1,0]]})")
            .find("/valuations/0/1: ") == 0);
  CHECK(ErrorOf(R"({"format":"hedonic-game/1","players":["a"],"model":"FO",
                    "aggregation":"median"})")
            .find("/aggregation: unknown aggregation") == 0);
  CHECK(ErrorOf("[1,2]") == "/: a game document must be a JSON object");

  std::vector<std::string> many;
  for (int i = 0; i <= kMaxPlayers; ++i) many.push_back("p" + std::to_string(i));
  Json doc = {{"format", "hedonic-game/1"}, {"players", many}, {"model", "FO"}};
  CHECK_THROWS_AS(GameFromJson(doc), InvalidInput);
  many.pop_back();
  doc["players"] = many;
  CHECK(GameFromJson(doc).num_players() == kMaxPlayers);
}

TEST_CASE("self-valuations are zeroed with a warning") {
  Game game = ParseGame(R"({"format":"hedonic-game/1","players":["a","b"],
    "model":"FR","valuations":[[5,1],[1,0]]})");
  CHECK(game.valuations()->at(0, 0) == 0);
  REQUIRE(game.warnings().size() == 1);
  CHECK(GameNotes(game).back() == game.warnings()[0]);
}

TEST_CASE("syntax errors carry positions") {
  try {
    ParseGame("{\n  \"format\": \"hedonic-game/1\",\n  \"players\": [\"a\",,]\n}");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 19);
    CHECK(std::string(e.what()).find("line 3, column 19: ") == 0);
  }
  CHECK_THROWS_AS(ParseGame(""), SyntaxError);
  CHECK_THROWS_AS(ParseGame("{\"format\": tru}"), SyntaxError);
}

TEST_CASE("partition document errors") {
  Game game = ParseGame(R"({"format":"hedonic-game/1","players":["a","b","c"],"model":"FO"})");
  auto error = [&](std::string_view text) -> std::string {
    try {
      ParsePartition(game, text);
    } catch (const std::exception& e) {
      return e.what();
    }
    return "";
  };
  CHECK(ParsePartition(game, R"({"format":"hedonic-partition/1","blocks":[["c","a"],["b"]]})") ==
        PartitionFromLabels(std::vector<int>{0, 1, 0}));
  CHECK(error(R"({"format":"hedonic-partition/1","blocks":[["a","b"],["d"]]})") ==
        "/blocks/1/0: unknown player \"d\"");
  CHECK(error(R"({"format":"hedonic-partition/1","blocks":[["a","b"],["b","c"]]})") ==
        "/blocks/1/0: player \"b\" appears in more than one block");
  CHECK(error(R"({"format":"hedonic-partition/1","blocks":[["a","a"],["b","c"]]})") ==
        "/blocks/0/1: player \"a\" appears in more than one block");
  CHECK(error(R"({"format":"hedonic-partition/1","blocks":[["a","b"]]})") ==
        "/blocks: player \"c\" is not in any block");
  CHECK(error(R"({"format":"hedonic-partition/1","blocks":[["a","b","c"],[]]})") ==
        "/blocks/1: a block is a nonempty array of player labels");
  CHECK(error(R"({"format":"hedonic-game/1","blocks":[["a","b","c"]]})")
            .find("/format: unsupported format") == 0);
}

TEST_CASE("stability report document") {
  Game game = MakeGame(testing::StoryGraph(), ModelKind::kFriendOriented);
  Json doc = StabilityReportToJson(
      game, Partition::Singletons(5),
      Certify(game, Partition::Singletons(5), kAllNotions));
  CHECK(doc["format"] == "hedonic-report/1");
  CHECK(doc["all_stable"] == false);
  REQUIRE(doc["verdicts"].size() == 4);
  CHECK(doc["verdicts"][0]["notion"] == "core");
  CHECK(doc["verdicts"][0]["kind"] == "primary");
  CHECK(doc["verdicts"][0]["witness"]["type"] == "blocking-coalition");
  CHECK(doc["verdicts"][0]["witness"]["coalition"] == Json::parse(R"(["a","b"])"));
  CHECK(doc["verdicts"][1]["stable"] == true);
  CHECK(doc["verdicts"][1]["witness"].is_null());
  CHECK(doc["verdicts"][2]["kind"] == "auxiliary");
  CHECK(doc["verdicts"][2]["witness"]["type"] == "deviation");
  CHECK(doc["notes"].empty());

  Game al = MakeGame(testing::StoryGraph(), ModelKind::kTrulyAltruistic);
  CHECK(GameNotes(al).size() == 1);
}

TEST_CASE("homogeneous model override keeps everything else") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    Game game = testing::RandomGame(rng, 1 + trial % 6);
    Game eq = WithHomogeneousModel(game, ModelKind::kEqualTreatment);
    CHECK(eq.is_homogeneous());
    CHECK(eq.model(0).kind == ModelKind::kEqualTreatment);
    CHECK(eq.graph() == game.graph());
    CHECK(eq.labels() == game.labels());
    CHECK(eq.aggregation() == game.aggregation());
  }
}

}  // namespace
}  // namespace hedonic
