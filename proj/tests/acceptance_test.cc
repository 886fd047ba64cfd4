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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "hedonic/api.h"
#include "hedonic/cli.h"
#include "hedonic/documents.h"
#include "hedonic/fixtures.h"
#include "hedonic/partition_search.h"
#include "hedonic/preferences.h"
#include "hedonic/service.h"
#include "hedonic/stability.h"
#include "httplib.h"
#include "oracle.h"
#include "test_util.h"

namespace hedonic {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

oracle::Set ToSet(Coalition c) {
  oracle::Set s;
  for (int i : c.Members()) s.insert(i);
  return s;
}

oracle::SetPartition ToSets(const Partition& p) {
  oracle::SetPartition out;
  for (Coalition block : p.blocks()) out.push_back(ToSet(block));
  return out;
}

std::string Describe(int n, std::uint64_t mask) {
  return "n=" + std::to_string(n) + " edge mask " + std::to_string(mask);
}

// Every graph with n <= n_max, then `random_per_n` random graphs for each
// size in `random_sizes`.
void ForEachSweepGraph(int n_max, std::vector<int> random_sizes, int random_per_n,
                       const std::function<void(const FriendshipGraph&)>& fn) {
  for (int n = 1; n <= n_max; ++n) {
    GraphStream graphs(n, false);
    while (auto g = graphs.Next()) fn(*g);
  }
  std::mt19937_64 rng(20260101);
  for (int n : random_sizes) {
    for (int k = 0; k < random_per_n; ++k) fn(testing::RandomGraph(rng, n));
  }
}

// Nonempty core for every sweep graph, with one core member confirmed by the
// reference blocking check.
Outcome CoreNonempty(ModelKind model, std::vector<int> random_sizes, bool clique_law) {
  Outcome outcome;
  std::uint64_t games = 0;
  std::uint64_t core_partitions = 0;
  ForEachSweepGraph(5, random_sizes, 500, [&](const FriendshipGraph& g) {
    ++games;
    Game game = MakeGame(g, model);
    CoreResult result = ComputeCore(game);
    if (result.core.empty()) {
      outcome.Fail("empty core on " + Describe(g.num_players(), EdgeMaskOf(g)));
      return;
    }
    core_partitions += result.core.size();
    if (oracle::HasBlocker(oracle::FromGame(game), ToSets(result.core.front()))) {
      outcome.Fail("reference finds a blocker for a reported core partition on " +
                   Describe(g.num_players(), EdgeMaskOf(g)));
    }
    if (clique_law) {
      for (const Partition& p : result.core) {
        for (Coalition block : p.blocks()) {
          if (!g.IsClique(block)) {
            outcome.Fail("non-clique block " + FormatCoalition(game, block) +
                         " in core of " + Describe(g.num_players(), EdgeMaskOf(g)));
          }
        }
      }
    }
  });
  if (outcome.pass) {
    outcome.detail = std::to_string(games) + " games, all cores nonempty (" +
                     std::to_string(core_partitions) + " core partitions)";
    if (clique_law) outcome.detail += ", every core block a clique";
  }
  return outcome;
}

Outcome A1() {
  return CoreNonempty(ModelKind::kFriendOriented, {6, 7}, false);
}

Outcome A2() {
  return CoreNonempty(ModelKind::kEnemyOriented, {6, 7}, true);
}

Outcome A3() { return CoreNonempty(ModelKind::kSelfishFirst, {}, false); }

Outcome A4() {
  Outcome outcome;
  std::string summary;
  for (ModelKind model : {ModelKind::kEqualTreatment, ModelKind::kTrulyAltruistic}) {
    HuntOptions options;
    options.model = model;
    options.n_max = 5;
    options.workers = std::max(1u, std::thread::hardware_concurrency());
    HuntReport report = HuntEmptyCore(options);
    if (report.total_games() != 1 + 2 + 8 + 64 + 1024) {
      outcome.Fail(std::string(ModelTag(model)) + " sweep scanned " +
                   std::to_string(report.total_games()) + " games");
    }
    for (const Counterexample& ce : report.counterexamples) {
      Game game = HuntGame(model, ce.n, ce.edge_mask);
      bool verified = VerifyEmptyCoreCertificate(game, ce.certificate);
      // Independent confirmation that no partition survives.
      oracle::OracleGame ref = oracle::FromGame(game);
      for (const auto& p : oracle::AllPartitions(ce.n)) {
        verified = verified && oracle::HasBlocker(ref, p);
      }
      outcome.notes.push_back("EMPTY CORE under " + std::string(ModelTag(model)) +
                              ": " + Describe(ce.n, ce.edge_mask) + ", certificate " +
                              (verified ? "verified" : "FAILED re-verification"));
      if (!verified) outcome.Fail("certificate failed re-verification");
    }
    if (!summary.empty()) summary += "; ";
    summary += std::string(ModelTag(model)) + ": " +
               std::to_string(report.total_games()) + " games, " +
               std::to_string(report.counterexamples.size()) + " empty cores";
  }
  if (outcome.pass) outcome.detail = summary;
  return outcome;
}

Outcome A5() {
  Outcome outcome;
  Coalition split = Coalition::Of({0, 1, 2, 3});
  Coalition grand = Coalition::Full(5);
  struct Expect {
    ModelKind model;
    Preference preference;
    Rational split, grand;
  };
  for (const Expect& e :
       {Expect{ModelKind::kTrulyAltruistic, Preference::kStrictlyPrefers, 46890, 34395},
        Expect{ModelKind::kFriendOriented, Preference::kStrictlyDispreferred, 15, 20}}) {
    Game game = MakeGame(testing::StoryGraph(), e.model);
    oracle::OracleGame ref = oracle::FromGame(game);
    Rational u_split = PlayerUtility(game, 0, split);
    Rational u_grand = PlayerUtility(game, 0, grand);
    Preference got = Compare(game, 0, split, grand);
    std::string tag(ModelTag(e.model));
    if (got != e.preference) {
      outcome.Fail(tag + ": compare gave " + std::string(PreferenceName(got)));
    }
    if (u_split != e.split || u_grand != e.grand) {
      outcome.Fail(tag + ": utilities " + u_split.ToString() + "/" + u_grand.ToString());
    }
    if (oracle::Utility(ref, 0, ToSet(split)) != e.split ||
        oracle::Utility(ref, 0, ToSet(grand)) != e.grand) {
      outcome.Fail(tag + ": reference utilities disagree");
    }
  }
  if (outcome.pass) {
    outcome.detail = "AL 46890 > 34395 (prefers), FO 15 < 20 (disprefers)";
  }
  return outcome;
}

Outcome A6() {
  Outcome outcome;
  std::mt19937_64 rng(6);
  int pairs = 0;
  int blocked = 0;
  for (int round = 0; round < 200; ++round) {
    for (ModelKind model : kAllModelKinds) {
      int n = 1 + (round % 6);
      Game game = testing::RandomGame(rng, n, model);
      Partition p = testing::RandomPartition(rng, n);
      ++pairs;
      oracle::OracleGame ref = oracle::FromGame(game);
      oracle::SetPartition sets = ToSets(p);
      auto witness = FindBlockingCoalition(game, p);
      if (witness.has_value() != oracle::HasBlocker(ref, sets)) {
        outcome.Fail(std::string(ModelTag(model)) + " game " + SerializeGame(game) +
                     " partition " + FormatPartition(game, p) + ": existence differs");
        continue;
      }
      if (witness) {
        ++blocked;
        if (!oracle::BlocksPartition(ref, sets, ToSet(*witness)) ||
            !Blocks(game, p, *witness)) {
          outcome.Fail("witness " + FormatCoalition(game, *witness) +
                       " does not re-verify");
        }
      }
    }
  }
  // Mixed-model games as well.
  for (int round = 0; round < 300; ++round) {
    int n = 1 + (round % 6);
    Game game = testing::RandomGame(rng, n);
    Partition p = testing::RandomPartition(rng, n);
    ++pairs;
    oracle::OracleGame ref = oracle::FromGame(game);
    auto witness = FindBlockingCoalition(game, p);
    if (witness.has_value() != oracle::HasBlocker(ref, ToSets(p))) {
      outcome.Fail("mixed game: existence differs");
    } else if (witness) {
      ++blocked;
      if (!oracle::BlocksPartition(ref, ToSets(p), ToSet(*witness))) {
        outcome.Fail("mixed game: witness does not re-verify");
      }
    }
  }
  if (outcome.pass) {
    outcome.detail = std::to_string(pairs) + " pairs agree (" +
                     std::to_string(blocked) + " blocked, witnesses re-verified)";
  }
  return outcome;
}

// Lexicographic comparison of (more friends, then fewer enemies) or the
// reverse priority.
int LexCompare(int f1, int e1, int f2, int e2, bool friends_first) {
  auto by_friends = f1 == f2 ? 0 : (f1 > f2 ? 1 : -1);
  auto by_enemies = e1 == e2 ? 0 : (e1 < e2 ? 1 : -1);
  if (friends_first) return by_friends != 0 ? by_friends : by_enemies;
  return by_enemies != 0 ? by_enemies : by_friends;
}

int Sign(Preference p) {
  return p == Preference::kStrictlyPrefers ? 1
         : p == Preference::kIndifferent   ? 0
                                           : -1;
}

std::uint64_t CheckLexicographic(const FriendshipGraph& g, Outcome& outcome) {
  const int n = g.num_players();
  Game fo = MakeGame(g, ModelKind::kFriendOriented);
  Game eo = MakeGame(g, ModelKind::kEnemyOriented);
  oracle::OracleGame ref = oracle::FromGame(fo);
  std::uint64_t comparisons = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t others = ((std::uint64_t{1} << n) - 1) & ~(std::uint64_t{1} << i);
    std::vector<Coalition> containing;
    for (std::uint64_t s = others;; s = (s - 1) & others) {
      containing.push_back(Coalition(s | (std::uint64_t{1} << i)));
      if (s == 0) break;
    }
    for (Coalition c : containing) {
      oracle::Set cs = ToSet(c);
      int f1 = oracle::CountFriends(ref, i, cs), e1 = oracle::CountEnemies(ref, i, cs);
      for (Coalition d : containing) {
        oracle::Set ds = ToSet(d);
        int f2 = oracle::CountFriends(ref, i, ds), e2 = oracle::CountEnemies(ref, i, ds);
        ++comparisons;
        if (Sign(Compare(fo, i, c, d)) != LexCompare(f1, e1, f2, e2, true) ||
            Sign(Compare(eo, i, c, d)) != LexCompare(f1, e1, f2, e2, false)) {
          outcome.Fail("player " + std::to_string(i) + " on " +
                       Describe(n, EdgeMaskOf(g)) + ": " + FormatCoalition(fo, c) +
                       " vs " + FormatCoalition(fo, d));
          return comparisons;
        }
      }
    }
  }
  return comparisons;
}

Outcome A7() {
  Outcome outcome;
  std::uint64_t games = 0, comparisons = 0;
  ForEachSweepGraph(4, {6}, 200, [&](const FriendshipGraph& g) {
    ++games;
    comparisons += CheckLexicographic(g, outcome);
  });
  if (outcome.pass) {
    outcome.detail = std::to_string(games) + " graphs, " + std::to_string(comparisons) +
                     " FO and EO comparisons match the lexicographic order";
  }
  return outcome;
}

Outcome A8() {
  Outcome outcome;
  std::uint64_t checked = 0;
  ForEachSweepGraph(4, {}, 0, [&](const FriendshipGraph& g) {
    const int n = g.num_players();
    Game sf = MakeGame(g, ModelKind::kSelfishFirst);
    Game al = MakeGame(g, ModelKind::kTrulyAltruistic);
    oracle::OracleGame ref = oracle::FromGame(sf);
    for (int i = 0; i < n; ++i) {
      for (std::uint64_t a = 1; a < (std::uint64_t{1} << n); ++a) {
        Coalition c(a);
        if (!c.contains(i)) continue;
        for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) {
          Coalition d(b);
          if (!d.contains(i)) continue;
          oracle::Set cs = ToSet(c), ds = ToSet(d);
          Rational fo_c = oracle::Fo(ref, i, cs), fo_d = oracle::Fo(ref, i, ds);
          Rational avg_c = oracle::Avg(oracle::FriendScores(ref, i, cs));
          Rational avg_d = oracle::Avg(oracle::FriendScores(ref, i, ds));
          if (fo_c > fo_d) {
            ++checked;
            if (Compare(sf, i, c, d) != Preference::kStrictlyPrefers) {
              outcome.Fail("SF: own FO does not dominate on " + Describe(n, EdgeMaskOf(g)));
            }
          }
          if (avg_c > avg_d) {
            ++checked;
            if (Compare(al, i, c, d) != Preference::kStrictlyPrefers) {
              outcome.Fail("AL: friend average does not dominate on " +
                           Describe(n, EdgeMaskOf(g)));
            }
          }
        }
      }
    }
  });
  if (outcome.pass) {
    outcome.detail = std::to_string(checked) + " strict primary-key orderings respected";
  }
  return outcome;
}

Outcome A9() {
  Outcome outcome;
  std::string counts;
  for (int n = 0; n <= 7; ++n) {
    PartitionStream stream(n);
    std::uint64_t k = 0;
    while (stream.Next()) ++k;
    if (k != oracle::BellNumber(n)) {
      outcome.Fail("n=" + std::to_string(n) + ": " + std::to_string(k) +
                   " partitions, Bell number is " + std::to_string(oracle::BellNumber(n)));
    }
    counts += (n ? "," : "") + std::to_string(k);
  }
  for (auto [n, total, connected] :
       {std::tuple{3, 8ull, 4ull}, std::tuple{4, 64ull, 38ull}}) {
    std::uint64_t all = 0, conn = 0;
    GraphStream a(n, false), c(n, true);
    while (a.Next()) ++all;
    while (c.Next()) ++conn;
    auto reference = oracle::CountLabeledGraphs(n);
    if (all != total || conn != connected || reference.first != total ||
        reference.second != connected) {
      outcome.Fail("graph counts at n=" + std::to_string(n) + ": " + std::to_string(all) +
                   "/" + std::to_string(conn));
    }
  }
  if (outcome.pass) {
    outcome.detail = "Bell " + counts + "; graphs n=3 8/4, n=4 64/38";
  }
  return outcome;
}

struct Scratch {
  std::filesystem::path dir = std::filesystem::temp_directory_path() /
                              ("hedonic_acceptance_" + std::to_string(::getpid()));
  Scratch() { std::filesystem::create_directories(dir); }
  ~Scratch() { std::filesystem::remove_all(dir); }
  std::string Write(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  }
};

Outcome A10() {
  Outcome outcome;
  Service service;
  int port = service.BindToAnyPort("127.0.0.1");
  if (port <= 0) {
    outcome.Fail("cannot bind a local port");
    return outcome;
  }
  std::thread server([&] { service.ListenAfterBind(); });
  service.WaitUntilReady();
  httplib::Client client("127.0.0.1", port);
  Scratch scratch;

  struct Input {
    std::string name, game, partition, notions;
  };
  std::vector<Input> inputs;
  for (const Fixture& fixture : BundledFixtures()) {
    Game game = ParseGame(fixture.text);
    const int n = game.num_players();
    for (const Partition& p : {Partition::Singletons(n), Partition::Grand(n)}) {
      inputs.push_back({std::string(fixture.name), std::string(fixture.text),
                        SerializePartition(game, p), ""});
    }
  }
  inputs[0].partition = SerializePartition(
      ParseGame(inputs[0].game), PartitionFromLabels(std::vector<int>{0, 0, 0, 0, 1}));
  std::mt19937_64 rng(10);
  const std::vector<std::string> subsets = {"", "core", "individual-rationality",
                                            "nash,individual-stability",
                                            "core,individual-rationality"};
  for (int k = 0; k < 50; ++k) {
    Game game = testing::RandomGame(rng, 1 + k % 7);
    inputs.push_back({"random " + std::to_string(k), SerializeGame(game),
                      SerializePartition(game, testing::RandomPartition(rng, game.num_players())),
                      subsets[k % subsets.size()]});
  }

  int compared = 0;
  for (const Input& input : inputs) {
    std::string game_path = scratch.Write("in.game", input.game);
    std::string partition_path = scratch.Write("in.partition", input.partition);
    std::vector<std::string> args = {"check",       "--game",   game_path,
                                     "--partition", partition_path, "--format", "json"};
    Json request = {{"game", Json::parse(input.game)},
                    {"partition", Json::parse(input.partition)}};
    if (!input.notions.empty()) {
      args.push_back("--notions");
      args.push_back(input.notions);
      Json names = Json::array();
      for (StabilityNotion notion : api::ParseNotionList(input.notions)) {
        names.push_back(NotionName(notion));
      }
      request["notions"] = names;
    }
    std::ostringstream out, err;
    int code = RunCli(args, out, err);
    auto response = client.Post("/api/certify", request.dump(), "application/json");
    if (!response || response->status != 200) {
      outcome.Fail(input.name + ": HTTP request failed");
      continue;
    }
    Json cli_doc = Json::parse(out.str());
    Json http_doc = Json::parse(response->body);
    if (out.str() != response->body + "\n" || cli_doc["verdicts"] != http_doc["verdicts"]) {
      outcome.Fail(input.name + ": CLI and HTTP bodies differ");
    }
    int expected_code = http_doc["all_stable"].get<bool>() ? kExitOk : kExitUnstable;
    if (code != expected_code) outcome.Fail(input.name + ": CLI exit code " + std::to_string(code));
    ++compared;
  }
  service.Stop();
  server.join();
  if (outcome.pass) {
    outcome.detail = std::to_string(compared) +
                     " inputs, CLI and HTTP responses byte-identical";
  }
  return outcome;
}

}  // namespace
}  // namespace hedonic

int main() {
  using Criterion = std::pair<const char*, hedonic::Outcome (*)()>;
  const std::vector<Criterion> criteria = {
      {"A1 FO core nonempty", hedonic::A1},
      {"A2 EO core nonempty, cliques", hedonic::A2},
      {"A3 SF core nonempty", hedonic::A3},
      {"A4 EQ/AL empty-core sweep", hedonic::A4},
      {"A5 story reversal", hedonic::A5},
      {"A6 blocking search vs reference", hedonic::A6},
      {"A7 FO/EO lexicographic order", hedonic::A7},
      {"A8 SF/AL tie-break dominance", hedonic::A8},
      {"A9 enumeration counts", hedonic::A9},
      {"A10 CLI/HTTP parity", hedonic::A10},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    auto start = std::chrono::steady_clock::now();
    hedonic::Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.Fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const std::string& note : outcome.notes) std::cout << "  !! " << note << "\n";
    std::printf("%s  %-34s %s (%.1fs)\n", outcome.pass ? "PASS" : "FAIL", name,
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria pass\n"
                              : "acceptance: " + std::to_string(failures) + " failing\n");
  return failures == 0 ? 0 : 1;
}
