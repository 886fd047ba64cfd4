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

#include "hedonic/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "hedonic/api.h"
#include "hedonic/errors.h"
#include "hedonic/service.h"

namespace hedonic {
namespace {

struct Flags {
  std::string game_path;
  std::string partition_path;
  std::string notions;
  std::string model;
  std::string format = "text";
  int max_n = 4;
  bool connected_only = false;
  std::string checkpoint;
  std::string out_path;
  int workers = 1;
  std::uint64_t range_size = 1024;
  std::string host = "127.0.0.1";
  int port = 8080;
  int core_budget_ms = 10000;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

ModelKind RequireModelTag(const std::string& tag) {
  auto kind = ParseModelTag(tag);
  if (!kind) {
    throw InvalidInput("unknown model \"" + tag +
                       "\" (expected FO, EO, FR, SF, EQ or AL)");
  }
  return *kind;
}

Game LoadGame(const Flags& flags) {
  Game game = [&] {
    try {
      return ParseGame(ReadFile(flags.game_path));
    } catch (const InvalidInput& e) {
      throw InvalidInput(flags.game_path + ": " + e.what());
    }
  }();
  if (!flags.model.empty()) {
    game = WithHomogeneousModel(game, RequireModelTag(flags.model));
  }
  return game;
}

Partition LoadPartition(const Game& game, const Flags& flags) {
  try {
    return ParsePartition(game, ReadFile(flags.partition_path));
  } catch (const InvalidInput& e) {
    throw InvalidInput(flags.partition_path + ": " + e.what());
  }
}

std::string Labels(const Json& members) {
  std::string out = "{";
  for (std::size_t k = 0; k < members.size(); ++k) {
    out += (k ? "," : "") + members[k].get<std::string>();
  }
  return out + "}";
}

std::string Blocks(const Json& blocks) {
  std::string out = "{";
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    out += (k ? "," : "") + Labels(blocks[k]);
  }
  return out + "}";
}

void PrintNotes(const Json& doc, std::ostream& out) {
  for (const Json& note : doc["notes"]) {
    out << "note: " << note.get<std::string>() << "\n";
  }
}

int Eval(const Flags& flags, std::ostream& out) {
  Game game = LoadGame(flags);
  Json doc = api::Evaluate(game, LoadPartition(game, flags));
  if (flags.format == "json") {
    out << doc.dump() << "\n";
    return kExitOk;
  }
  std::size_t width = 6;
  for (const Json& row : doc["rows"]) {
    width = std::max(width, row["player"].get<std::string>().size());
  }
  out << std::left << std::setw(width + 2) << "player" << std::setw(7)
      << "model" << std::setw(16) << "utility"
      << "coalition\n";
  for (const Json& row : doc["rows"]) {
    out << std::setw(width + 2) << row["player"].get<std::string>()
        << std::setw(7) << row["model"].get<std::string>() << std::setw(16)
        << row["utility"].get<std::string>() << Labels(row["coalition"])
        << "\n";
  }
  PrintNotes(doc, out);
  return kExitOk;
}

std::string DescribeWitness(const Json& witness) {
  if (witness.is_null()) return "";
  const std::string type = witness["type"].get<std::string>();
  if (type == "blocking-coalition") {
    return "blocking coalition " + Labels(witness["coalition"]);
  }
  if (type == "player") {
    return "player " + witness["player"].get<std::string>() +
           " prefers to be alone";
  }
  return "player " + witness["player"].get<std::string>() + " moves to " +
         Labels(witness["target"]);
}

int Check(const Flags& flags, std::ostream& out) {
  Game game = LoadGame(flags);
  Partition partition = LoadPartition(game, flags);
  auto notions = api::ParseNotionList(flags.notions);
  api::Options options;
  options.search_workers = flags.workers;
  Json doc = api::Certify(game, partition, notions, options);
  const int code = doc["all_stable"].get<bool>() ? kExitOk : kExitUnstable;
  if (flags.format == "json") {
    out << doc.dump() << "\n";
    return code;
  }
  out << "partition " << Blocks(doc["partition"]) << "\n";
  for (const Json& v : doc["verdicts"]) {
    std::ostringstream line;
    line << std::left << std::setw(24) << v["notion"].get<std::string>()
         << std::setw(10) << (v["stable"].get<bool>() ? "stable" : "UNSTABLE");
    if (v["kind"] == "auxiliary") line << "(auxiliary) ";
    line << DescribeWitness(v["witness"]);
    std::string text = line.str();
    text.erase(text.find_last_not_of(' ') + 1);
    out << text << "\n";
  }
  PrintNotes(doc, out);
  out << "result: " << (code == kExitOk ? "stable" : "unstable") << "\n";
  return code;
}

int Core(const Flags& flags, std::ostream& out) {
  Game game = LoadGame(flags);
  api::Options options;
  options.core_budget = std::chrono::milliseconds(flags.core_budget_ms);
  Json doc = api::Core(game, options);
  if (flags.format == "json") {
    out << doc.dump() << "\n";
    return kExitOk;
  }
  for (const Json& p : doc["core"]) out << Blocks(p) << "\n";
  out << "core: " << doc["core_size"] << " of " << doc["partitions_scanned"]
      << " partitions (" << doc["blocked"] << " blocked, exhaustive)\n";
  PrintNotes(doc, out);
  return kExitOk;
}

int Hunt(const Flags& flags, std::ostream& out, std::ostream& err) {
  HuntOptions options;
  options.model = RequireModelTag(flags.model.empty() ? "" : flags.model);
  options.n_max = flags.max_n;
  options.connected_only = flags.connected_only;
  options.workers = flags.workers;
  options.range_size = flags.range_size;
  options.checkpoint_path = flags.checkpoint;
  HuntReport report = HuntEmptyCore(options);

  std::string out_path = flags.out_path;
  if (out_path.empty()) {
    out_path = "hunt-" + std::string(ModelTag(options.model)) + "-n" +
               std::to_string(options.n_max) +
               (options.connected_only ? "-connected" : "") + ".json";
  }
  Json doc = HuntReportToJson(report);
  {
    std::ofstream file(out_path);
    if (!file) throw InvalidInput("cannot write " + out_path);
    file << doc.dump(2) << "\n";
  }
  // One standalone certificate per empty-core game.
  std::filesystem::path stem(out_path);
  stem.replace_extension();
  for (const Counterexample& ce : report.counterexamples) {
    std::string path = stem.string() + ".empty-core-n" + std::to_string(ce.n) +
                       "-" + std::to_string(ce.edge_mask) + ".json";
    std::ofstream file(path);
    if (!file) throw InvalidInput("cannot write " + path);
    file << CounterexampleToJson(options.model, ce).dump(2) << "\n";
    err << "EMPTY CORE: n=" << ce.n << " edge mask " << ce.edge_mask
        << ", certificate " << path << "\n";
  }

  out << "model " << ModelTag(options.model) << ", n <= " << options.n_max
      << ", " << (options.connected_only ? "connected" : "all")
      << " labeled graphs\n";
  for (int n = 1; n <= options.n_max; ++n) {
    out << "  n=" << n << ": " << report.games_scanned[n] << " games\n";
  }
  out << "games scanned: " << report.total_games()
      << "; empty cores found: " << report.counterexamples.size() << "\n"
      << "report: " << out_path << "\n";
  return kExitOk;
}

int Serve(const Flags& flags, std::ostream& out, std::ostream& err) {
  api::Options options;
  options.core_budget = std::chrono::milliseconds(flags.core_budget_ms);
  options.search_workers = flags.workers;
  Service service(options);
  out << "serving on http://" << flags.host << ":" << flags.port << "\n"
      << std::flush;
  if (!service.Listen(flags.host, flags.port)) {
    err << "cannot listen on " << flags.host << ":" << flags.port << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Hedonic games on friendship graphs: utilities, stability, "
               "cores and empty-core hunts.",
               "hedonic"};
  app.require_subcommand(1);
  Flags flags;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_model = [&](CLI::App* cmd, const char* help) {
    return cmd->add_option("--model", flags.model, help);
  };

  auto* eval = app.add_subcommand("eval", "Utility of every player");
  eval->add_option("--game", flags.game_path, "Game document")->required();
  eval->add_option("--partition", flags.partition_path, "Partition document")
      ->required();
  add_model(eval, "Override every player's model (FO, EO, FR, SF, EQ, AL)");
  add_format(eval);

  auto* check = app.add_subcommand("check", "Stability of a partition");
  check->add_option("--game", flags.game_path, "Game document")->required();
  check->add_option("--partition", flags.partition_path, "Partition document")
      ->required();
  check->add_option("--notions", flags.notions,
                    "Comma-separated: core, individual-rationality, nash, "
                    "individual-stability (default: all)");
  add_model(check, "Override every player's model");
  check->add_option("--workers", flags.workers, "Threads for the subset sweep");
  add_format(check);

  auto* core = app.add_subcommand("core", "All core-stable partitions");
  core->add_option("--game", flags.game_path, "Game document")->required();
  add_model(core, "Override every player's model");
  core->add_option("--budget-ms", flags.core_budget_ms, "Time budget");
  add_format(core);

  auto* hunt = app.add_subcommand("hunt", "Search small graphs for empty cores");
  add_model(hunt, "Model for every player")->required();
  hunt->add_option("--max-n", flags.max_n, "Largest player count")
      ->check(CLI::Range(1, kGraphSweepCap));
  hunt->add_flag("--connected-only", flags.connected_only,
                 "Only connected friendship graphs");
  hunt->add_option("--checkpoint", flags.checkpoint,
                   "Resumable progress file");
  hunt->add_option("--out", flags.out_path, "Report file");
  hunt->add_option("--workers", flags.workers, "Worker threads");
  hunt->add_option("--range-size", flags.range_size,
                   "Edge masks per checkpointed range");

  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--port", flags.port, "TCP port");
  serve->add_option("--host", flags.host, "Bind address");
  serve->add_option("--budget-ms", flags.core_budget_ms,
                    "Time budget per core request");
  serve->add_option("--workers", flags.workers, "Threads per blocking search");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*eval) return Eval(flags, out);
    if (*check) return Check(flags, out);
    if (*core) return Core(flags, out);
    if (*hunt) return Hunt(flags, out, err);
    if (*serve) return Serve(flags, out, err);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
  } catch (const CapExceeded& e) {
    err << "refused: " << e.what() << "\n";
  } catch (const DeadlineExceeded& e) {
    err << "refused: " << e.what() << "\n";
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace hedonic
