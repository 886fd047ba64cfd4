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

#include "hedonic/partition_search.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "hedonic/errors.h"
#include "hedonic/stability.h"

namespace hedonic {

PartitionStream::PartitionStream(int n, int cap) : n_(n) {
  if (n < 0) throw InvalidInput("negative player count");
  if (n > cap) {
    throw CapExceeded("partition enumeration is capped at n = " +
                      std::to_string(cap) + "; requested n = " +
                      std::to_string(n));
  }
  labels_.assign(n, 0);
  prefix_max_.assign(n, 0);
}

bool PartitionStream::Advance() {
  // Rightmost position that can grow without breaking the growth rule.
  for (int i = n_ - 1; i >= 1; --i) {
    if (labels_[i] <= prefix_max_[i - 1]) {
      ++labels_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
      for (int j = i + 1; j < n_; ++j) {
        labels_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      return true;
    }
  }
  return false;
}

std::optional<Partition> PartitionStream::Next() {
  if (done_) return std::nullopt;
  if (started_ && !Advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  ++yielded_;
  return PartitionFromLabels(labels_);
}

int EdgeSlots(int n) { return n * (n - 1) / 2; }

std::pair<int, int> EdgeSlot(int n, int k) {
  for (int a = 0; a < n; ++a) {
    int row = n - 1 - a;
    if (k < row) return {a, a + 1 + k};
    k -= row;
  }
  throw InvalidInput("edge slot out of range");
}

FriendshipGraph GraphFromEdgeMask(int n, std::uint64_t edge_mask) {
  FriendshipGraph graph(n);
  int k = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b, ++k) {
      if ((edge_mask >> k) & 1) graph.AddEdge(a, b);
    }
  }
  return graph;
}

std::uint64_t EdgeMaskOf(const FriendshipGraph& graph) {
  const int n = graph.num_players();
  if (EdgeSlots(n) > 64) throw InvalidInput("graph too large for an edge mask");
  std::uint64_t mask = 0;
  int k = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b, ++k) {
      if (graph.adjacent(a, b)) mask |= std::uint64_t{1} << k;
    }
  }
  return mask;
}

GraphStream::GraphStream(int n, bool connected_only, std::uint64_t begin,
                         std::uint64_t end)
    : n_(n), connected_only_(connected_only), next_(begin) {
  if (n < 1) throw InvalidInput("graph sweeps need at least one player");
  if (n > kGraphSweepCap) {
    throw CapExceeded("graph sweeps are capped at n = " +
                      std::to_string(kGraphSweepCap) + "; requested n = " +
                      std::to_string(n));
  }
  end_ = end == 0 ? total_masks() : std::min(end, total_masks());
}

std::optional<FriendshipGraph> GraphStream::Next() {
  while (next_ < end_) {
    current_ = next_++;
    FriendshipGraph graph = GraphFromEdgeMask(n_, current_);
    if (!connected_only_ || graph.IsConnected()) return graph;
  }
  return std::nullopt;
}

UtilityTable::UtilityTable(const Game& game)
    : n_(game.num_players()),
      values_((std::size_t{1} << game.num_players()) * game.num_players()) {
  const std::uint64_t end = std::uint64_t{1} << n_;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    CoalitionScores scores(game, Coalition(mask));
    ForEachMember(Coalition(mask), [&](int i) {
      values_[mask * n_ + i] = scores.UtilityOf(i);
    });
  }
}

std::optional<Coalition> FindBlockingCoalitionInTable(
    const UtilityTable& table, const Partition& partition) {
  const int n = partition.num_players();
  std::vector<const Utility*> current(n);
  for (int i = 0; i < n; ++i) {
    current[i] = &table.at(partition.coalition_of(i), i);
  }
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    bool blocks = true;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      int i = std::countr_zero(m);
      if (!(table.at(Coalition(mask), i) > *current[i])) {
        blocks = false;
        break;
      }
    }
    if (blocks) return Coalition(mask);
  }
  return std::nullopt;
}

namespace {

void CheckCoreSize(const Game& game, const CoreOptions& options) {
  if (game.num_players() > options.cap) {
    throw CapExceeded("exhaustive core computation is capped at n = " +
                      std::to_string(options.cap) + "; the game has n = " +
                      std::to_string(game.num_players()));
  }
}

void CheckDeadline(const CoreOptions& options, std::uint64_t scanned) {
  if (options.deadline && (scanned & 63) == 0 &&
      std::chrono::steady_clock::now() > *options.deadline) {
    throw DeadlineExceeded("core computation exceeded its time budget after " +
                           std::to_string(scanned) + " partitions");
  }
}

}  // namespace

CoreResult ComputeCore(const Game& game, const CoreOptions& options) {
  CheckCoreSize(game, options);
  UtilityTable table(game);
  CoreResult result;
  PartitionStream stream(game.num_players(), options.cap);
  while (auto partition = stream.Next()) {
    CheckDeadline(options, result.partitions_scanned);
    ++result.partitions_scanned;
    if (FindBlockingCoalitionInTable(table, *partition)) {
      ++result.blocked;
    } else {
      result.core.push_back(std::move(*partition));
    }
  }
  result.exhaustive = true;
  return result;
}

std::optional<Partition> FindCorePartition(const Game& game,
                                           const CoreOptions& options) {
  CheckCoreSize(game, options);
  UtilityTable table(game);
  PartitionStream stream(game.num_players(), options.cap);
  std::uint64_t scanned = 0;
  while (auto partition = stream.Next()) {
    CheckDeadline(options, scanned++);
    if (!FindBlockingCoalitionInTable(table, *partition)) return partition;
  }
  return std::nullopt;
}

std::optional<EmptyCoreCertificate> CertifyEmptyCore(
    const Game& game, const CoreOptions& options) {
  CheckCoreSize(game, options);
  UtilityTable table(game);
  EmptyCoreCertificate certificate;
  PartitionStream stream(game.num_players(), options.cap);
  std::uint64_t scanned = 0;
  while (auto partition = stream.Next()) {
    CheckDeadline(options, scanned++);
    auto blocker = FindBlockingCoalitionInTable(table, *partition);
    if (!blocker) return std::nullopt;
    certificate.blocked_partitions.emplace_back(std::move(*partition),
                                                *blocker);
  }
  return certificate;
}

bool VerifyEmptyCoreCertificate(const Game& game,
                                const EmptyCoreCertificate& certificate) {
  const int n = game.num_players();
  std::uint64_t bell = 0;
  PartitionStream stream(n, kMaxPlayers);
  while (stream.Next()) ++bell;
  if (certificate.blocked_partitions.size() != bell) return false;

  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& [partition, blocker] : certificate.blocked_partitions) {
    if (partition.num_players() != n) return false;
    std::vector<std::uint64_t> key;
    for (Coalition block : partition.blocks()) key.push_back(block.mask());
    // Rejects malformed partitions.
    try {
      Canonicalize(n, partition.blocks());
    } catch (const InvalidInput&) {
      return false;
    }
    if (!seen.insert(key).second) return false;
    if (!Blocks(game, partition, blocker)) return false;
  }
  return true;
}

std::uint64_t HuntReport::total_games() const {
  std::uint64_t total = 0;
  for (std::uint64_t g : games_scanned) total += g;
  return total;
}

Game HuntGame(ModelKind model, int n, std::uint64_t edge_mask) {
  return MakeGame(GraphFromEdgeMask(n, edge_mask), model);
}

namespace {

struct RangeTask {
  int n = 0;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

struct RangeResult {
  bool done = false;
  std::uint64_t games = 0;
  std::vector<std::uint64_t> hits;
};

std::string FilterName(bool connected_only) {
  return connected_only ? "connected" : "all";
}

std::string CheckpointLine(const HuntOptions& options, const RangeTask& task,
                           const RangeResult& result) {
  std::ostringstream line;
  line << "model=" << ModelTag(options.model)
       << " filter=" << FilterName(options.connected_only) << " n=" << task.n
       << " begin=" << task.begin << " end=" << task.end
       << " games=" << result.games << " hits=";
  for (std::size_t k = 0; k < result.hits.size(); ++k) {
    line << (k ? "," : "") << result.hits[k];
  }
  return line.str();
}

// Completed ranges keyed by (n, begin).
std::map<std::pair<int, std::uint64_t>, std::pair<std::uint64_t, RangeResult>>
ReadCheckpoint(const HuntOptions& options) {
  std::map<std::pair<int, std::uint64_t>,
           std::pair<std::uint64_t, RangeResult>>
      completed;
  std::ifstream in(options.checkpoint_path);
  if (!in) return completed;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::map<std::string, std::string> fields;
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      auto eq = token.find('=');
      if (eq == std::string::npos) {
        throw InvalidInput("checkpoint line " + std::to_string(line_no) +
                           ": malformed field \"" + token + "\"");
      }
      fields[token.substr(0, eq)] = token.substr(eq + 1);
    }
    for (const char* key : {"model", "filter", "n", "begin", "end", "games"}) {
      if (!fields.count(key)) {
        throw InvalidInput("checkpoint line " + std::to_string(line_no) +
                           ": missing field " + key);
      }
    }
    if (fields["model"] != ModelTag(options.model) ||
        fields["filter"] != FilterName(options.connected_only)) {
      throw InvalidInput("checkpoint " + options.checkpoint_path +
                         " belongs to a different sweep (model=" +
                         fields["model"] + " filter=" + fields["filter"] + ")");
    }
    try {
      int n = std::stoi(fields["n"]);
      std::uint64_t begin = std::stoull(fields["begin"]);
      RangeResult result;
      result.done = true;
      result.games = std::stoull(fields["games"]);
      std::istringstream hits(fields["hits"]);
      std::string hit;
      while (std::getline(hits, hit, ',')) {
        if (!hit.empty()) result.hits.push_back(std::stoull(hit));
      }
      completed[{n, begin}] = {std::stoull(fields["end"]), std::move(result)};
    } catch (const std::logic_error&) {
      throw InvalidInput("checkpoint line " + std::to_string(line_no) +
                         ": bad number");
    }
  }
  return completed;
}

RangeResult ScanGraphRange(const HuntOptions& options, const RangeTask& task) {
  RangeResult result;
  GraphStream graphs(task.n, options.connected_only, task.begin, task.end);
  while (graphs.Next()) {
    ++result.games;
    Game game = HuntGame(options.model, task.n, graphs.edge_mask());
    if (!FindCorePartition(game)) result.hits.push_back(graphs.edge_mask());
  }
  result.done = true;
  return result;
}

}  // namespace

HuntReport HuntEmptyCore(const HuntOptions& options) {
  if (options.n_max < 1) throw InvalidInput("n_max must be at least 1");
  if (options.n_max > kGraphSweepCap) {
    throw CapExceeded("empty-core hunts are capped at n = " +
                      std::to_string(kGraphSweepCap) + "; requested n = " +
                      std::to_string(options.n_max));
  }
  const std::uint64_t range_size = std::max<std::uint64_t>(1, options.range_size);

  std::vector<RangeTask> tasks;
  for (int n = 1; n <= options.n_max; ++n) {
    const std::uint64_t total = std::uint64_t{1} << EdgeSlots(n);
    for (std::uint64_t begin = 0; begin < total; begin += range_size) {
      tasks.push_back({n, begin, std::min(total, begin + range_size)});
    }
  }
  std::vector<RangeResult> results(tasks.size());

  if (!options.checkpoint_path.empty()) {
    auto completed = ReadCheckpoint(options);
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      auto it = completed.find({tasks[t].n, tasks[t].begin});
      if (it != completed.end() && it->second.first == tasks[t].end) {
        results[t] = it->second.second;
      }
    }
  }

  std::mutex checkpoint_mu;
  std::ofstream checkpoint;
  if (!options.checkpoint_path.empty()) {
    checkpoint.open(options.checkpoint_path, std::ios::app);
    if (!checkpoint) {
      throw InvalidInput("cannot open checkpoint " + options.checkpoint_path);
    }
  }

  std::atomic<std::size_t> next_task{0};
  auto work = [&] {
    for (std::size_t t = next_task.fetch_add(1); t < tasks.size();
         t = next_task.fetch_add(1)) {
      if (results[t].done) continue;
      RangeResult result = ScanGraphRange(options, tasks[t]);
      if (checkpoint.is_open()) {
        std::lock_guard<std::mutex> lock(checkpoint_mu);
        checkpoint << CheckpointLine(options, tasks[t], result) << '\n'
                   << std::flush;
      }
      results[t] = std::move(result);
      if (options.progress) {
        options.progress(tasks[t].n, tasks[t].begin, tasks[t].end);
      }
    }
  };
  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }

  HuntReport report;
  report.model = options.model;
  report.n_max = options.n_max;
  report.connected_only = options.connected_only;
  report.games_scanned.assign(options.n_max + 1, 0);
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    report.games_scanned[tasks[t].n] += results[t].games;
    for (std::uint64_t mask : results[t].hits) {
      Game game = HuntGame(options.model, tasks[t].n, mask);
      auto certificate = CertifyEmptyCore(game);
      if (!certificate) {
        throw std::logic_error("checkpointed counterexample n=" +
                               std::to_string(tasks[t].n) + " mask=" +
                               std::to_string(mask) +
                               " has a core-stable partition");
      }
      report.counterexamples.push_back(
          {tasks[t].n, mask, std::move(*certificate)});
    }
  }
  return report;
}

}  // namespace hedonic
