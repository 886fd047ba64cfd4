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

#ifndef HEDONIC_PARTITION_SEARCH_H_
#define HEDONIC_PARTITION_SEARCH_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hedonic/game.h"
#include "hedonic/preferences.h"

namespace hedonic {

// Bell(12) is about 4.2 million partitions.
inline constexpr int kDefaultPartitionCap = 12;
// 2^21 labeled graphs at n = 7.
inline constexpr int kGraphSweepCap = 7;

// All set partitions of {0..n-1} in restricted-growth-string order. Each
// yielded partition is canonical. n = 0 yields the single empty partition.
class PartitionStream {
 public:
  // Throws CapExceeded if n > cap, InvalidInput if n < 0.
  explicit PartitionStream(int n, int cap = kDefaultPartitionCap);

  std::optional<Partition> Next();
  // Block label of every player in the partition last returned by Next.
  const std::vector<int>& labels() const { return labels_; }
  std::uint64_t yielded() const { return yielded_; }

 private:
  bool Advance();

  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> labels_;
  // prefix_max_[i] = max(labels_[0..i]).
  std::vector<int> prefix_max_;
  std::uint64_t yielded_ = 0;
};

// Number of vertex pairs, i.e. bits in an edge mask.
int EdgeSlots(int n);
// Bit k of an edge mask is the k-th pair (a, b), a < b, in lexicographic
// order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
std::pair<int, int> EdgeSlot(int n, int k);
FriendshipGraph GraphFromEdgeMask(int n, std::uint64_t edge_mask);
std::uint64_t EdgeMaskOf(const FriendshipGraph& graph);

// Labeled graphs on n vertices in edge-mask order over [begin, end).
class GraphStream {
 public:
  // end = 0 means "through the last mask". Throws CapExceeded if n exceeds
  // kGraphSweepCap, InvalidInput if n < 1.
  GraphStream(int n, bool connected_only, std::uint64_t begin = 0,
              std::uint64_t end = 0);

  std::optional<FriendshipGraph> Next();
  // Edge mask of the graph last returned by Next.
  std::uint64_t edge_mask() const { return current_; }
  std::uint64_t total_masks() const { return std::uint64_t{1} << EdgeSlots(n_); }

 private:
  int n_;
  bool connected_only_;
  std::uint64_t next_;
  std::uint64_t end_;
  std::uint64_t current_ = 0;
};

// Table of u_i(C) for every nonempty C and member i; 2^n · n entries.
class UtilityTable {
 public:
  explicit UtilityTable(const Game& game);

  const Utility& at(Coalition c, int i) const {
    return values_[c.mask() * n_ + i];
  }

 private:
  int n_;
  std::vector<Utility> values_;
};

struct CoreOptions {
  int cap = kDefaultPartitionCap;
  // Abort with DeadlineExceeded once passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct CoreResult {
  std::vector<Partition> core;
  bool exhaustive = false;
  std::uint64_t partitions_scanned = 0;
  // Partitions rejected because a blocking coalition was found.
  std::uint64_t blocked = 0;
};

CoreResult ComputeCore(const Game& game, const CoreOptions& options = {});

// First core-stable partition in stream order, or nullopt if the core is
// empty.
std::optional<Partition> FindCorePartition(const Game& game,
                                           const CoreOptions& options = {});

// Lowest-bitmask blocker of partition from a precomputed table; matches
// FindBlockingCoalition.
std::optional<Coalition> FindBlockingCoalitionInTable(
    const UtilityTable& table, const Partition& partition);

// Proof that a game has an empty core: a blocker for every partition.
struct EmptyCoreCertificate {
  std::vector<std::pair<Partition, Coalition>> blocked_partitions;
};

// Builds the certificate, or nullopt if some partition is core stable.
std::optional<EmptyCoreCertificate> CertifyEmptyCore(
    const Game& game, const CoreOptions& options = {});

// Checks a certificate without the search code: partitions must be valid,
// pairwise distinct and Bell(n) in number (counted by PartitionStream), and
// every listed coalition must block its partition under Compare.
bool VerifyEmptyCoreCertificate(const Game& game,
                                const EmptyCoreCertificate& certificate);

struct Counterexample {
  int n = 0;
  std::uint64_t edge_mask = 0;
  EmptyCoreCertificate certificate;
};

struct HuntOptions {
  ModelKind model = ModelKind::kFriendOriented;
  int n_max = 4;
  bool connected_only = false;
  int workers = 1;
  // Edge masks per checkpointed range.
  std::uint64_t range_size = 1024;
  // Empty disables checkpointing. Completed ranges already recorded in the
  // file are not rescanned.
  std::string checkpoint_path;
  // Called after each completed range; must be thread-safe.
  std::function<void(int n, std::uint64_t begin, std::uint64_t end)> progress;
};

struct HuntReport {
  ModelKind model = ModelKind::kFriendOriented;
  int n_max = 0;
  bool connected_only = false;
  // games_scanned[n] for n in 1..n_max; index 0 unused.
  std::vector<std::uint64_t> games_scanned;
  // Sorted by (n, edge_mask).
  std::vector<Counterexample> counterexamples;

  std::uint64_t total_games() const;
};

// Homogeneous games under options.model on every labeled graph with
// 1..n_max players (connected graphs only if requested); decides core
// emptiness exhaustively. Fractional games use adjacency valuations with
// mean aggregation. The report does not depend on worker count or on
// resumption from a checkpoint. Throws CapExceeded if n_max exceeds
// kGraphSweepCap, InvalidInput on a checkpoint for a different sweep.
HuntReport HuntEmptyCore(const HuntOptions& options);

// The game a sweep builds for one graph.
Game HuntGame(ModelKind model, int n, std::uint64_t edge_mask);

}  // namespace hedonic

#endif  // HEDONIC_PARTITION_SEARCH_H_
