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

#include "hedonic/stability.h"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>

#include "hedonic/errors.h"
#include "hedonic/preferences.h"

namespace hedonic {
namespace {

void RequireMatchingPartition(const Game& game, const Partition& partition) {
  if (partition.num_players() != game.num_players()) {
    throw InvalidInput("partition covers " +
                       std::to_string(partition.num_players()) +
                       " players but the game has " +
                       std::to_string(game.num_players()));
  }
}

std::vector<Utility> CurrentUtilities(const Game& game,
                                      const Partition& partition) {
  std::vector<Utility> current(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    current[i] = PlayerUtility(game, i, partition.coalition_of(i));
  }
  return current;
}

bool ImprovesAll(const Game& game, Coalition c,
                 const std::vector<Utility>& current) {
  CoalitionScores scores(game, c);
  for (std::uint64_t m = c.mask(); m != 0; m &= m - 1) {
    int i = std::countr_zero(m);
    if (!(scores.UtilityOf(i) > current[i])) return false;
  }
  return true;
}

// Masks in [begin, end), ascending; returns the first blocker or 0.
std::uint64_t ScanRange(const Game& game, const std::vector<Utility>& current,
                        std::uint64_t begin, std::uint64_t end) {
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    if (ImprovesAll(game, Coalition(mask), current)) return mask;
  }
  return 0;
}

constexpr std::uint64_t kParallelBlock = 1 << 12;

}  // namespace

std::string_view NotionName(StabilityNotion notion) {
  switch (notion) {
    case StabilityNotion::kCore: return "core";
    case StabilityNotion::kIndividualRationality:
      return "individual-rationality";
    case StabilityNotion::kNash: return "nash";
    case StabilityNotion::kIndividualStability: return "individual-stability";
  }
  return "?";
}

std::optional<StabilityNotion> ParseNotion(std::string_view name) {
  for (StabilityNotion notion : kAllNotions) {
    if (NotionName(notion) == name) return notion;
  }
  return std::nullopt;
}

bool IsPrimaryNotion(StabilityNotion notion) {
  return notion == StabilityNotion::kCore;
}

bool Blocks(const Game& game, const Partition& partition, Coalition c) {
  if (c.empty()) return false;
  for (int i : c.Members()) {
    if (Compare(game, i, c, partition.coalition_of(i)) !=
        Preference::kStrictlyPrefers) {
      return false;
    }
  }
  return true;
}

std::optional<Coalition> FindBlockingCoalition(const Game& game,
                                               const Partition& partition,
                                               const SearchOptions& options) {
  RequireMatchingPartition(game, partition);
  const int n = game.num_players();
  if (n > kMaxBlockingSearchPlayers) {
    throw CapExceeded("blocking-coalition search is limited to " +
                      std::to_string(kMaxBlockingSearchPlayers) +
                      " players; the game has " + std::to_string(n));
  }
  const std::vector<Utility> current = CurrentUtilities(game, partition);
  const std::uint64_t end = std::uint64_t{1} << n;

  const int workers = std::max(1, options.workers);
  if (workers == 1 || end <= kParallelBlock) {
    std::uint64_t found = ScanRange(game, current, 1, end);
    if (found == 0) return std::nullopt;
    return Coalition(found);
  }

  // Workers take interleaved blocks and skip any block starting above the
  // best blocker found so far. The block holding the global minimum is
  // always scanned, so the result is the same as a serial sweep.
  std::atomic<std::uint64_t> best{end};
  std::atomic<std::uint64_t> next_block{0};
  auto work = [&] {
    for (;;) {
      std::uint64_t block = next_block.fetch_add(1);
      std::uint64_t begin = std::max<std::uint64_t>(1, block * kParallelBlock);
      if (block * kParallelBlock >= end || begin >= best.load()) return;
      std::uint64_t stop = std::min(end, (block + 1) * kParallelBlock);
      std::uint64_t found = ScanRange(game, current, begin, stop);
      if (found != 0) {
        std::uint64_t prev = best.load();
        while (found < prev && !best.compare_exchange_weak(prev, found)) {
        }
      }
    }
  };
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) threads.emplace_back(work);
  for (auto& t : threads) t.join();
  if (best.load() == end) return std::nullopt;
  return Coalition(best.load());
}

bool IsCoreStable(const Game& game, const Partition& partition,
                  const SearchOptions& options) {
  return !FindBlockingCoalition(game, partition, options).has_value();
}

std::optional<int> FindIrrationalPlayer(const Game& game,
                                        const Partition& partition) {
  RequireMatchingPartition(game, partition);
  for (int i = 0; i < game.num_players(); ++i) {
    if (Compare(game, i, Coalition::Singleton(i), partition.coalition_of(i)) ==
        Preference::kStrictlyPrefers) {
      return i;
    }
  }
  return std::nullopt;
}

bool IsDeviation(const Game& game, const Partition& partition,
                 const Deviation& d) {
  const Coalition here = partition.coalition_of(d.player);
  if (d.target.contains(d.player)) return false;
  if (!d.target.empty() &&
      std::find(partition.blocks().begin(), partition.blocks().end(),
                d.target) == partition.blocks().end()) {
    return false;
  }
  return Compare(game, d.player, d.target.With(d.player), here) ==
         Preference::kStrictlyPrefers;
}

bool IsWelcomedDeviation(const Game& game, const Partition& partition,
                         const Deviation& d) {
  if (!IsDeviation(game, partition, d)) return false;
  const Coalition joined = d.target.With(d.player);
  for (int j : d.target.Members()) {
    if (Compare(game, j, joined, d.target) ==
        Preference::kStrictlyDispreferred) {
      return false;
    }
  }
  return true;
}

namespace {

template <typename Admissible>
std::optional<Deviation> FindDeviation(const Game& game,
                                       const Partition& partition,
                                       Admissible admissible) {
  RequireMatchingPartition(game, partition);
  std::vector<Coalition> targets = partition.blocks();
  targets.push_back(Coalition());
  std::sort(targets.begin(), targets.end());
  for (int i = 0; i < game.num_players(); ++i) {
    for (Coalition target : targets) {
      if (target.contains(i)) continue;
      Deviation d{i, target};
      if (admissible(d)) return d;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Deviation> FindNashDeviation(const Game& game,
                                           const Partition& partition) {
  return FindDeviation(game, partition, [&](const Deviation& d) {
    return IsDeviation(game, partition, d);
  });
}

std::optional<Deviation> FindIndividualDeviation(const Game& game,
                                                 const Partition& partition) {
  return FindDeviation(game, partition, [&](const Deviation& d) {
    return IsWelcomedDeviation(game, partition, d);
  });
}

bool StabilityReport::all_stable() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.stable(); });
}

StabilityReport Certify(const Game& game, const Partition& partition,
                        std::span<const StabilityNotion> notions,
                        const SearchOptions& options) {
  if (notions.empty()) throw InvalidInput("no stability notions requested");
  RequireMatchingPartition(game, partition);
  StabilityReport report;
  for (StabilityNotion notion : notions) {
    Verdict verdict{notion, std::monostate{}};
    bool verified = true;
    switch (notion) {
      case StabilityNotion::kCore:
        if (auto c = FindBlockingCoalition(game, partition, options)) {
          verdict.witness = *c;
          verified = Blocks(game, partition, *c);
        }
        break;
      case StabilityNotion::kIndividualRationality:
        if (auto i = FindIrrationalPlayer(game, partition)) {
          verdict.witness = PlayerWitness{*i};
          verified = Blocks(game, partition, Coalition::Singleton(*i));
        }
        break;
      case StabilityNotion::kNash:
        if (auto d = FindNashDeviation(game, partition)) {
          verdict.witness = *d;
          verified = IsDeviation(game, partition, *d);
        }
        break;
      case StabilityNotion::kIndividualStability:
        if (auto d = FindIndividualDeviation(game, partition)) {
          verdict.witness = *d;
          verified = IsWelcomedDeviation(game, partition, *d);
        }
        break;
    }
    if (!verified) {
      throw std::logic_error("stability witness for " +
                             std::string(NotionName(notion)) +
                             " failed re-verification");
    }
    report.verdicts.push_back(verdict);
  }
  return report;
}

}  // namespace hedonic
