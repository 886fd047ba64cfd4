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

#ifndef HEDONIC_STABILITY_H_
#define HEDONIC_STABILITY_H_

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "hedonic/game.h"

namespace hedonic {

// Blocking search sweeps 2^n − 1 subsets; refuse larger games.
inline constexpr int kMaxBlockingSearchPlayers = 24;

// Core is the notion defined by blocking coalitions. The other three are
// the usual auxiliary notions and are reported as such.
enum class StabilityNotion {
  kCore,
  kIndividualRationality,
  kNash,
  kIndividualStability,
};

inline constexpr StabilityNotion kAllNotions[] = {
    StabilityNotion::kCore,
    StabilityNotion::kIndividualRationality,
    StabilityNotion::kNash,
    StabilityNotion::kIndividualStability,
};

// "core", "individual-rationality", "nash", "individual-stability".
std::string_view NotionName(StabilityNotion notion);
std::optional<StabilityNotion> ParseNotion(std::string_view name);
// False for the auxiliary notions.
bool IsPrimaryNotion(StabilityNotion notion);

struct SearchOptions {
  // Worker threads for the subset sweep. The result never depends on it.
  int workers = 1;
};

// True iff every member of c strictly prefers c to its current block.
// Checked with Compare, independent of the search code.
bool Blocks(const Game& game, const Partition& partition, Coalition c);

// Lowest-bitmask nonempty coalition that blocks the partition, if any.
// Throws CapExceeded for games above kMaxBlockingSearchPlayers and
// InvalidInput if the partition is over a different number of players.
std::optional<Coalition> FindBlockingCoalition(const Game& game,
                                               const Partition& partition,
                                               const SearchOptions& options =
                                                   {});

bool IsCoreStable(const Game& game, const Partition& partition,
                  const SearchOptions& options = {});

// Player i moving from Γ(i) into target (an existing block, or the empty
// coalition for going alone).
struct Deviation {
  int player = 0;
  Coalition target;

  friend bool operator==(const Deviation&, const Deviation&) = default;
};

// Least-index player who strictly prefers being alone, if any.
std::optional<int> FindIrrationalPlayer(const Game& game,
                                        const Partition& partition);

// Least (player, target bitmask) deviation with target ∪ {i} ≻_i Γ(i).
std::optional<Deviation> FindNashDeviation(const Game& game,
                                           const Partition& partition);

// As FindNashDeviation, but every member j of the target must also weakly
// welcome the newcomer: target ∪ {i} ≽_j target.
std::optional<Deviation> FindIndividualDeviation(const Game& game,
                                                 const Partition& partition);

bool IsDeviation(const Game& game, const Partition& partition,
                 const Deviation& d);
bool IsWelcomedDeviation(const Game& game, const Partition& partition,
                         const Deviation& d);

struct PlayerWitness {
  int player = 0;
  friend bool operator==(const PlayerWitness&, const PlayerWitness&) = default;
};

using Witness = std::variant<std::monostate, Coalition, PlayerWitness,
                             Deviation>;

struct Verdict {
  StabilityNotion notion;
  // monostate iff stable.
  Witness witness;

  bool stable() const { return std::holds_alternative<std::monostate>(witness); }
};

struct StabilityReport {
  std::vector<Verdict> verdicts;

  bool all_stable() const;
};

// One verdict per requested notion, in request order. Every witness is
// re-verified before it is returned; a failure there is a logic_error.
// Throws InvalidInput if notions is empty.
StabilityReport Certify(const Game& game, const Partition& partition,
                        std::span<const StabilityNotion> notions,
                        const SearchOptions& options = {});

}  // namespace hedonic

#endif  // HEDONIC_STABILITY_H_
