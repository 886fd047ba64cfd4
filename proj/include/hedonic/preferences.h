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

#ifndef HEDONIC_PREFERENCES_H_
#define HEDONIC_PREFERENCES_H_

#include <array>
#include <cstdint>
#include <string_view>

#include "hedonic/game.h"
#include "hedonic/rational.h"

namespace hedonic {

// Utilities are exact; C ≽_i D iff u_i(C) >= u_i(D).
using Utility = Rational;

enum class Preference {
  kStrictlyPrefers,
  kIndifferent,
  kStrictlyDispreferred,
};

std::string_view PreferenceName(Preference p);

// n·friends − enemies and friends − n·enemies, where n is the size of the
// whole game.
constexpr std::int64_t FriendOrientedScore(std::int64_t n,
                                           std::int64_t friends,
                                           std::int64_t enemies) {
  return n * friends - enemies;
}
constexpr std::int64_t EnemyOrientedScore(std::int64_t n,
                                          std::int64_t friends,
                                          std::int64_t enemies) {
  return friends - n * enemies;
}

// n^5, the weight separating the primary and tie-breaking terms of the
// selfish-first and truly altruistic utilities.
constexpr std::int64_t AltruismWeight(std::int64_t n) {
  return n * n * n * n * n;
}

// Model-specific utilities of player i for coalition c. All of them throw
// InvalidInput unless c contains i. For the selfish-first and truly
// altruistic models the friend average over an empty set is taken as 0.
Utility UtilityFriendOriented(const Game& game, int i, Coalition c);
Utility UtilityEnemyOriented(const Game& game, int i, Coalition c);
// Throws InvalidInput if the game has no valuations.
Utility UtilityFractional(const Game& game, int i, Coalition c,
                          Aggregation aggregation);
Utility UtilitySelfishFirst(const Game& game, int i, Coalition c);
Utility UtilityEqualTreatment(const Game& game, int i, Coalition c);
Utility UtilityTrulyAltruistic(const Game& game, int i, Coalition c);

// u_i(c) under player i's own model.
Utility PlayerUtility(const Game& game, int i, Coalition c);

// Sign of u_i(c) − u_i(d). Throws InvalidInput unless both contain i.
Preference Compare(const Game& game, int i, Coalition c, Coalition d);

// Utilities of the members of one coalition. Friend-oriented scores are
// computed on first use and shared by the altruistic averages of all
// members. Gives the same values as PlayerUtility. Not thread-safe; the
// game must outlive it.
class CoalitionScores {
 public:
  CoalitionScores(const Game& game, Coalition c) : game_(game), coalition_(c) {}

  Coalition coalition() const { return coalition_; }
  // u^FO_j(c) for member j.
  std::int64_t friend_oriented(int j) const;
  // Player i's utility under its own model; i must be a member.
  Utility UtilityOf(int i) const;

 private:
  const Game& game_;
  Coalition coalition_;
  mutable Coalition known_;
  mutable std::array<std::int64_t, kMaxPlayers> fo_;
};

}  // namespace hedonic

#endif  // HEDONIC_PREFERENCES_H_
