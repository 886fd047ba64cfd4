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

#include "hedonic/preferences.h"

#include <string>

#include "hedonic/errors.h"

namespace hedonic {
namespace {

void RequireMember(const Game& game, int i, Coalition c) {
  if (i < 0 || i >= game.num_players() || !c.contains(i)) {
    throw InvalidInput("player " +
                       (i >= 0 && i < game.num_players()
                            ? "\"" + game.label(i) + "\""
                            : std::to_string(i)) +
                       " is not a member of the coalition");
  }
  if ((c.mask() & ~game.grand_coalition().mask()) != 0) {
    throw InvalidInput("coalition mentions players outside the game");
  }
}

std::int64_t RawFriendOriented(const Game& game, int j, Coalition c) {
  return FriendOrientedScore(game.num_players(), (c & game.friends(j)).size(),
                             (c & game.enemies(j)).size());
}

// Sum and count of u^FO_j(c) over i's friends j inside c.
struct FriendTotals {
  std::int64_t sum = 0;
  std::int64_t count = 0;
};

FriendTotals FriendOrientedTotals(const Game& game, int i, Coalition c) {
  FriendTotals t;
  ForEachMember(c & game.friends(i), [&](int j) {
    t.sum += RawFriendOriented(game, j, c);
    ++t.count;
  });
  return t;
}

// The three altruistic utilities from i's own score and its friends' totals.
Utility SelfishFirst(std::int64_t n, std::int64_t own, FriendTotals t) {
  if (t.count == 0) return AltruismWeight(n) * own;
  return Rational(AltruismWeight(n) * own * t.count + t.sum, t.count);
}

Utility EqualTreatment(std::int64_t own, FriendTotals t) {
  return Rational(own + t.sum, t.count + 1);
}

Utility TrulyAltruistic(std::int64_t n, std::int64_t own, FriendTotals t) {
  if (t.count == 0) return own;
  return Rational(own * t.count + AltruismWeight(n) * t.sum, t.count);
}

Utility Fractional(const Game& game, int i, Coalition c,
                   Aggregation aggregation) {
  const auto& v = game.valuations();
  if (!v) {
    throw InvalidInput("fractional utility requested but the game has no "
                       "valuations");
  }
  Rational total = 0;
  ForEachMember(c, [&](int j) { total += v->at(i, j); });
  if (aggregation == Aggregation::kMean) total /= c.size();
  return total;
}

}  // namespace

std::string_view PreferenceName(Preference p) {
  switch (p) {
    case Preference::kStrictlyPrefers: return "strictly-prefers";
    case Preference::kIndifferent: return "indifferent";
    case Preference::kStrictlyDispreferred: return "strictly-dispreferred";
  }
  return "?";
}

Utility UtilityFriendOriented(const Game& game, int i, Coalition c) {
  RequireMember(game, i, c);
  return RawFriendOriented(game, i, c);
}

Utility UtilityEnemyOriented(const Game& game, int i, Coalition c) {
  RequireMember(game, i, c);
  return EnemyOrientedScore(game.num_players(), (c & game.friends(i)).size(),
                            (c & game.enemies(i)).size());
}

Utility UtilityFractional(const Game& game, int i, Coalition c,
                          Aggregation aggregation) {
  RequireMember(game, i, c);
  return Fractional(game, i, c, aggregation);
}

Utility UtilitySelfishFirst(const Game& game, int i, Coalition c) {
  RequireMember(game, i, c);
  return SelfishFirst(game.num_players(), RawFriendOriented(game, i, c),
                      FriendOrientedTotals(game, i, c));
}

Utility UtilityEqualTreatment(const Game& game, int i, Coalition c) {
  RequireMember(game, i, c);
  return EqualTreatment(RawFriendOriented(game, i, c),
                        FriendOrientedTotals(game, i, c));
}

Utility UtilityTrulyAltruistic(const Game& game, int i, Coalition c) {
  RequireMember(game, i, c);
  return TrulyAltruistic(game.num_players(), RawFriendOriented(game, i, c),
                         FriendOrientedTotals(game, i, c));
}

Utility PlayerUtility(const Game& game, int i, Coalition c) {
  const PreferenceModel& model = game.model(i);
  switch (model.kind) {
    case ModelKind::kFriendOriented: return UtilityFriendOriented(game, i, c);
    case ModelKind::kEnemyOriented: return UtilityEnemyOriented(game, i, c);
    case ModelKind::kFractional:
      return UtilityFractional(game, i, c, model.aggregation);
    case ModelKind::kSelfishFirst: return UtilitySelfishFirst(game, i, c);
    case ModelKind::kEqualTreatment: return UtilityEqualTreatment(game, i, c);
    case ModelKind::kTrulyAltruistic: return UtilityTrulyAltruistic(game, i, c);
  }
  throw std::logic_error("unknown preference model");
}

Preference Compare(const Game& game, int i, Coalition c, Coalition d) {
  RequireMember(game, i, d);
  Utility uc = PlayerUtility(game, i, c);
  Utility ud = PlayerUtility(game, i, d);
  if (uc > ud) return Preference::kStrictlyPrefers;
  if (uc < ud) return Preference::kStrictlyDispreferred;
  return Preference::kIndifferent;
}

std::int64_t CoalitionScores::friend_oriented(int j) const {
  if (!known_.contains(j)) {
    fo_[j] = RawFriendOriented(game_, j, coalition_);
    known_ = known_.With(j);
  }
  return fo_[j];
}

Utility CoalitionScores::UtilityOf(int i) const {
  const PreferenceModel& model = game_.model(i);
  const std::int64_t n = game_.num_players();
  const Coalition c = coalition_;
  auto totals = [&] {
    FriendTotals t;
    ForEachMember(c & game_.friends(i), [&](int j) {
      t.sum += friend_oriented(j);
      ++t.count;
    });
    return t;
  };
  switch (model.kind) {
    case ModelKind::kFriendOriented: return friend_oriented(i);
    case ModelKind::kEnemyOriented:
      return EnemyOrientedScore(n, (c & game_.friends(i)).size(),
                                (c & game_.enemies(i)).size());
    case ModelKind::kFractional:
      return Fractional(game_, i, c, model.aggregation);
    case ModelKind::kSelfishFirst:
      return SelfishFirst(n, friend_oriented(i), totals());
    case ModelKind::kEqualTreatment:
      return EqualTreatment(friend_oriented(i), totals());
    case ModelKind::kTrulyAltruistic:
      return TrulyAltruistic(n, friend_oriented(i), totals());
  }
  throw std::logic_error("unknown preference model");
}

}  // namespace hedonic
