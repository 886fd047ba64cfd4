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

#ifndef HEDONIC_GAME_H_
#define HEDONIC_GAME_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hedonic/rational.h"

namespace hedonic {

// Coalitions are bitmasks, so a game has at most this many players.
inline constexpr int kMaxPlayers = 64;

// A set of players, bit i set iff player i is a member.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t mask) : mask_(mask) {}

  static Coalition Of(std::initializer_list<int> players);
  static Coalition Of(std::span<const int> players);
  static constexpr Coalition Singleton(int player) {
    return Coalition(std::uint64_t{1} << player);
  }
  // {0, ..., n-1}.
  static constexpr Coalition Full(int n) {
    return Coalition(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int player) const {
    return (mask_ >> player) & 1;
  }
  // Lowest member index; undefined on the empty coalition.
  constexpr int least() const { return std::countr_zero(mask_); }

  constexpr Coalition With(int player) const {
    return Coalition(mask_ | (std::uint64_t{1} << player));
  }
  constexpr Coalition Without(int player) const {
    return Coalition(mask_ & ~(std::uint64_t{1} << player));
  }

  std::vector<int> Members() const;

  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.mask_ & b.mask_);
  }
  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.mask_ | b.mask_);
  }
  friend constexpr auto operator<=>(Coalition, Coalition) = default;

 private:
  std::uint64_t mask_ = 0;
};

// Calls fn(i) for each member of c in ascending order.
template <typename Fn>
void ForEachMember(Coalition c, Fn&& fn) {
  for (std::uint64_t m = c.mask(); m != 0; m &= m - 1) {
    fn(std::countr_zero(m));
  }
}

// Undirected simple graph on players; an edge means mutual friendship.
class FriendshipGraph {
 public:
  explicit FriendshipGraph(int num_players);

  // Throws InvalidInput on a self-loop or an out-of-range endpoint.
  // Adding an existing edge is a no-op.
  void AddEdge(int a, int b);
  void RemoveEdge(int a, int b);

  int num_players() const { return n_; }
  bool adjacent(int a, int b) const { return neighbors_[a].contains(b); }
  Coalition friends(int i) const { return neighbors_[i]; }
  Coalition enemies(int i) const {
    return Coalition(Coalition::Full(n_).mask() & ~neighbors_[i].mask() &
                     ~Coalition::Singleton(i).mask());
  }

  // Edges as (a, b) with a < b, sorted lexicographically.
  std::vector<std::pair<int, int>> Edges() const;
  int num_edges() const;
  bool IsConnected() const;
  bool IsClique(Coalition c) const;

  friend bool operator==(const FriendshipGraph&,
                         const FriendshipGraph&) = default;

 private:
  int n_;
  std::vector<Coalition> neighbors_;
};

// v_i(j) for fractional games. The diagonal is always zero.
class ValuationMatrix {
 public:
  explicit ValuationMatrix(int num_players);

  int num_players() const { return n_; }
  const Rational& at(int i, int j) const { return values_[i * n_ + j]; }
  // Throws InvalidInput if i == j and value != 0.
  void set(int i, int j, const Rational& value);

  // Every entry is 0 or 1.
  bool IsSimple() const;
  // v_i(j) == v_j(i) for all i, j.
  bool IsSymmetric() const;

  friend bool operator==(const ValuationMatrix&,
                         const ValuationMatrix&) = default;

 private:
  int n_;
  std::vector<Rational> values_;
};

enum class ModelKind {
  kFriendOriented,
  kEnemyOriented,
  kFractional,
  kSelfishFirst,
  kEqualTreatment,
  kTrulyAltruistic,
};

inline constexpr ModelKind kAllModelKinds[] = {
    ModelKind::kFriendOriented, ModelKind::kEnemyOriented,
    ModelKind::kFractional,     ModelKind::kSelfishFirst,
    ModelKind::kEqualTreatment, ModelKind::kTrulyAltruistic,
};

// How fractional utilities combine valuations over a coalition.
enum class Aggregation { kMean, kSum };

// "FO", "EO", "FR", "SF", "EQ", "AL".
std::string_view ModelTag(ModelKind kind);
std::optional<ModelKind> ParseModelTag(std::string_view tag);
std::string_view AggregationName(Aggregation aggregation);
std::optional<Aggregation> ParseAggregation(std::string_view name);

struct PreferenceModel {
  ModelKind kind = ModelKind::kFriendOriented;
  // Only meaningful for kFractional.
  Aggregation aggregation = Aggregation::kMean;

  friend bool operator==(const PreferenceModel&,
                         const PreferenceModel&) = default;
};

// Raw, unvalidated game description. BuildGame turns it into a Game.
struct GameSpec {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  // Row-major n x n, if present.
  std::optional<std::vector<std::vector<Rational>>> valuations;
  // Either one model for everybody or one per player.
  std::vector<ModelKind> models = {ModelKind::kFriendOriented};
  Aggregation aggregation = Aggregation::kMean;
};

// An immutable hedonic game on a friendship graph.
class Game {
 public:
  int num_players() const { return graph_.num_players(); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> IndexOf(std::string_view label) const;

  const FriendshipGraph& graph() const { return graph_; }
  Coalition friends(int i) const { return graph_.friends(i); }
  Coalition enemies(int i) const { return graph_.enemies(i); }

  const std::optional<ValuationMatrix>& valuations() const {
    return valuations_;
  }
  const PreferenceModel& model(int i) const { return models_[i]; }
  Aggregation aggregation() const { return aggregation_; }
  bool is_homogeneous() const;
  bool uses(ModelKind kind) const;

  Coalition grand_coalition() const {
    return Coalition::Full(num_players());
  }

  // Non-fatal fixes applied by BuildGame, e.g. a coerced diagonal.
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  friend Game BuildGame(const GameSpec& spec);

  Game(int n) : graph_(n) {}

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  FriendshipGraph graph_;
  std::optional<ValuationMatrix> valuations_;
  std::vector<PreferenceModel> models_;
  Aggregation aggregation_ = Aggregation::kMean;
  std::vector<std::string> warnings_;
};

// Validates spec and builds a Game. Throws InvalidInput on duplicate or
// empty labels, bad edge endpoints, self-loops, a model list of the wrong
// length, a malformed valuation table, or a fractional player without
// valuations. A nonzero v_i(i) is coerced to zero with a warning.
Game BuildGame(const GameSpec& spec);

// Labels "a".."z" for small games, "p26", "p27", ... beyond.
std::string DefaultLabel(int i);

// Homogeneous game on graph with default labels.
Game MakeGame(const FriendshipGraph& graph, ModelKind kind,
              Aggregation aggregation = Aggregation::kMean);

// Simple symmetric valuations: v_i(j) = 1 iff i and j are friends.
ValuationMatrix AdjacencyValuations(const FriendshipGraph& graph);

// A coalition structure: disjoint nonempty blocks covering {0..n-1}, kept in
// canonical form (blocks ordered by least member).
class Partition {
 public:
  int num_players() const { return static_cast<int>(block_of_.size()); }
  const std::vector<Coalition>& blocks() const { return blocks_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  int block_index(int i) const { return block_of_[i]; }
  // Γ(i).
  Coalition coalition_of(int i) const { return blocks_[block_of_[i]]; }

  static Partition Singletons(int n);
  static Partition Grand(int n);

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  friend Partition Canonicalize(int n, std::span<const Coalition> blocks);
  friend Partition PartitionFromLabels(std::span<const int> labels);

  std::vector<Coalition> blocks_;
  std::vector<int> block_of_;
};

// Validates blocks as a partition of {0..n-1} and returns it in canonical
// form. Throws InvalidInput on an empty block, overlap, a player out of
// range, or a missing player. n == 0 yields the empty partition.
Partition Canonicalize(int n, std::span<const Coalition> blocks);

// Partition from a block label per player, where labels form a restricted
// growth string (labels[0] == 0, each label at most one above the running
// maximum). Such a string is already canonical.
Partition PartitionFromLabels(std::span<const int> labels);

// Γ(i).
inline Coalition CoalitionOf(const Partition& partition, int i) {
  return partition.coalition_of(i);
}

// "{a,b,c}".
std::string FormatCoalition(const Game& game, Coalition c);
// "{{a,b},{c}}".
std::string FormatPartition(const Game& game, const Partition& partition);

}  // namespace hedonic

#endif  // HEDONIC_GAME_H_
