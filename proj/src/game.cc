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

#include "hedonic/game.h"

#include <algorithm>

#include "hedonic/errors.h"

namespace hedonic {
namespace {

void CheckPlayerCount(int n) {
  if (n < 1 || n > kMaxPlayers) {
    throw InvalidInput("player count " + std::to_string(n) +
                       " outside [1, " + std::to_string(kMaxPlayers) + "]");
  }
}

}  // namespace

Coalition Coalition::Of(std::initializer_list<int> players) {
  return Of(std::span<const int>(players.begin(), players.size()));
}

Coalition Coalition::Of(std::span<const int> players) {
  Coalition c;
  for (int p : players) c = c.With(p);
  return c;
}

std::vector<int> Coalition::Members() const {
  std::vector<int> out;
  out.reserve(size());
  ForEachMember(*this, [&](int i) { out.push_back(i); });
  return out;
}

FriendshipGraph::FriendshipGraph(int num_players)
    : n_(num_players), neighbors_(num_players) {
  if (num_players < 0 || num_players > kMaxPlayers) {
    throw InvalidInput("player count " + std::to_string(num_players) +
                       " outside [0, " + std::to_string(kMaxPlayers) + "]");
  }
}

void FriendshipGraph::AddEdge(int a, int b) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) {
    throw InvalidInput("edge endpoint out of range: (" + std::to_string(a) +
                       ", " + std::to_string(b) + ")");
  }
  if (a == b) {
    throw InvalidInput("self-loop on player " + std::to_string(a));
  }
  neighbors_[a] = neighbors_[a].With(b);
  neighbors_[b] = neighbors_[b].With(a);
}

void FriendshipGraph::RemoveEdge(int a, int b) {
  neighbors_[a] = neighbors_[a].Without(b);
  neighbors_[b] = neighbors_[b].Without(a);
}

std::vector<std::pair<int, int>> FriendshipGraph::Edges() const {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n_; ++a) {
    ForEachMember(neighbors_[a], [&](int b) {
      if (a < b) edges.emplace_back(a, b);
    });
  }
  return edges;
}

int FriendshipGraph::num_edges() const {
  int degree_sum = 0;
  for (const Coalition& c : neighbors_) degree_sum += c.size();
  return degree_sum / 2;
}

bool FriendshipGraph::IsConnected() const {
  if (n_ <= 1) return true;
  Coalition seen = Coalition::Singleton(0);
  Coalition frontier = seen;
  while (!frontier.empty()) {
    Coalition next;
    ForEachMember(frontier, [&](int i) { next = next | neighbors_[i]; });
    frontier = Coalition(next.mask() & ~seen.mask());
    seen = seen | frontier;
  }
  return seen == Coalition::Full(n_);
}

bool FriendshipGraph::IsClique(Coalition c) const {
  bool clique = true;
  ForEachMember(c, [&](int i) {
    if ((c.Without(i) & neighbors_[i]) != c.Without(i)) clique = false;
  });
  return clique;
}

ValuationMatrix::ValuationMatrix(int num_players)
    : n_(num_players), values_(num_players * num_players) {}

void ValuationMatrix::set(int i, int j, const Rational& value) {
  if (i == j && value != 0) {
    throw InvalidInput("self-valuation of player " + std::to_string(i) +
                       " must be 0");
  }
  values_[i * n_ + j] = value;
}

bool ValuationMatrix::IsSimple() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) {
    return v == 0 || v == 1;
  });
}

bool ValuationMatrix::IsSymmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

std::string_view ModelTag(ModelKind kind) {
  switch (kind) {
    case ModelKind::kFriendOriented: return "FO";
    case ModelKind::kEnemyOriented: return "EO";
    case ModelKind::kFractional: return "FR";
    case ModelKind::kSelfishFirst: return "SF";
    case ModelKind::kEqualTreatment: return "EQ";
    case ModelKind::kTrulyAltruistic: return "AL";
  }
  return "??";
}

std::optional<ModelKind> ParseModelTag(std::string_view tag) {
  for (ModelKind kind : kAllModelKinds) {
    if (ModelTag(kind) == tag) return kind;
  }
  return std::nullopt;
}

std::string_view AggregationName(Aggregation aggregation) {
  return aggregation == Aggregation::kMean ? "mean" : "sum";
}

std::optional<Aggregation> ParseAggregation(std::string_view name) {
  if (name == "mean") return Aggregation::kMean;
  if (name == "sum") return Aggregation::kSum;
  return std::nullopt;
}

std::optional<int> Game::IndexOf(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Game::is_homogeneous() const {
  return std::all_of(models_.begin(), models_.end(),
                     [&](const PreferenceModel& m) { return m == models_[0]; });
}

bool Game::uses(ModelKind kind) const {
  return std::any_of(models_.begin(), models_.end(),
                     [&](const PreferenceModel& m) { return m.kind == kind; });
}

Game BuildGame(const GameSpec& spec) {
  const int n = static_cast<int>(spec.labels.size());
  CheckPlayerCount(n);

  Game game(n);
  game.labels_ = spec.labels;
  for (int i = 0; i < n; ++i) {
    if (spec.labels[i].empty()) {
      throw InvalidInput("player " + std::to_string(i) + " has an empty label");
    }
    if (!game.index_.emplace(spec.labels[i], i).second) {
      throw InvalidInput("duplicate player label \"" + spec.labels[i] + "\"");
    }
  }

  for (const auto& [a, b] : spec.edges) {
    if (a == b && a >= 0 && a < n) {
      throw InvalidInput("self-loop on player \"" + spec.labels[a] + "\"");
    }
    game.graph_.AddEdge(a, b);
  }

  if (spec.models.size() != 1 && spec.models.size() != spec.labels.size()) {
    throw InvalidInput("expected 1 or " + std::to_string(n) +
                       " preference models, got " +
                       std::to_string(spec.models.size()));
  }
  game.aggregation_ = spec.aggregation;
  game.models_.resize(n);
  for (int i = 0; i < n; ++i) {
    game.models_[i].kind = spec.models.size() == 1 ? spec.models[0]
                                                    : spec.models[i];
    game.models_[i].aggregation = spec.aggregation;
  }

  if (spec.valuations) {
    const auto& rows = *spec.valuations;
    if (static_cast<int>(rows.size()) != n) {
      throw InvalidInput("valuation table has " + std::to_string(rows.size()) +
                         " rows, expected " + std::to_string(n));
    }
    ValuationMatrix matrix(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n) {
        throw InvalidInput("valuation row for \"" + spec.labels[i] + "\" has " +
                           std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(n));
      }
      for (int j = 0; j < n; ++j) {
        if (i == j && rows[i][j] != 0) {
          game.warnings_.push_back("self-valuation of \"" + spec.labels[i] +
                                   "\" was " + rows[i][j].ToString() +
                                   "; set to 0");
          continue;
        }
        matrix.set(i, j, rows[i][j]);
      }
    }
    game.valuations_ = std::move(matrix);
  }

  for (int i = 0; i < n; ++i) {
    if (game.models_[i].kind == ModelKind::kFractional && !game.valuations_) {
      throw InvalidInput("player \"" + spec.labels[i] +
                         "\" uses the fractional model but the game has no "
                         "valuations");
    }
  }
  return game;
}

std::string DefaultLabel(int i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "p" + std::to_string(i);
}

Game MakeGame(const FriendshipGraph& graph, ModelKind kind,
              Aggregation aggregation) {
  GameSpec spec;
  for (int i = 0; i < graph.num_players(); ++i) {
    spec.labels.push_back(DefaultLabel(i));
  }
  spec.edges = graph.Edges();
  spec.models = {kind};
  spec.aggregation = aggregation;
  if (kind == ModelKind::kFractional) {
    ValuationMatrix v = AdjacencyValuations(graph);
    std::vector<std::vector<Rational>> rows(graph.num_players());
    for (int i = 0; i < graph.num_players(); ++i) {
      for (int j = 0; j < graph.num_players(); ++j) rows[i].push_back(v.at(i, j));
    }
    spec.valuations = std::move(rows);
  }
  return BuildGame(spec);
}

ValuationMatrix AdjacencyValuations(const FriendshipGraph& graph) {
  ValuationMatrix v(graph.num_players());
  for (const auto& [a, b] : graph.Edges()) {
    v.set(a, b, 1);
    v.set(b, a, 1);
  }
  return v;
}

Partition Partition::Singletons(int n) {
  std::vector<Coalition> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back(Coalition::Singleton(i));
  return Canonicalize(n, blocks);
}

Partition Partition::Grand(int n) {
  const Coalition all = Coalition::Full(n);
  return Canonicalize(n, std::span<const Coalition>(&all, n > 0 ? 1 : 0));
}

Partition Canonicalize(int n, std::span<const Coalition> blocks) {
  if (n < 0 || n > kMaxPlayers) {
    throw InvalidInput("player count " + std::to_string(n) + " out of range");
  }
  const Coalition all = Coalition::Full(n);
  Coalition covered;
  for (const Coalition& block : blocks) {
    if (block.empty()) throw InvalidInput("partition has an empty block");
    if ((block.mask() & ~all.mask()) != 0) {
      throw InvalidInput("partition mentions a player outside [0, " +
                         std::to_string(n) + ")");
    }
    if (!(block & covered).empty()) {
      throw InvalidInput("partition blocks overlap on player " +
                         std::to_string((block & covered).least()));
    }
    covered = covered | block;
  }
  if (covered != all) {
    Coalition missing(all.mask() & ~covered.mask());
    throw InvalidInput("partition does not cover player " +
                       std::to_string(missing.least()));
  }

  Partition p;
  p.blocks_.assign(blocks.begin(), blocks.end());
  std::sort(p.blocks_.begin(), p.blocks_.end(),
            [](Coalition a, Coalition b) { return a.least() < b.least(); });
  p.block_of_.assign(n, 0);
  for (int b = 0; b < static_cast<int>(p.blocks_.size()); ++b) {
    ForEachMember(p.blocks_[b], [&](int i) { p.block_of_[i] = b; });
  }
  return p;
}

Partition PartitionFromLabels(std::span<const int> labels) {
  Partition p;
  p.block_of_.assign(labels.begin(), labels.end());
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (labels[i] == static_cast<int>(p.blocks_.size())) {
      p.blocks_.emplace_back();
    } else if (labels[i] > static_cast<int>(p.blocks_.size()) ||
               labels[i] < 0) {
      throw InvalidInput("block labels are not a restricted growth string");
    }
    p.blocks_[labels[i]] = p.blocks_[labels[i]].With(i);
  }
  return p;
}

std::string FormatCoalition(const Game& game, Coalition c) {
  std::string out = "{";
  bool first = true;
  ForEachMember(c, [&](int i) {
    if (!first) out += ",";
    out += game.label(i);
    first = false;
  });
  return out + "}";
}

std::string FormatPartition(const Game& game, const Partition& partition) {
  std::string out = "{";
  for (int b = 0; b < partition.num_blocks(); ++b) {
    if (b > 0) out += ",";
    out += FormatCoalition(game, partition.blocks()[b]);
  }
  return out + "}";
}

}  // namespace hedonic
