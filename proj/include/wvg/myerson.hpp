// Copyright 2026 The wvg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "wvg/game.hpp"
#include "wvg/indices.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace wvg {

/// Undirected links between parties. Symmetric by construction, no self-loops.
class CommunicationGraph {
 public:
  explicit CommunicationGraph(std::size_t n);

  static CommunicationGraph complete(std::size_t n);

  /// Idempotent. A self-loop (a == b) is ignored: it carries no information.
  void add_edge(PartyId a, PartyId b);
  /// Same, resolving names against a game; unknown names throw InvalidGraph.
  void add_edge(const WeightedVotingGame& game, std::string_view a, std::string_view b);

  std::size_t size() const noexcept { return adjacency_.size(); }
  bool has_edge(PartyId a, PartyId b) const;
  std::uint64_t neighbours(PartyId i) const { return adjacency_.at(i); }
  /// Edges as (a, b) with a < b, sorted.
  std::vector<std::pair<PartyId, PartyId>> edges() const;

  friend bool operator==(const CommunicationGraph&, const CommunicationGraph&) = default;

 private:
  std::vector<std::uint64_t> adjacency_;
};

/// Maximal connected subsets of s in the induced subgraph, ordered by lowest member.
std::vector<Coalition> components(const CommunicationGraph& graph, Coalition s);

/// v_E(S) evaluated directly, without memoization. Works for any n <= 64.
/// Throws NonMajorityBase unless 2q > total weight.
int restricted_value(const WeightedVotingGame& game, const CommunicationGraph& graph, Coalition s);

/// The graph-restricted game with v_E precomputed for all 2^n coalitions.
/// Immutable after construction, so concurrent reads are safe.
class RestrictedGame {
 public:
  RestrictedGame(WeightedVotingGame base, CommunicationGraph graph, const EnumerationLimits& limits = {});

  const WeightedVotingGame& base() const noexcept { return base_; }
  const CommunicationGraph& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return base_.size(); }

  int value(Coalition s) const;
  /// v_E indexed by coalition bitmask.
  std::span<const std::uint8_t> table() const noexcept { return values_; }

 private:
  WeightedVotingGame base_;
  CommunicationGraph graph_;
  std::vector<std::uint8_t> values_;
};

/// Shapley value of the restricted game.
IndexReport myerson_index(const RestrictedGame& restricted);
IndexReport myerson_index(const WeightedVotingGame& game, const CommunicationGraph& graph,
                          const EnumerationLimits& limits = {});

}  // namespace wvg
