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
#include "wvg/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wvg {

enum class IndexKind {
  SSI,
  BanzhafAbs,
  BanzhafNorm,
  PGI,
  DeeganPackel,
  ColemanInitiate,
  ColemanPrevent,
  Myerson,
};

std::string_view to_string(IndexKind kind) noexcept;
std::optional<IndexKind> index_kind_from_string(std::string_view name) noexcept;

/// Which engine produces swing counts for SSI, Banzhaf and Coleman.
enum class Engine { Oracle, Dp };

std::string_view to_string(Engine engine) noexcept;

/// Parties grouped by value, highest group first; ties share a group and
/// members of a group are listed by increasing id.
using Ranking = std::vector<std::vector<PartyId>>;

template <class T>
Ranking rank_descending(std::span<const T> values) {
  std::vector<PartyId> ids(values.size());
  std::iota(ids.begin(), ids.end(), PartyId{0});
  std::stable_sort(ids.begin(), ids.end(), [&](PartyId a, PartyId b) { return values[b] < values[a]; });
  Ranking out;
  for (PartyId id : ids) {
    if (out.empty() || values[out.back().front()] != values[id]) out.emplace_back();
    out.back().push_back(id);
  }
  return out;
}

struct IndexReport {
  IndexKind kind = IndexKind::SSI;
  std::vector<std::string> parties;
  std::vector<Rational> values;
  unsigned precision = 2;
  std::vector<std::string> rendered;
  Ranking ranking;

  /// Refreshes `rendered` at the given precision; ranking is untouched.
  void render(unsigned places);
  Rational sum() const;
  const Rational& value_of(std::string_view party) const;
  std::string rendered_of(std::string_view party) const;

  friend bool operator==(const IndexReport&, const IndexReport&) = default;
};

IndexReport make_report(IndexKind kind, std::vector<std::string> parties, std::vector<Rational> values,
                        unsigned precision = 2);

/// c_i(s): number of coalitions S of size s without i for which i is crucial.
struct SwingProfile {
  std::vector<std::vector<BigInt>> counts;  // counts[i][s], s = 0..n-1
  BigInt winning_count;                     // |W|

  std::size_t size() const noexcept { return counts.size(); }
  BigInt swings(PartyId i) const;

  friend bool operator==(const SwingProfile&, const SwingProfile&) = default;
};

/// Generating-function engine: counts subsets by (size, weight) below the quota
/// once, then divides out each party. Memory is O(n * q) machine words.
/// Throws EngineInfeasible when the table exceeds limits.dp_memory_budget_bytes.
SwingProfile swing_profile_dp(const WeightedVotingGame& game, const EnumerationLimits& limits = {});

/// Exhaustive engine over all 2^n coalitions.
SwingProfile swing_profile_oracle(const WeightedVotingGame& game, const EnumerationLimits& limits = {});

SwingProfile swing_profile(const WeightedVotingGame& game, Engine engine, const EnumerationLimits& limits = {});

// Indices from a precomputed profile.
IndexReport shapley_shubik(const WeightedVotingGame& game, const SwingProfile& profile);
IndexReport banzhaf(const WeightedVotingGame& game, const SwingProfile& profile, bool normalized);
IndexReport coleman_prevent(const WeightedVotingGame& game, const SwingProfile& profile);
IndexReport coleman_initiate(const WeightedVotingGame& game, const SwingProfile& profile);

// Convenience overloads that build the profile with the chosen engine.
IndexReport shapley_shubik(const WeightedVotingGame& game, Engine engine = Engine::Dp,
                           const EnumerationLimits& limits = {});
IndexReport banzhaf(const WeightedVotingGame& game, bool normalized, Engine engine = Engine::Dp,
                    const EnumerationLimits& limits = {});
IndexReport coleman_prevent(const WeightedVotingGame& game, Engine engine = Engine::Dp,
                            const EnumerationLimits& limits = {});
IndexReport coleman_initiate(const WeightedVotingGame& game, Engine engine = Engine::Dp,
                             const EnumerationLimits& limits = {});

// Minimal-winning-coalition indices.
IndexReport holler_pgi(const WeightedVotingGame& game, std::span<const Coalition> minimal_winning);
IndexReport deegan_packel(const WeightedVotingGame& game, std::span<const Coalition> minimal_winning);
IndexReport holler_pgi(const WeightedVotingGame& game, const EnumerationLimits& limits = {});
IndexReport deegan_packel(const WeightedVotingGame& game, const EnumerationLimits& limits = {});

}  // namespace wvg
