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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wvg {

struct VoteShare {
  std::string party;
  Rational share;  // fraction of valid votes, in [0, 1]

  friend bool operator==(const VoteShare&, const VoteShare&) = default;
};

/// National result under reinforced proportionality: a threshold, a
/// proportional tier and a bonus for the plurality party.
struct ElectionResult {
  std::vector<VoteShare> entries;
  std::uint64_t proportional_seats = 250;
  std::uint64_t bonus_seats = 50;
  Rational threshold{3, 100};

  std::uint64_t total_seats() const noexcept { return proportional_seats + bonus_seats; }

  /// Percentages as exact decimal strings, e.g. {"ND", "18.85"}.
  static ElectionResult from_percentages(const std::vector<std::pair<std::string, std::string>>& percentages);
  /// Raw counts; shares are count / total_votes, or count / sum of counts when absent.
  static ElectionResult from_counts(const std::vector<std::pair<std::string, std::uint64_t>>& counts,
                                    std::optional<std::uint64_t> total_votes = std::nullopt);

  /// Throws InvalidElection: empty, duplicate names, negative shares, shares summing above 1.
  void validate() const;

  friend bool operator==(const ElectionResult&, const ElectionResult&) = default;
};

struct SeatAllocation {
  std::vector<std::string> parties;
  std::vector<std::uint64_t> seats;
  std::vector<bool> qualifying;
  std::vector<Rational> hare_quotas;  // proportional entitlement; 0 for non-qualifying parties
  PartyId winner = 0;
  std::uint64_t bonus_seats = 0;

  std::uint64_t total() const;
  std::uint64_t seats_of(std::string_view party) const;

  /// The parliament as a voting game: qualifying parties in input order.
  WeightedVotingGame to_game(Weight quota) const;
};

/// Ids (input order) of parties at or above the threshold. Throws NoQualifyingParty.
std::vector<PartyId> apply_threshold(const ElectionResult& result);

/// Largest-remainder (Hare) allocation of the proportional tier over qualifying
/// parties, plus the bonus to the unique plurality party.
/// Remainder ties on the last seat go to the larger share, then the earlier entry.
/// Throws PluralityTie, NoQualifyingParty, InvalidElection.
SeatAllocation allocate(const ElectionResult& result);

}  // namespace wvg
