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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wvg {

using PartyId = std::size_t;
using Weight = std::uint64_t;

/// Hard bound on players: coalitions are single 64-bit masks.
inline constexpr std::size_t kMaxPlayers = 64;

struct Party {
  std::string name;
  Weight weight = 0;

  friend bool operator==(const Party&, const Party&) = default;
};

/// A subset of party ids stored as a bitmask (bit i set <=> party i is a member).
class Coalition {
 public:
  constexpr Coalition() noexcept = default;
  constexpr explicit Coalition(std::uint64_t bits) noexcept : bits_(bits) {}

  static Coalition of(std::initializer_list<PartyId> members);
  static constexpr Coalition full(std::size_t n) noexcept {
    return Coalition(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(PartyId i) const noexcept { return i < 64 && ((bits_ >> i) & 1U) != 0; }
  constexpr Coalition with(PartyId i) const noexcept { return Coalition(bits_ | (std::uint64_t{1} << i)); }
  constexpr Coalition without(PartyId i) const noexcept { return Coalition(bits_ & ~(std::uint64_t{1} << i)); }
  constexpr bool is_subset_of(Coalition other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr Coalition complement(std::size_t n) const noexcept { return Coalition(full(n).bits_ & ~bits_); }

  /// Member ids in increasing order.
  std::vector<PartyId> members() const;

  friend constexpr bool operator==(Coalition, Coalition) noexcept = default;
  friend constexpr auto operator<=>(Coalition, Coalition) noexcept = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order for enumerated coalitions: by size, then by bitmask.
constexpr bool size_then_bits_less(Coalition a, Coalition b) noexcept {
  return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
}

/// Caps that keep exhaustive and table-based engines bounded.
struct EnumerationLimits {
  std::size_t max_exhaustive_players = 30;
  std::size_t max_myerson_players = 25;
  std::size_t dp_memory_budget_bytes = std::size_t{256} << 20;
};

/// G = [q; w_1, ..., w_n] with integer seat weights.
///
/// Invariants checked on construction: 1 <= n <= 64, unique non-empty names,
/// 0 < q <= total weight, total weight fits in 64 bits.
class WeightedVotingGame {
 public:
  WeightedVotingGame(std::vector<Party> parties, Weight quota);

  std::size_t size() const noexcept { return parties_.size(); }
  Weight quota() const noexcept { return quota_; }
  Weight total_weight() const noexcept { return total_weight_; }
  const std::vector<Party>& parties() const noexcept { return parties_; }
  const Party& party(PartyId i) const { return parties_.at(i); }
  Weight weight(PartyId i) const { return parties_.at(i).weight; }
  std::vector<std::string> names() const;

  /// 2q > total weight: complements of winning coalitions lose.
  bool is_majority() const noexcept { return total_weight_ < 2 * quota_; }

  std::optional<PartyId> find(std::string_view name) const;
  /// Throws InvalidGame for unknown names.
  PartyId id_of(std::string_view name) const;
  Coalition coalition_of(std::initializer_list<std::string_view> names) const;

  Coalition grand_coalition() const noexcept { return Coalition::full(size()); }
  Weight weight_of(Coalition s) const;

  /// Throws InvalidCoalition if s has bits at or above n.
  void check(Coalition s) const;

  WeightedVotingGame with_quota(Weight quota) const { return WeightedVotingGame(parties_, quota); }

  friend bool operator==(const WeightedVotingGame&, const WeightedVotingGame&) = default;

 private:
  std::vector<Party> parties_;
  Weight quota_ = 0;
  Weight total_weight_ = 0;
};

/// Winning coalitions, minimal winning coalitions and per-party swing counts.
struct CoalitionCatalog {
  std::uint64_t winning_count = 0;
  std::vector<Coalition> minimal_winning;
  std::vector<std::uint64_t> swings_per_party;
};

/// v(S) in {0, 1}: 1 iff w(S) >= q.
int characteristic(const WeightedVotingGame& game, Coalition s);

/// Both S and its complement lose.
bool is_blocking(const WeightedVotingGame& game, Coalition s);

/// i turns S from losing to winning. Throws InvalidCoalition if i is already in S.
bool is_crucial(const WeightedVotingGame& game, PartyId i, Coalition s);

/// i has no swing. Decided by subset-sum reachability over the other parties.
bool is_null(const WeightedVotingGame& game, PartyId i, const EnumerationLimits& limits = {});

/// Every winning coalition whose members are all crucial, sorted by (size, bitmask).
/// Throws EnumerationTooLarge above limits.max_exhaustive_players.
std::vector<Coalition> enumerate_minimal_winning(const WeightedVotingGame& game,
                                                 const EnumerationLimits& limits = {});

CoalitionCatalog catalog(const WeightedVotingGame& game, const EnumerationLimits& limits = {});

}  // namespace wvg
