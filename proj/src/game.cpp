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

#include "wvg/game.hpp"

#include "exhaustive.hpp"
#include "wvg/errors.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace wvg {

Coalition Coalition::of(std::initializer_list<PartyId> members) {
  std::uint64_t bits = 0;
  for (PartyId i : members) {
    if (i >= kMaxPlayers) throw InvalidCoalition("party id " + std::to_string(i) + " out of range");
    bits |= std::uint64_t{1} << i;
  }
  return Coalition(bits);
}

std::vector<PartyId> Coalition::members() const {
  std::vector<PartyId> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<PartyId>(std::countr_zero(b)));
  }
  return out;
}

WeightedVotingGame::WeightedVotingGame(std::vector<Party> parties, Weight quota)
    : parties_(std::move(parties)), quota_(quota) {
  if (parties_.empty()) throw InvalidGame("a game needs at least one party");
  if (parties_.size() > kMaxPlayers) {
    throw InvalidGame("at most " + std::to_string(kMaxPlayers) + " parties are supported, got " +
                      std::to_string(parties_.size()));
  }
  std::unordered_set<std::string> seen;
  for (const Party& p : parties_) {
    if (p.name.empty()) throw InvalidGame("party names must be non-empty");
    if (!seen.insert(p.name).second) throw InvalidGame("duplicate party name '" + p.name + "'");
    if (p.weight > std::numeric_limits<Weight>::max() - total_weight_) {
      throw InvalidGame("total weight overflows 64 bits");
    }
    total_weight_ += p.weight;
  }
  if (quota_ == 0) throw InvalidGame("quota must be positive");
  if (quota_ > total_weight_) {
    throw InvalidGame("quota " + std::to_string(quota_) + " exceeds total weight " +
                      std::to_string(total_weight_));
  }
}

std::vector<std::string> WeightedVotingGame::names() const {
  std::vector<std::string> out;
  out.reserve(parties_.size());
  for (const Party& p : parties_) out.push_back(p.name);
  return out;
}

std::optional<PartyId> WeightedVotingGame::find(std::string_view name) const {
  for (PartyId i = 0; i < parties_.size(); ++i) {
    if (parties_[i].name == name) return i;
  }
  return std::nullopt;
}

PartyId WeightedVotingGame::id_of(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw InvalidGame("unknown party '" + std::string(name) + "'");
}

Coalition WeightedVotingGame::coalition_of(std::initializer_list<std::string_view> names) const {
  Coalition s;
  for (std::string_view name : names) s = s.with(id_of(name));
  return s;
}

Weight WeightedVotingGame::weight_of(Coalition s) const {
  check(s);
  Weight w = 0;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
    w += parties_[static_cast<std::size_t>(std::countr_zero(b))].weight;
  }
  return w;
}

void WeightedVotingGame::check(Coalition s) const {
  if (!s.is_subset_of(grand_coalition())) {
    throw InvalidCoalition("coalition has members outside 0.." + std::to_string(size() - 1));
  }
}

int characteristic(const WeightedVotingGame& game, Coalition s) {
  return game.weight_of(s) >= game.quota() ? 1 : 0;
}

bool is_blocking(const WeightedVotingGame& game, Coalition s) {
  return characteristic(game, s) == 0 && characteristic(game, s.complement(game.size())) == 0;
}

bool is_crucial(const WeightedVotingGame& game, PartyId i, Coalition s) {
  game.check(s);
  if (i >= game.size()) throw InvalidCoalition("party id " + std::to_string(i) + " out of range");
  if (s.contains(i)) throw InvalidCoalition("party " + game.party(i).name + " is already in the coalition");
  const Weight w = game.weight_of(s);
  return w < game.quota() && w + game.weight(i) >= game.quota();
}

bool is_null(const WeightedVotingGame& game, PartyId i, const EnumerationLimits& limits) {
  if (i >= game.size()) throw InvalidCoalition("party id " + std::to_string(i) + " out of range");
  const Weight q = game.quota();
  const Weight wi = game.weight(i);
  if (wi == 0) return true;
  if (wi >= q) return false;  // the empty coalition is a swing

  // Sorted set of reachable losing weights w(S) < q over S subset of N \ {i}.
  const std::size_t budget = std::max<std::size_t>(limits.dp_memory_budget_bytes / sizeof(Weight), 1);
  std::vector<Weight> sums{0};
  std::vector<Weight> shifted;
  std::vector<Weight> merged;
  for (PartyId j = 0; j < game.size(); ++j) {
    const Weight wj = game.weight(j);
    if (j == i || wj == 0 || wj >= q) continue;
    shifted.clear();
    for (Weight s : sums) {
      if (s + wj < q) shifted.push_back(s + wj);
    }
    merged.clear();
    std::set_union(sums.begin(), sums.end(), shifted.begin(), shifted.end(), std::back_inserter(merged));
    sums.swap(merged);
    if (sums.size() > budget) {
      throw EnumerationTooLarge("null-player check exceeds the subset-sum memory budget");
    }
  }
  const auto first = std::lower_bound(sums.begin(), sums.end(), q - wi);
  return first == sums.end();
}

std::vector<Coalition> enumerate_minimal_winning(const WeightedVotingGame& game,
                                                 const EnumerationLimits& limits) {
  return catalog(game, limits).minimal_winning;
}

CoalitionCatalog catalog(const WeightedVotingGame& game, const EnumerationLimits& limits) {
  detail::require_exhaustive(game, limits.max_exhaustive_players, "coalition catalog");
  const detail::WeightOrder order(game);
  const Weight q = game.quota();

  CoalitionCatalog out;
  out.swings_per_party.assign(game.size(), 0);
  std::vector<std::uint64_t> sorted_swings(game.size(), 0);
  std::vector<std::uint64_t> minimal_sorted;

  detail::for_each_winning(game, order, [&](std::uint64_t mask, Weight weight) {
    ++out.winning_count;
    const auto lightest = static_cast<std::size_t>(std::countr_zero(mask));
    if (weight - order.weights[lightest] < q) minimal_sorted.push_back(mask);
    detail::for_each_swing_member(order, mask, weight, q, [&](std::size_t k) { ++sorted_swings[k]; });
  });

  for (std::size_t k = 0; k < game.size(); ++k) out.swings_per_party[order.original[k]] = sorted_swings[k];
  out.minimal_winning.reserve(minimal_sorted.size());
  for (std::uint64_t m : minimal_sorted) out.minimal_winning.push_back(order.to_original(m));
  std::sort(out.minimal_winning.begin(), out.minimal_winning.end(), size_then_bits_less);
  return out;
}

}  // namespace wvg
