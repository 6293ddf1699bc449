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

// Internal: exhaustive walk over all 2^n coalitions in Gray-code order.

#include "wvg/errors.hpp"
#include "wvg/game.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace wvg::detail {

/// Parties re-indexed by ascending weight. In this order the lowest set bit of a
/// mask is its lightest member and the highest set bits are its heaviest.
struct WeightOrder {
  std::vector<PartyId> original;  // sorted index -> party id
  std::vector<Weight> weights;    // sorted index -> weight

  explicit WeightOrder(const WeightedVotingGame& game) : original(game.size()) {
    std::iota(original.begin(), original.end(), PartyId{0});
    std::stable_sort(original.begin(), original.end(),
                     [&](PartyId a, PartyId b) { return game.weight(a) < game.weight(b); });
    weights.reserve(original.size());
    for (PartyId id : original) weights.push_back(game.weight(id));
  }

  Coalition to_original(std::uint64_t sorted_mask) const {
    std::uint64_t bits = 0;
    while (sorted_mask != 0) {
      const int k = std::countr_zero(sorted_mask);
      sorted_mask &= sorted_mask - 1;
      bits |= std::uint64_t{1} << original[static_cast<std::size_t>(k)];
    }
    return Coalition(bits);
  }
};

inline void require_exhaustive(const WeightedVotingGame& game, std::size_t cap, const char* what) {
  const std::size_t limit = std::min<std::size_t>(cap, 63);
  if (game.size() > limit) {
    throw EnumerationTooLarge(std::string(what) + " needs exhaustive enumeration over 2^" +
                              std::to_string(game.size()) + " coalitions; cap is n <= " +
                              std::to_string(limit));
  }
}

/// Calls visit(sorted_mask, weight) for every winning coalition.
template <class Visit>
void for_each_winning(const WeightedVotingGame& game, const WeightOrder& order, Visit&& visit) {
  const std::size_t n = game.size();
  const Weight q = game.quota();
  const std::uint64_t count = std::uint64_t{1} << n;
  std::uint64_t mask = 0;
  Weight weight = 0;
  for (std::uint64_t g = 1; g < count; ++g) {
    const int k = std::countr_zero(g);
    const std::uint64_t bit = std::uint64_t{1} << k;
    mask ^= bit;
    if ((mask & bit) != 0) {
      weight += order.weights[static_cast<std::size_t>(k)];
    } else {
      weight -= order.weights[static_cast<std::size_t>(k)];
    }
    if (weight >= q) visit(mask, weight);
  }
}

/// Calls on_swing(sorted_index) for each member whose removal makes a winning
/// coalition (sorted_mask, weight) lose.
template <class OnSwing>
void for_each_swing_member(const WeightOrder& order, std::uint64_t sorted_mask, Weight weight,
                           Weight quota, OnSwing&& on_swing) {
  const Weight slack = weight - quota;
  while (sorted_mask != 0) {
    const int k = 63 - std::countl_zero(sorted_mask);
    if (order.weights[static_cast<std::size_t>(k)] <= slack) break;
    on_swing(static_cast<std::size_t>(k));
    sorted_mask &= ~(std::uint64_t{1} << k);
  }
}

}  // namespace wvg::detail
