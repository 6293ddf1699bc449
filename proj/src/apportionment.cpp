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

#include "wvg/apportionment.hpp"

#include "wvg/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace wvg {

ElectionResult ElectionResult::from_percentages(
    const std::vector<std::pair<std::string, std::string>>& percentages) {
  ElectionResult r;
  for (const auto& [name, text] : percentages) {
    Rational pct;
    try {
      pct = parse_rational(text);
    } catch (const std::invalid_argument& e) {
      throw InvalidElection("bad percentage for " + name + ": " + e.what());
    }
    r.entries.push_back({name, pct / 100});
  }
  r.validate();
  return r;
}

ElectionResult ElectionResult::from_counts(const std::vector<std::pair<std::string, std::uint64_t>>& counts,
                                           std::optional<std::uint64_t> total_votes) {
  BigInt listed = 0;
  for (const auto& entry : counts) listed += entry.second;
  const BigInt total = total_votes ? BigInt(*total_votes) : listed;
  if (total == 0) throw InvalidElection("total vote count is zero");
  if (listed > total) throw InvalidElection("listed votes exceed total_votes");
  ElectionResult r;
  for (const auto& [name, count] : counts) r.entries.push_back({name, Rational(BigInt(count), total)});
  r.validate();
  return r;
}

void ElectionResult::validate() const {
  if (entries.empty()) throw InvalidElection("no vote entries");
  std::unordered_set<std::string> seen;
  Rational total = 0;
  for (const VoteShare& v : entries) {
    if (v.party.empty()) throw InvalidElection("party names must be non-empty");
    if (!seen.insert(v.party).second) throw InvalidElection("duplicate party '" + v.party + "'");
    if (v.share < 0) throw InvalidElection("negative share for " + v.party);
    total += v.share;
  }
  if (total > 1) throw InvalidElection("shares sum to " + render_decimal(total * 100, 2) + "% > 100%");
  if (threshold < 0 || threshold > 1) throw InvalidElection("threshold must lie in [0, 1]");
}

std::uint64_t SeatAllocation::total() const { return std::accumulate(seats.begin(), seats.end(), std::uint64_t{0}); }

std::uint64_t SeatAllocation::seats_of(std::string_view party) const {
  for (std::size_t i = 0; i < parties.size(); ++i) {
    if (parties[i] == party) return seats[i];
  }
  throw std::out_of_range("no party '" + std::string(party) + "' in allocation");
}

WeightedVotingGame SeatAllocation::to_game(Weight quota) const {
  std::vector<Party> members;
  for (std::size_t i = 0; i < parties.size(); ++i) {
    if (qualifying[i]) members.push_back({parties[i], seats[i]});
  }
  return WeightedVotingGame(std::move(members), quota);
}

std::vector<PartyId> apply_threshold(const ElectionResult& result) {
  result.validate();
  std::vector<PartyId> out;
  for (PartyId i = 0; i < result.entries.size(); ++i) {
    if (result.entries[i].share >= result.threshold && result.entries[i].share > 0) out.push_back(i);
  }
  if (out.empty()) throw NoQualifyingParty("no party reaches the " + render_decimal(result.threshold * 100, 2) + "% threshold");
  return out;
}

SeatAllocation allocate(const ElectionResult& result) {
  const std::vector<PartyId> qualifying = apply_threshold(result);
  const std::size_t n = result.entries.size();

  SeatAllocation out;
  out.bonus_seats = result.bonus_seats;
  out.seats.assign(n, 0);
  out.qualifying.assign(n, false);
  out.hare_quotas.assign(n, Rational(0));
  for (const VoteShare& v : result.entries) out.parties.push_back(v.party);

  PartyId winner = qualifying.front();
  for (PartyId i : qualifying) {
    if (result.entries[i].share > result.entries[winner].share) winner = i;
  }
  for (PartyId i : qualifying) {
    if (i != winner && result.entries[i].share == result.entries[winner].share) {
      throw PluralityTie("plurality tie between " + result.entries[winner].party + " and " +
                         result.entries[i].party);
    }
  }
  out.winner = winner;

  Rational base = 0;
  for (PartyId i : qualifying) base += result.entries[i].share;

  std::uint64_t assigned = 0;
  std::vector<Rational> remainders(n, Rational(0));
  for (PartyId i : qualifying) {
    out.qualifying[i] = true;
    const Rational quota = result.entries[i].share / base * result.proportional_seats;
    out.hare_quotas[i] = quota;
    const BigInt whole = boost::multiprecision::numerator(quota) / boost::multiprecision::denominator(quota);
    out.seats[i] = whole.convert_to<std::uint64_t>();
    remainders[i] = quota - Rational(whole);
    assigned += out.seats[i];
  }

  std::vector<PartyId> order = qualifying;
  std::stable_sort(order.begin(), order.end(), [&](PartyId a, PartyId b) {
    if (remainders[a] != remainders[b]) return remainders[a] > remainders[b];
    return result.entries[a].share > result.entries[b].share;
  });
  // Fewer leftover seats than qualifying parties: each floor loses less than one seat.
  for (std::size_t k = 0; assigned < result.proportional_seats; ++k, ++assigned) ++out.seats[order.at(k)];

  out.seats[winner] += result.bonus_seats;
  return out;
}

}  // namespace wvg
