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
#include "wvg/scenarios.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace wvg;

namespace {

ElectionResult may_votes() {
  return ElectionResult::from_percentages({{"ND", "18.85"},
                                           {"SYRIZA", "16.78"},
                                           {"PASOK", "13.18"},
                                           {"ANEL", "10.60"},
                                           {"KKE", "8.48"},
                                           {"GD", "6.97"},
                                           {"DIMAR", "6.11"},
                                           {"LAOS", "2.90"}});
}

// Largest remainder in integers: shares scaled to a common denominator.
std::vector<std::uint64_t> hare_by_integers(const std::vector<std::uint64_t>& votes, std::uint64_t seats) {
  std::uint64_t total = 0;
  for (auto v : votes) total += v;
  std::vector<std::uint64_t> out(votes.size());
  std::vector<std::uint64_t> remainder(votes.size());
  std::uint64_t given = 0;
  for (std::size_t i = 0; i < votes.size(); ++i) {
    out[i] = votes[i] * seats / total;
    remainder[i] = votes[i] * seats % total;
    given += out[i];
  }
  std::vector<std::size_t> order(votes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (remainder[a] != remainder[b]) return remainder[a] > remainder[b];
    return votes[a] > votes[b];
  });
  for (std::size_t k = 0; given < seats; ++k, ++given) ++out[order[k]];
  return out;
}

}  // namespace

TEST_SUITE("apportionment") {
  TEST_CASE("threshold examples") {
    const Scenario june = load_scenario("june2012");
    const auto qualifying = apply_threshold(*june.election);
    CHECK(qualifying.size() == 7);

    auto edge = ElectionResult::from_percentages({{"A", "60"}, {"B", "37"}, {"C", "3"}});
    CHECK(apply_threshold(edge).size() == 3);
    edge = ElectionResult::from_percentages({{"A", "60"}, {"B", "37.01"}, {"C", "2.99"}});
    CHECK(apply_threshold(edge).size() == 2);

    const auto may = may_votes();
    Rational base = 0;
    for (PartyId i : apply_threshold(may)) base += may.entries[i].share;
    CHECK(base == Rational(8097, 10000));

    CHECK_THROWS_AS(apply_threshold(ElectionResult::from_percentages({{"A", "2"}, {"B", "1"}})), NoQualifyingParty);
  }

  TEST_CASE("may seats") {
    const auto alloc = allocate(may_votes());
    CHECK(alloc.total() == 300);
    CHECK(alloc.winner == 0);
    CHECK(alloc.seats == std::vector<std::uint64_t>{108, 52, 41, 33, 26, 21, 19, 0});
    CHECK(alloc.seats_of("LAOS") == 0);
    CHECK_FALSE(alloc.qualifying[7]);
    CHECK(render_decimal(alloc.hare_quotas[0], 2) == "58.20");
    const auto game = alloc.to_game(151);
    CHECK(game.size() == 7);
    CHECK(game.total_weight() == 300);
  }

  TEST_CASE("june seats carry the known first-party discrepancy") {
    const Scenario june = load_scenario("june2012");
    const auto alloc = allocate(*june.election);
    CHECK(alloc.seats_of("ND") == 128);
    CHECK(alloc.seats_of("SYRIZA") == 72);
    for (const auto& p : june.game.parties()) {
      const auto computed = static_cast<std::int64_t>(alloc.seats_of(p.name));
      CHECK(std::abs(computed - static_cast<std::int64_t>(p.weight)) <= 1);
    }
  }

  TEST_CASE("single party takes the house") {
    const auto alloc = allocate(ElectionResult::from_percentages({{"A", "100"}}));
    CHECK(alloc.seats == std::vector<std::uint64_t>{300});
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(allocate(ElectionResult::from_percentages({{"A", "40"}, {"B", "40"}, {"C", "20"}})),
                    PluralityTie);
    CHECK_THROWS_AS(ElectionResult::from_percentages({{"A", "60"}, {"A", "30"}}).validate(), InvalidElection);
    CHECK_THROWS_AS(ElectionResult::from_percentages({{"A", "60"}, {"B", "50"}}).validate(), InvalidElection);
    CHECK_THROWS_AS(ElectionResult::from_percentages({}).validate(), InvalidElection);
    CHECK_THROWS(ElectionResult::from_percentages({{"A", "sixty"}}));
  }

  TEST_CASE("counts") {
    const auto r = ElectionResult::from_counts({{"A", 600}, {"B", 300}, {"C", 100}});
    CHECK(r.entries[0].share == Rational(3, 5));
    const auto with_total = ElectionResult::from_counts({{"A", 600}, {"B", 300}}, 1000);
    CHECK(with_total.entries[1].share == Rational(3, 10));
    const auto alloc = allocate(r);
    CHECK(alloc.seats == std::vector<std::uint64_t>{200, 75, 25});
  }
}

TEST_SUITE("apportionment properties") {
  TEST_CASE("random elections") {
    std::mt19937_64 rng(41);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t n = 1 + rng() % 9;
      std::vector<std::pair<std::string, std::uint64_t>> counts;
      for (std::size_t i = 0; i < n; ++i) counts.emplace_back("P" + std::to_string(i), rng() % 5000);
      const auto result = ElectionResult::from_counts(counts);
      std::uint64_t total = 0;
      for (const auto& c : counts) total += c.second;
      if (total == 0) continue;

      SeatAllocation alloc;
      try {
        alloc = allocate(result);
      } catch (const PluralityTie&) {
        continue;
      } catch (const NoQualifyingParty&) {
        continue;
      }
      ++checked;
      CHECK(alloc.total() == 300);

      std::vector<std::uint64_t> qualifying_votes;
      std::vector<std::size_t> qualifying_ids;
      for (std::size_t i = 0; i < n; ++i) {
        if (alloc.qualifying[i]) {
          qualifying_votes.push_back(counts[i].second);
          qualifying_ids.push_back(i);
        } else {
          CHECK(alloc.seats[i] == 0);
          CHECK(counts[i].second * 100 < 3 * total);
        }
      }
      const auto expected = hare_by_integers(qualifying_votes, 250);
      std::size_t top = 0;
      for (std::size_t i = 1; i < n; ++i) {
        if (counts[i].second > counts[top].second) top = i;
      }
      CHECK(alloc.winner == top);
      for (std::size_t k = 0; k < qualifying_ids.size(); ++k) {
        const std::size_t i = qualifying_ids[k];
        const std::uint64_t bonus = i == top ? 50 : 0;
        CHECK(alloc.seats[i] == expected[k] + bonus);
        // Quota rule: floor or ceiling of the proportional entitlement.
        const Rational hare = alloc.hare_quotas[i];
        const Rational got(alloc.seats[i] - bonus);
        CHECK(got >= hare - 1);
        CHECK(got <= hare + 1);
      }
    }
    CHECK(checked > 300);
  }
}
