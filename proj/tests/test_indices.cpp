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

#include "wvg/errors.hpp"
#include "wvg/indices.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace wvg;

namespace {

WeightedVotingGame may_game() {
  return WeightedVotingGame({{"ND", 108}, {"SYRIZA", 52}, {"PASOK", 41}, {"ANEL", 33}, {"KKE", 26}, {"GD", 21},
                             {"DIMAR", 19}},
                            151);
}

WeightedVotingGame june_game(Weight quota = 151) {
  return WeightedVotingGame({{"ND", 129}, {"SYRIZA", 71}, {"PASOK", 33}, {"ANEL", 20}, {"GD", 18}, {"DIMAR", 17},
                             {"KKE", 12}},
                            quota);
}

WeightedVotingGame abc() { return WeightedVotingGame({{"A", 2}, {"B", 1}, {"C", 1}}, 3); }
WeightedVotingGame triple() { return WeightedVotingGame({{"1", 1}, {"2", 1}, {"3", 1}}, 2); }
WeightedVotingGame dictator() { return WeightedVotingGame({{"1", 60}, {"2", 40}}, 51); }

std::vector<Rational> R(std::initializer_list<std::pair<int, int>> fractions) {
  std::vector<Rational> out;
  for (auto [n, d] : fractions) out.emplace_back(n, d);
  return out;
}

std::vector<IndexReport> all_indices(const WeightedVotingGame& g, const SwingProfile& p) {
  return {shapley_shubik(g, p), banzhaf(g, p, false), banzhaf(g, p, true), coleman_prevent(g, p),
          coleman_initiate(g, p), holler_pgi(g), deegan_packel(g)};
}

std::vector<std::string> rendered_in(const IndexReport& r, std::initializer_list<const char*> order) {
  std::vector<std::string> out;
  for (const char* p : order) out.push_back(r.rendered_of(p));
  return out;
}

constexpr std::initializer_list<const char*> kTable = {"KKE", "SYRIZA", "DIMAR", "PASOK", "ND", "ANEL", "GD"};

}  // namespace

TEST_SUITE("power-indices") {
  TEST_CASE("shapley-shubik examples") {
    CHECK(shapley_shubik(triple()).values == R({{1, 3}, {1, 3}, {1, 3}}));
    // Pivot counts over the 3! orderings: A pivots in 4, B and C in 1 each.
    CHECK(shapley_shubik(abc()).values == R({{2, 3}, {1, 6}, {1, 6}}));
    CHECK(shapley_shubik(abc()).values == oracle::ssi_by_permutations({2, 1, 1}, 3));

    const auto may = shapley_shubik(may_game());
    CHECK(rendered_in(may, kTable) ==
          std::vector<std::string>{"0.09", "0.16", "0.06", "0.09", "0.46", "0.09", "0.06"});
    CHECK(may.sum() == 1);
    CHECK(may.value_of("ND") == Rational(16, 35));
  }

  TEST_CASE("banzhaf examples") {
    CHECK(banzhaf(triple(), false).values == R({{1, 2}, {1, 2}, {1, 2}}));
    CHECK(banzhaf(abc(), true).values == R({{3, 5}, {1, 5}, {1, 5}}));
    CHECK(banzhaf(may_game(), true).ranking == shapley_shubik(may_game()).ranking);
  }

  TEST_CASE("holler PGI examples") {
    CHECK(holler_pgi(triple()).values == R({{1, 3}, {1, 3}, {1, 3}}));
    CHECK(holler_pgi(abc()).values == R({{1, 2}, {1, 4}, {1, 4}}));
    const auto may = holler_pgi(may_game());
    CHECK(rendered_in(may, kTable) ==
          std::vector<std::string>{"0.15", "0.10", "0.13", "0.15", "0.21", "0.15", "0.13"});
    CHECK(may.sum() == 1);
  }

  TEST_CASE("deegan-packel examples") {
    CHECK(deegan_packel(abc()).values == R({{1, 2}, {1, 4}, {1, 4}}));
    CHECK(deegan_packel(dictator()).values == R({{1, 1}, {0, 1}}));
    // Rank agreement with PGI holds on the two simple-majority parliaments.
    CHECK(deegan_packel(may_game()).ranking == holler_pgi(may_game()).ranking);
    CHECK(deegan_packel(june_game()).ranking == holler_pgi(june_game()).ranking);
    // ...but not at the 180 quota, where values and order differ.
    CHECK(deegan_packel(june_game(180)).ranking != holler_pgi(june_game(180)).ranking);
  }

  TEST_CASE("coleman examples") {
    const auto dec = june_game(180);
    const auto prevent = coleman_prevent(dec);
    CHECK(prevent.value_of("ND") == 1);
    CHECK(rendered_in(prevent, kTable) ==
          std::vector<std::string>{"0.02", "0.36", "0.06", "0.23", "1.00", "0.11", "0.11"});
    const auto initiate = coleman_initiate(dec);
    CHECK(rendered_in(initiate, kTable) ==
          std::vector<std::string>{"0.01", "0.21", "0.04", "0.14", "0.58", "0.06", "0.06"});

    CHECK(coleman_prevent(dictator()).values == R({{1, 1}, {0, 1}}));
    CHECK(coleman_initiate(dictator()).values == R({{1, 1}, {0, 1}}));
    CHECK(coleman_prevent(abc()).values == R({{1, 1}, {1, 3}, {1, 3}}));
    CHECK(coleman_initiate(abc()).values == R({{3, 5}, {1, 5}, {1, 5}}));
  }

  TEST_CASE("coleman indices coincide on the decisive 151-seat parliaments") {
    for (const auto& g : {may_game(), june_game()}) {
      const auto p = swing_profile_dp(g);
      CHECK(p.winning_count == BigInt(64));
      CHECK(coleman_prevent(g, p).values == coleman_initiate(g, p).values);
    }
  }

  TEST_CASE("swing profile examples") {
    const auto p = swing_profile_dp(abc());
    CHECK(p.counts[0] == std::vector<BigInt>{0, 2, 1});
    CHECK(p.counts[1] == std::vector<BigInt>{0, 1, 0});
    CHECK(p.counts[2] == std::vector<BigInt>{0, 1, 0});
    CHECK(p.winning_count == 3);

    const WeightedVotingGame zero({{"A", 3}, {"Z", 0}, {"B", 2}}, 4);
    const auto zero_profile = swing_profile_dp(zero);
    for (const auto& c : zero_profile.counts[1]) CHECK(c == 0);

    const auto may = may_game();
    const auto c = catalog(may);
    const auto dp = swing_profile_dp(may);
    for (PartyId i = 0; i < may.size(); ++i) CHECK(dp.swings(i) == BigInt(c.swings_per_party[i]));
  }

  TEST_CASE("heavy party above the quota") {
    const WeightedVotingGame g({{"A", 10}, {"B", 1}, {"C", 1}}, 5);
    const auto dp = swing_profile_dp(g);
    CHECK(dp == swing_profile_oracle(g));
    CHECK(shapley_shubik(g, dp).values == R({{1, 1}, {0, 1}, {0, 1}}));
  }

  TEST_CASE("dp engine scales to 64 players") {
    std::vector<Party> parties;
    for (int i = 0; i < 64; ++i) parties.push_back({"P" + std::to_string(i), 1});
    const WeightedVotingGame g(parties, 33);
    const auto p = swing_profile_dp(g);
    const auto ssi = shapley_shubik(g, p);
    CHECK(ssi.sum() == 1);
    for (const Rational& v : ssi.values) CHECK(v == Rational(1, 64));
    // Party i is crucial exactly for the C(63, 32) coalitions of 32 others.
    CHECK(p.swings(0).str() == "916312070471295267");
    CHECK(banzhaf(g, p, false).values[0] == Rational(BigInt("916312070471295267"), BigInt(1) << 63));
    // Winning means at least 33 members: half of the subsets without the exact split.
    CHECK(p.winning_count == (BigInt(1) << 63) - BigInt("916312070471295267"));
  }

  TEST_CASE("dp memory budget and oracle cap") {
    EnumerationLimits limits;
    limits.dp_memory_budget_bytes = 1024;
    CHECK_THROWS_AS(swing_profile_dp(may_game(), limits), EngineInfeasible);
    limits.max_exhaustive_players = 5;
    CHECK_THROWS_AS(swing_profile_oracle(may_game(), limits), EnumerationTooLarge);
    CHECK_THROWS_AS(holler_pgi(may_game(), limits), EnumerationTooLarge);
  }

  TEST_CASE("index kind names round-trip") {
    for (auto k : {IndexKind::SSI, IndexKind::BanzhafAbs, IndexKind::BanzhafNorm, IndexKind::PGI,
                   IndexKind::DeeganPackel, IndexKind::ColemanInitiate, IndexKind::ColemanPrevent,
                   IndexKind::Myerson}) {
      CHECK(index_kind_from_string(to_string(k)) == k);
    }
    CHECK_FALSE(index_kind_from_string("Johnston").has_value());
  }

  TEST_CASE("ranking groups ties and never uses rounded values") {
    const std::vector<Rational> v = R({{1, 3}, {1, 2}, {1, 3}, {333, 1000}});
    const Ranking r = rank_descending(std::span<const Rational>(v));
    CHECK(r == Ranking{{1}, {0, 2}, {3}});
    const auto rep = make_report(IndexKind::SSI, {"a", "b", "c", "d"}, v);
    CHECK(rep.rendered[0] == rep.rendered[3]);
    CHECK(rep.ranking.size() == 3);
  }
}

TEST_SUITE("power-indices properties") {
  TEST_CASE("efficiency and non-negativity") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
      const auto g = oracle::random_game(rng, 1, 12, 60, trial % 2 == 0).game();
      const auto p = swing_profile_dp(g);
      CHECK(shapley_shubik(g, p).sum() == 1);
      CHECK(banzhaf(g, p, true).sum() == 1);
      CHECK(holler_pgi(g).sum() == 1);
      CHECK(deegan_packel(g).sum() == 1);
      for (const auto& r : all_indices(g, p)) {
        for (const Rational& v : r.values) CHECK(v >= 0);
      }
    }
  }

  TEST_CASE("symmetry: equal weights get equal values") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
      auto rg = oracle::random_game(rng, 2, 11, 40, false, 1);
      const std::size_t src = rng() % rg.weights.size();
      const std::size_t dst = (src + 1 + rng() % (rg.weights.size() - 1)) % rg.weights.size();
      rg.weights[dst] = rg.weights[src];
      const std::uint64_t total = std::accumulate(rg.weights.begin(), rg.weights.end(), std::uint64_t{0});
      rg.quota = 1 + rng() % total;
      const auto g = rg.game();
      for (const auto& r : all_indices(g, swing_profile_dp(g))) CHECK(r.values[src] == r.values[dst]);
    }
  }

  TEST_CASE("null players get zero everywhere") {
    std::mt19937_64 rng(23);
    int nulls = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto g = oracle::random_game(rng, 2, 10, 50, false).game();
      const auto p = swing_profile_dp(g);
      const auto reports = all_indices(g, p);
      for (PartyId i = 0; i < g.size(); ++i) {
        if (p.swings(i) != 0) continue;
        ++nulls;
        for (const auto& r : reports) CHECK(r.values[i] == 0);
      }
    }
    CHECK(nulls > 0);
  }

  TEST_CASE("weight order is never inverted by swing-based indices") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 150; ++trial) {
      const auto g = oracle::random_game(rng, 2, 12, 80, false).game();
      const auto p = swing_profile_dp(g);
      const auto ssi = shapley_shubik(g, p);
      const auto bz = banzhaf(g, p, false);
      const auto cp = coleman_prevent(g, p);
      const auto ci = coleman_initiate(g, p);
      for (PartyId i = 0; i < g.size(); ++i) {
        for (PartyId j = 0; j < g.size(); ++j) {
          if (g.weight(i) < g.weight(j)) continue;
          CHECK(p.swings(i) >= p.swings(j));
          for (std::size_t s = 0; s < g.size(); ++s) CHECK(p.counts[i][s] >= p.counts[j][s]);
          CHECK(ssi.values[i] >= ssi.values[j]);
          CHECK(bz.values[i] >= bz.values[j]);
          CHECK(cp.values[i] >= cp.values[j]);
          CHECK(ci.values[i] >= ci.values[j]);
        }
      }
    }
  }

  TEST_CASE("engines agree with the brute-force oracle") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 120; ++trial) {
      const auto rg = oracle::random_game(rng, 1, 13, 200, false);
      const auto g = rg.game();
      const auto expected = oracle::swing_counts(rg.weights, rg.quota);
      const auto dp = swing_profile_dp(g);
      const auto exhaustive = swing_profile_oracle(g);
      for (PartyId i = 0; i < g.size(); ++i) {
        for (std::size_t s = 0; s < g.size(); ++s) REQUIRE(dp.counts[i][s] == BigInt(expected[i][s]));
      }
      CHECK(dp == exhaustive);
      CHECK(dp.winning_count == BigInt(oracle::winning_count(rg.weights, rg.quota)));
    }
  }

  TEST_CASE("SSI matches permutation enumeration") {
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 40; ++trial) {
      const auto rg = oracle::random_game(rng, 1, 7, 30, false);
      CHECK(shapley_shubik(rg.game()).values == oracle::ssi_by_permutations(rg.weights, rg.quota));
    }
  }

  TEST_CASE("SSI and Banzhaf induce the same ranking on majority games") {
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 200; ++trial) {
      const auto g = oracle::random_game(rng, 1, 10, 100, true).game();
      const auto p = swing_profile_dp(g);
      CHECK(shapley_shubik(g, p).ranking == banzhaf(g, p, true).ranking);
    }
  }

  TEST_CASE("coleman ratios equal swing ratios") {
    std::mt19937_64 rng(28);
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = oracle::random_game(rng, 2, 10, 60, false).game();
      const auto p = swing_profile_dp(g);
      const auto cp = coleman_prevent(g, p);
      const auto ci = coleman_initiate(g, p);
      for (PartyId i = 0; i < g.size(); ++i) {
        for (PartyId j = 0; j < g.size(); ++j) {
          if (p.swings(j) == 0) continue;
          const Rational ratio(p.swings(i), p.swings(j));
          CHECK(cp.values[i] / cp.values[j] == ratio);
          CHECK(ci.values[i] / ci.values[j] == ratio);
        }
      }
    }
  }
}
