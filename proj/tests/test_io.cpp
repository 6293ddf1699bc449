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
#include "wvg/io.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace wvg;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_game_document(text);
  } catch (const ParseError& e) {
    return e.location();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("game document") {
    const auto doc = parse_game_document(R"({
      "name": "toy",
      "quota": 3,
      "parties": [{"name": "A", "weight": 2}, {"name": "B", "weight": 1}, {"name": "C", "weight": 1}],
      "edges": [["A", "B"]]
    })");
    CHECK(doc.name == "toy");
    CHECK(doc.quota == 3);
    CHECK(doc.parties.size() == 3);
    const auto loaded = resolve(doc);
    CHECK(loaded.game.weight(0) == 2);
    REQUIRE(loaded.graph);
    CHECK(loaded.graph->has_edge(0, 1));
    CHECK(loaded.warnings.empty());
    CHECK(parse_game_document(write_game_document(doc)) == doc);
  }

  TEST_CASE("parse errors carry a location") {
    CHECK(error_of("{\"quota\": 3, \"colour\": 1}") == "colour");
    CHECK(error_of("{\n  \"quota\": 3,\n  \"parties\": [}\n") .rfind("line 3, column", 0) == 0);
    CHECK(error_of(R"({"quota": 3, "parties": [{"name": "A", "weight": 1}, {"name": "B", "weight": -1}]})") ==
          "parties[1].weight");
    CHECK(error_of(R"({"votes": [{"name": "A", "percent": "5", "count": 3}]})") == "votes[0]");
    CHECK(error_of(R"({"votes": [{"name": "A", "percent": "5"}, {"name": "B", "count": 3}]})") == "votes");
    CHECK(error_of(R"({"total_votes": 10})") == "total_votes");
    CHECK(error_of(R"({"edges": [["A"]]})") == "edges[0]");
  }

  TEST_CASE("resolve") {
    auto doc = parse_game_document(R"({"quota": 2, "parties": [{"name": "A", "weight": 1}, {"name": "B", "weight": 1},
                                       {"name": "C", "weight": 0}], "edges": [["A", "D"]]})");
    CHECK_THROWS_AS(resolve(doc), InvalidGraph);
    doc.edges.clear();
    const auto loaded = resolve(doc);
    CHECK(loaded.warnings.size() == 1);
    CHECK(resolve(doc, 1).warnings.size() == 2);
    doc.quota.reset();
    CHECK_THROWS_AS(resolve(doc), ParseError);

    const auto votes = parse_game_document(R"({"quota": 151, "votes": [
      {"name": "A", "percent": 40}, {"name": "B", "percent": "35.5"}, {"name": "C", "percent": 2}]})");
    const auto from_votes = resolve(votes);
    CHECK(from_votes.game.size() == 2);
    CHECK(from_votes.game.total_weight() == 300);
    REQUIRE(from_votes.allocation);
    CHECK(from_votes.allocation->seats_of("C") == 0);
  }

  TEST_CASE("game literal") {
    const auto doc = parse_game_literal("[151; 108, 52, 41]");
    CHECK(doc.quota == 151);
    CHECK(doc.parties == std::vector<Party>{{"P1", 108}, {"P2", 52}, {"P3", 41}});
    CHECK(parse_game_literal("[3; A:2, B=1]").parties == std::vector<Party>{{"A", 2}, {"B", 1}});
    CHECK_THROWS_AS(parse_game_literal("151; 108"), ParseError);
    CHECK_THROWS_AS(parse_game_literal("[151 108]"), ParseError);
    CHECK_THROWS_AS(parse_game_literal("[151; x]"), ParseError);
  }

  TEST_CASE("render delta") {
    CHECK(render_delta(Rational(0), 2) == "0");
    CHECK(render_delta(Rational(1, 100), 2) == "+0.01");
    CHECK(render_delta(Rational(-7, 100), 2) == "-0.07");
  }

  TEST_CASE("machine output round-trips") {
    const WeightedVotingGame g({{"A", 2}, {"B", 1}, {"C", 1}}, 3);
    ReportDocument report;
    report.source = "toy";
    report.parties = g.parties();
    report.quota = 3;
    report.engine = "dp";
    report.indices = {shapley_shubik(g), banzhaf(g, false), holler_pgi(g)};
    report.warnings = {"note"};
    const auto back = from_machine(to_machine(report));
    CHECK(back == report);
    CHECK(to_machine(back) == to_machine(report));
    CHECK_THROWS_AS(from_machine("{"), ParseError);
  }
}

TEST_SUITE("io properties") {
  TEST_CASE("csv round-trips exact values") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 60; ++trial) {
      const auto g = oracle::random_game(rng, 1, 9, 90, true).game();
      ReportDocument report;
      report.parties = g.parties();
      report.quota = g.quota();
      report.indices = {shapley_shubik(g), banzhaf(g, false), coleman_prevent(g), deegan_packel(g)};
      const auto back = from_csv(to_csv(report));
      REQUIRE(back.size() == report.indices.size());
      for (std::size_t k = 0; k < back.size(); ++k) {
        CHECK(back[k].kind == report.indices[k].kind);
        CHECK(back[k].parties == report.indices[k].parties);
        CHECK(back[k].values == report.indices[k].values);
      }
    }
  }

  TEST_CASE("game documents round-trip") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 60; ++trial) {
      const auto g = oracle::random_game(rng, 1, 12, 500, false).game();
      GameDocument doc;
      doc.name = "g" + std::to_string(trial);
      doc.quota = g.quota();
      doc.parties = g.parties();
      CHECK(parse_game_document(write_game_document(doc)) == doc);
      CHECK(resolve(doc).game == g);
    }
  }
}
