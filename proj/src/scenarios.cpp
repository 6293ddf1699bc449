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

#include "wvg/scenarios.hpp"

#include "wvg/errors.hpp"

#include <array>

namespace wvg {

namespace {

// Column order of the published tables.
constexpr std::array<std::string_view, 7> kTableOrder{"KKE", "SYRIZA", "DIMAR", "PASOK", "ND", "ANEL", "GD"};

Golden row(IndexKind kind, std::array<std::string_view, 7> printed) {
  Golden g;
  g.kind = kind;
  for (std::size_t i = 0; i < kTableOrder.size(); ++i) {
    g.values.emplace_back(std::string(kTableOrder[i]), std::string(printed[i]));
  }
  return g;
}

// Links from party statements before and between the 2012 elections.
CommunicationGraph coalition_links(const WeightedVotingGame& game) {
  CommunicationGraph g(game.size());
  g.add_edge(game, "KKE", "SYRIZA");
  g.add_edge(game, "SYRIZA", "DIMAR");
  g.add_edge(game, "SYRIZA", "ANEL");
  g.add_edge(game, "DIMAR", "PASOK");
  g.add_edge(game, "DIMAR", "ND");
  g.add_edge(game, "PASOK", "ND");
  return g;
}

std::vector<Party> june_parliament() {
  return {{"ND", 129}, {"SYRIZA", 71}, {"PASOK", 33}, {"ANEL", 20}, {"GD", 18}, {"DIMAR", 17}, {"KKE", 12}};
}

const char* const kVoterLevelLink =
    "The KKE-SYRIZA link reflects voter flows rather than a party-level agreement.";

Scenario may2012() {
  WeightedVotingGame game({{"ND", 108}, {"SYRIZA", 52}, {"PASOK", 41}, {"ANEL", 33}, {"KKE", 26}, {"GD", 21},
                           {"DIMAR", 19}},
                          151);
  CommunicationGraph graph = coalition_links(game);
  ElectionResult election = ElectionResult::from_percentages({{"ND", "18.85"},
                                                              {"SYRIZA", "16.78"},
                                                              {"PASOK", "13.18"},
                                                              {"ANEL", "10.60"},
                                                              {"KKE", "8.48"},
                                                              {"GD", "6.97"},
                                                              {"DIMAR", "6.11"}});
  return Scenario{
      "may2012",
      "Greek Parliament after the 6 May 2012 election, simple majority (151 of 300)",
      std::move(game),
      std::move(graph),
      std::move(election),
      {row(IndexKind::SSI, {"0.09", "0.16", "0.06", "0.09", "0.46", "0.09", "0.06"}),
       row(IndexKind::PGI, {"0.15", "0.10", "0.13", "0.15", "0.21", "0.15", "0.13"}),
       row(IndexKind::Myerson, {"0.05", "0.18", "0.22", "0.18", "0.32", "0.05", "0"})},
      {kVoterLevelLink,
       "The published Myerson row is not reproduced by the Shapley value of the link-restricted game; "
       "the same graph reproduces the June row."},
  };
}

Scenario june2012() {
  WeightedVotingGame game(june_parliament(), 151);
  CommunicationGraph graph = coalition_links(game);
  ElectionResult election = ElectionResult::from_percentages({{"ND", "29.00"},
                                                              {"SYRIZA", "26.89"},
                                                              {"PASOK", "12.28"},
                                                              {"ANEL", "7.51"},
                                                              {"GD", "6.92"},
                                                              {"DIMAR", "6.25"},
                                                              {"KKE", "4.5"}});
  return Scenario{
      "june2012",
      "Greek Parliament after the June 2012 election, simple majority (151 of 300)",
      std::move(game),
      std::move(graph),
      std::move(election),
      {row(IndexKind::SSI, {"0.06", "0.12", "0.06", "0.12", "0.52", "0.06", "0.06"}),
       row(IndexKind::PGI, {"0.14", "0.12", "0.14", "0.12", "0.19", "0.14", "0.14"}),
       row(IndexKind::Myerson, {"0.03", "0.12", "0.12", "0.28", "0.42", "0.03", "0"})},
      {kVoterLevelLink,
       "Seats are the published ones. Re-apportioning the printed vote shares gives ND 128 and SYRIZA 72 "
       "(printed: 129 and 71)."},
  };
}

Scenario dec2014() {
  return Scenario{
      "dec2014",
      "Presidential vote of December 2014 in the June 2012 Parliament, enhanced majority (180 of 300)",
      WeightedVotingGame(june_parliament(), 180),
      std::nullopt,
      std::nullopt,
      {row(IndexKind::SSI, {"0.01", "0.16", "0.03", "0.08", "0.63", "0.05", "0.03"}),
       row(IndexKind::PGI, {"0.06", "0.06", "0.12", "0.19", "0.31", "0.12", "0.12"}),
       row(IndexKind::ColemanPrevent, {"0.02", "0.36", "0.06", "0.23", "1", "0.11", "0.11"}),
       row(IndexKind::ColemanInitiate, {"0.01", "0.21", "0.04", "0.14", "0.58", "0.06", "0.06"})},
      {"Seat weights of the June 2012 Parliament; later MP defections are not modelled."},
  };
}

}  // namespace

const Golden* Scenario::golden_for(IndexKind kind) const {
  for (const Golden& g : goldens) {
    if (g.kind == kind) return &g;
  }
  return nullptr;
}

std::vector<std::string> scenario_names() { return {"may2012", "june2012", "dec2014"}; }

Scenario load_scenario(std::string_view name) {
  if (name == "may2012") return may2012();
  if (name == "june2012") return june2012();
  if (name == "dec2014") return dec2014();
  throw UnknownScenario("unknown scenario '" + std::string(name) + "' (known: may2012, june2012, dec2014)");
}

std::vector<GoldenComparison> compare_to_goldens(const Scenario& scenario, std::span<const IndexReport> reports,
                                                 const Rational& tolerance) {
  std::vector<GoldenComparison> out;
  for (const IndexReport& report : reports) {
    const Golden* golden = scenario.golden_for(report.kind);
    if (golden == nullptr) continue;
    for (const auto& [party, printed] : golden->values) {
      GoldenComparison c;
      c.kind = report.kind;
      c.party = party;
      c.computed = report.value_of(party);
      c.computed_rendered = render_decimal(c.computed, kGoldenPrecision);
      c.golden = printed;
      c.delta = round_to_places(c.computed, kGoldenPrecision) - parse_rational(printed);
      c.within_tolerance = abs(c.delta) <= tolerance;
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace wvg
