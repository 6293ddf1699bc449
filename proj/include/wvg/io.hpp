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

#include "wvg/apportionment.hpp"
#include "wvg/game.hpp"
#include "wvg/indices.hpp"
#include "wvg/myerson.hpp"
#include "wvg/scenarios.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wvg {

/// Structured contents of a game file, before validation into a game.
///
/// JSON document with keys (all others are rejected):
///   name, description   optional strings
///   quota               positive integer
///   parties             [{"name": "ND", "weight": 108}, ...]
///   edges               [["KKE", "SYRIZA"], ...]
///   votes               [{"name": "ND", "percent": "18.85"}, ...] or [{"name": "ND", "count": 2000000}, ...]
///   total_votes         integer, only together with vote counts
struct GameDocument {
  std::string name;
  std::string description;
  std::optional<Weight> quota;
  std::vector<Party> parties;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, std::string>> vote_percents;
  std::vector<std::pair<std::string, std::uint64_t>> vote_counts;
  std::optional<std::uint64_t> total_votes;

  friend bool operator==(const GameDocument&, const GameDocument&) = default;
};

/// Throws ParseError carrying "line L, column C" for syntax errors or a field path such as
/// "parties[2].weight" for schema errors.
GameDocument parse_game_document(std::string_view text);

/// "[151; 108, 52, 41]" (parties named P1..Pn) or "[151; ND:108, SYRIZA:52]".
GameDocument parse_game_literal(std::string_view literal);

std::string write_game_document(const GameDocument& doc);

GameDocument to_document(const Scenario& scenario);

struct LoadedGame {
  WeightedVotingGame game;
  std::optional<CommunicationGraph> graph;
  std::optional<ElectionResult> election;
  std::optional<SeatAllocation> allocation;  // set when seats were derived from votes
  std::vector<std::string> warnings;
};

/// Validates a document into a game. Without parties the seats come from
/// apportioning the votes and only qualifying parties enter the game.
LoadedGame resolve(const GameDocument& doc, std::optional<Weight> quota_override = std::nullopt);

struct ReportDocument {
  std::string source;
  std::vector<Party> parties;
  Weight quota = 0;
  std::string engine;
  unsigned precision = 2;
  std::vector<IndexReport> indices;
  std::vector<std::string> warnings;
  std::vector<GoldenComparison> golden_diff;
  std::optional<std::string> tool_version;
};

bool operator==(const ReportDocument& a, const ReportDocument& b);

/// Single JSON document; exact values are "numerator/denominator" strings.
std::string to_machine(const ReportDocument& report);
ReportDocument from_machine(std::string_view text);

/// Tidy rows: index,party,value,numerator,denominator.
std::string to_csv(const ReportDocument& report);
std::vector<IndexReport> from_csv(std::string_view text);

std::string to_table(const ReportDocument& report);

/// "0" for zero, otherwise signed with the given decimals, e.g. "+0.01".
std::string render_delta(const Rational& delta, unsigned places);

std::string format_golden_line(const GoldenComparison& c);

}  // namespace wvg
