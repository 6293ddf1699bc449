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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wvg {

/// Published two-decimal values for one index, keyed by party name.
struct Golden {
  IndexKind kind = IndexKind::SSI;
  std::vector<std::pair<std::string, std::string>> values;
};

struct Scenario {
  std::string name;
  std::string description;
  WeightedVotingGame game;
  std::optional<CommunicationGraph> graph;
  std::optional<ElectionResult> election;
  std::vector<Golden> goldens;
  std::vector<std::string> notes;

  const Golden* golden_for(IndexKind kind) const;
};

/// Goldens are printed at two decimals; entries agree when within one unit in the last place.
inline constexpr unsigned kGoldenPrecision = 2;
inline const Rational kGoldenTolerance{1, 100};

std::vector<std::string> scenario_names();

/// Throws UnknownScenario.
Scenario load_scenario(std::string_view name);

struct GoldenComparison {
  IndexKind kind = IndexKind::SSI;
  std::string party;
  Rational computed;              // exact value
  std::string computed_rendered;  // at kGoldenPrecision
  std::string golden;
  Rational delta;                 // rendered computed minus golden
  bool within_tolerance = false;

  friend bool operator==(const GoldenComparison&, const GoldenComparison&) = default;
};

/// One entry per golden value whose index appears in `reports`.
std::vector<GoldenComparison> compare_to_goldens(const Scenario& scenario, std::span<const IndexReport> reports,
                                                 const Rational& tolerance = kGoldenTolerance);

}  // namespace wvg
