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

#include "wvg/myerson.hpp"

#include "wvg/errors.hpp"

#include <bit>
#include <string>

namespace wvg {

namespace {

void require_majority(const WeightedVotingGame& game) {
  if (!game.is_majority()) {
    throw NonMajorityBase("restricted game needs 2q > total weight (q=" + std::to_string(game.quota()) +
                          ", total=" + std::to_string(game.total_weight()) + ")");
  }
}

void require_matching(const WeightedVotingGame& game, const CommunicationGraph& graph) {
  if (graph.size() != game.size()) {
    throw InvalidGraph("graph has " + std::to_string(graph.size()) + " nodes, game has " +
                       std::to_string(game.size()) + " parties");
  }
}

// Component of s containing the lowest member of `seed`.
std::uint64_t grow_component(const CommunicationGraph& graph, std::uint64_t s, std::uint64_t seed) {
  std::uint64_t component = seed;
  std::uint64_t frontier = seed;
  while (frontier != 0) {
    const auto i = static_cast<PartyId>(std::countr_zero(frontier));
    frontier &= frontier - 1;
    const std::uint64_t fresh = graph.neighbours(i) & s & ~component;
    component |= fresh;
    frontier |= fresh;
  }
  return component;
}

template <class Visit>
void for_each_component(const CommunicationGraph& graph, std::uint64_t s, Visit&& visit) {
  std::uint64_t rest = s;
  while (rest != 0) {
    const std::uint64_t component = grow_component(graph, s, rest & (~rest + 1));
    rest &= ~component;
    visit(component);
  }
}

int evaluate(const WeightedVotingGame& game, const CommunicationGraph& graph, std::uint64_t s) {
  int total = 0;
  for_each_component(graph, s, [&](std::uint64_t c) { total += characteristic(game, Coalition(c)); });
  return total;
}

}  // namespace

CommunicationGraph::CommunicationGraph(std::size_t n) : adjacency_(n, 0) {
  if (n > kMaxPlayers) throw InvalidGraph("graphs are limited to " + std::to_string(kMaxPlayers) + " nodes");
}

CommunicationGraph CommunicationGraph::complete(std::size_t n) {
  CommunicationGraph g(n);
  for (PartyId a = 0; a < n; ++a) {
    for (PartyId b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

void CommunicationGraph::add_edge(PartyId a, PartyId b) {
  if (a >= size() || b >= size()) {
    throw InvalidGraph("edge endpoint out of range [0, " + std::to_string(size()) + ")");
  }
  if (a == b) return;
  adjacency_[a] |= std::uint64_t{1} << b;
  adjacency_[b] |= std::uint64_t{1} << a;
}

void CommunicationGraph::add_edge(const WeightedVotingGame& game, std::string_view a, std::string_view b) {
  const auto ia = game.find(a);
  const auto ib = game.find(b);
  if (!ia) throw InvalidGraph("edge names unknown party '" + std::string(a) + "'");
  if (!ib) throw InvalidGraph("edge names unknown party '" + std::string(b) + "'");
  add_edge(*ia, *ib);
}

bool CommunicationGraph::has_edge(PartyId a, PartyId b) const {
  return a < size() && b < size() && ((adjacency_[a] >> b) & 1U) != 0;
}

std::vector<std::pair<PartyId, PartyId>> CommunicationGraph::edges() const {
  std::vector<std::pair<PartyId, PartyId>> out;
  for (PartyId a = 0; a < size(); ++a) {
    for (PartyId b = a + 1; b < size(); ++b) {
      if (has_edge(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<Coalition> components(const CommunicationGraph& graph, Coalition s) {
  if (!s.is_subset_of(Coalition::full(graph.size()))) {
    throw InvalidCoalition("coalition has members outside the graph");
  }
  std::vector<Coalition> out;
  for_each_component(graph, s.bits(), [&](std::uint64_t c) { out.emplace_back(c); });
  return out;
}

int restricted_value(const WeightedVotingGame& game, const CommunicationGraph& graph, Coalition s) {
  require_majority(game);
  require_matching(game, graph);
  game.check(s);
  return evaluate(game, graph, s.bits());
}

RestrictedGame::RestrictedGame(WeightedVotingGame base, CommunicationGraph graph, const EnumerationLimits& limits)
    : base_(std::move(base)), graph_(std::move(graph)) {
  require_majority(base_);
  require_matching(base_, graph_);
  const std::size_t cap = std::min<std::size_t>(limits.max_myerson_players, 40);
  if (base_.size() > cap) {
    throw EnumerationTooLarge("restricted game tabulates 2^" + std::to_string(base_.size()) +
                              " coalitions; cap is n <= " + std::to_string(cap));
  }
  const std::uint64_t count = std::uint64_t{1} << base_.size();
  values_.resize(count);
  for (std::uint64_t s = 0; s < count; ++s) values_[s] = static_cast<std::uint8_t>(evaluate(base_, graph_, s));
}

int RestrictedGame::value(Coalition s) const {
  base_.check(s);
  return values_[s.bits()];
}

IndexReport myerson_index(const RestrictedGame& restricted) {
  const std::size_t n = restricted.size();
  const std::uint64_t count = std::uint64_t{1} << n;
  const std::span<const std::uint8_t> table = restricted.table();
  // marginal[i][s] = sum over |S| = s, i not in S, of v_E(S + i) - v_E(S).
  std::vector<std::vector<std::int64_t>> marginal(n, std::vector<std::int64_t>(n, 0));
  for (std::uint64_t s = 0; s < count; ++s) {
    const int base_value = table[s];
    const auto size = static_cast<std::size_t>(std::popcount(s));
    for (std::uint64_t outside = ~s & (count - 1); outside != 0; outside &= outside - 1) {
      const auto i = static_cast<PartyId>(std::countr_zero(outside));
      marginal[i][size] += table[s | (std::uint64_t{1} << i)] - base_value;
    }
  }

  const auto un = static_cast<unsigned>(n);
  const BigInt denominator = factorial(un);
  std::vector<Rational> values;
  values.reserve(n);
  for (PartyId i = 0; i < n; ++i) {
    BigInt numerator = 0;
    for (unsigned s = 0; s < un; ++s) {
      if (marginal[i][s] != 0) numerator += BigInt(marginal[i][s]) * factorial(s) * factorial(un - 1 - s);
    }
    values.emplace_back(numerator, denominator);
  }
  return make_report(IndexKind::Myerson, restricted.base().names(), std::move(values));
}

IndexReport myerson_index(const WeightedVotingGame& game, const CommunicationGraph& graph,
                          const EnumerationLimits& limits) {
  return myerson_index(RestrictedGame(game, graph, limits));
}

}  // namespace wvg
