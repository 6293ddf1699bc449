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

#include "wvg/indices.hpp"

#include "exhaustive.hpp"
#include "wvg/errors.hpp"

#include <array>
#include <limits>
#include <stdexcept>
#include <utility>

namespace wvg {

namespace {

constexpr std::array<std::pair<IndexKind, std::string_view>, 8> kIndexNames{{
    {IndexKind::SSI, "SSI"},
    {IndexKind::BanzhafAbs, "BanzhafAbs"},
    {IndexKind::BanzhafNorm, "BanzhafNorm"},
    {IndexKind::PGI, "PGI"},
    {IndexKind::DeeganPackel, "DeeganPackel"},
    {IndexKind::ColemanInitiate, "ColemanInitiate"},
    {IndexKind::ColemanPrevent, "ColemanPrevent"},
    {IndexKind::Myerson, "Myerson"},
}};

BigInt power_of_two(std::size_t n) { return BigInt(1) << n; }

std::vector<BigInt> all_swings(const SwingProfile& profile) {
  std::vector<BigInt> eta;
  eta.reserve(profile.size());
  for (PartyId i = 0; i < profile.size(); ++i) eta.push_back(profile.swings(i));
  return eta;
}

void check_profile(const WeightedVotingGame& game, const SwingProfile& profile) {
  if (profile.size() != game.size()) throw std::invalid_argument("swing profile does not match the game");
}

std::vector<std::size_t> minimal_membership(const WeightedVotingGame& game,
                                            std::span<const Coalition> minimal_winning) {
  std::vector<std::size_t> counts(game.size(), 0);
  for (Coalition s : minimal_winning) {
    game.check(s);
    for (PartyId i : s.members()) ++counts[i];
  }
  return counts;
}

}  // namespace

std::string_view to_string(IndexKind kind) noexcept {
  for (const auto& [k, name] : kIndexNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<IndexKind> index_kind_from_string(std::string_view name) noexcept {
  for (const auto& [k, n] : kIndexNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(Engine engine) noexcept { return engine == Engine::Oracle ? "oracle" : "dp"; }

void IndexReport::render(unsigned places) {
  precision = places;
  rendered.clear();
  rendered.reserve(values.size());
  for (const Rational& v : values) rendered.push_back(render_decimal(v, places));
}

Rational IndexReport::sum() const {
  Rational total = 0;
  for (const Rational& v : values) total += v;
  return total;
}

const Rational& IndexReport::value_of(std::string_view party) const {
  for (std::size_t i = 0; i < parties.size(); ++i) {
    if (parties[i] == party) return values[i];
  }
  throw std::out_of_range("no party '" + std::string(party) + "' in report");
}

std::string IndexReport::rendered_of(std::string_view party) const {
  for (std::size_t i = 0; i < parties.size(); ++i) {
    if (parties[i] == party) return rendered[i];
  }
  throw std::out_of_range("no party '" + std::string(party) + "' in report");
}

IndexReport make_report(IndexKind kind, std::vector<std::string> parties, std::vector<Rational> values,
                        unsigned precision) {
  IndexReport r;
  r.kind = kind;
  r.parties = std::move(parties);
  r.values = std::move(values);
  r.ranking = rank_descending(std::span<const Rational>(r.values));
  r.render(precision);
  return r;
}

BigInt SwingProfile::swings(PartyId i) const {
  BigInt total = 0;
  for (const BigInt& c : counts.at(i)) total += c;
  return total;
}

SwingProfile swing_profile_dp(const WeightedVotingGame& game, const EnumerationLimits& limits) {
  const std::size_t n = game.size();
  const Weight q = game.quota();

  // T[k][w] for k = 0..n and w = 0..q-1, plus two scratch rows.
  const std::size_t rows = n + 3;
  const std::size_t max_cells = limits.dp_memory_budget_bytes / sizeof(std::uint64_t);
  if (q > max_cells / rows) {
    throw EngineInfeasible("dp table of " + std::to_string(rows) + " x " + std::to_string(q) +
                           " words exceeds the memory budget; use the oracle engine");
  }
  const auto width = static_cast<std::size_t>(q);

  // Every entry counts subsets of at most 64 parties of one fixed size, so it is
  // bounded by C(64, 32) < 2^64 and plain uint64 arithmetic is exact.
  std::vector<std::uint64_t> table((n + 1) * width, 0);
  auto row = [&](std::size_t k) { return table.data() + k * width; };
  row(0)[0] = 1;
  std::size_t inserted = 0;
  for (PartyId j = 0; j < n; ++j) {
    const Weight wj = game.weight(j);
    if (wj >= q) continue;
    const auto shift = static_cast<std::size_t>(wj);
    for (std::size_t k = inserted + 1; k-- > 0;) {
      const std::uint64_t* src = row(k);
      std::uint64_t* dst = row(k + 1);
      for (std::size_t w = width - shift; w-- > 0;) dst[w + shift] += src[w];
    }
    ++inserted;
  }

  SwingProfile out;
  out.counts.assign(n, std::vector<BigInt>(n, 0));

  BigInt losing = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    std::uint64_t row_sum = 0;
    for (std::size_t w = 0; w < width; ++w) row_sum += row(k)[w];
    losing += row_sum;
  }
  out.winning_count = power_of_two(n) - losing;

  std::vector<std::uint64_t> prev(width);
  std::vector<std::uint64_t> cur(width);
  for (PartyId i = 0; i < n; ++i) {
    const Weight wi = game.weight(i);
    if (wi == 0) continue;
    const bool in_table = wi < q;
    const auto shift = static_cast<std::size_t>(std::min(wi, q));
    const std::size_t lo = width - shift;  // swing interval is [q - w_i, q - 1]
    std::fill(prev.begin(), prev.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t* full = row(k);
      // Remove party i: U[k][w] = T[k][w] - U[k-1][w - w_i].
      for (std::size_t w = 0; w < width; ++w) {
        cur[w] = full[w] - (in_table && k > 0 && w >= shift ? prev[w - shift] : 0);
      }
      std::uint64_t swings = 0;
      for (std::size_t w = lo; w < width; ++w) swings += cur[w];
      out.counts[i][k] = swings;
      prev.swap(cur);
    }
  }
  return out;
}

SwingProfile swing_profile_oracle(const WeightedVotingGame& game, const EnumerationLimits& limits) {
  detail::require_exhaustive(game, limits.max_exhaustive_players, "oracle swing engine");
  const std::size_t n = game.size();
  const detail::WeightOrder order(game);
  std::vector<std::uint64_t> counts(n * n, 0);
  std::uint64_t winning = 0;
  detail::for_each_winning(game, order, [&](std::uint64_t mask, Weight weight) {
    ++winning;
    const auto s = static_cast<std::size_t>(std::popcount(mask)) - 1;
    detail::for_each_swing_member(order, mask, weight, game.quota(),
                                  [&](std::size_t k) { ++counts[order.original[k] * n + s]; });
  });

  SwingProfile out;
  out.counts.assign(n, std::vector<BigInt>(n, 0));
  for (PartyId i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < n; ++s) out.counts[i][s] = counts[i * n + s];
  }
  out.winning_count = winning;
  return out;
}

SwingProfile swing_profile(const WeightedVotingGame& game, Engine engine, const EnumerationLimits& limits) {
  return engine == Engine::Oracle ? swing_profile_oracle(game, limits) : swing_profile_dp(game, limits);
}

IndexReport shapley_shubik(const WeightedVotingGame& game, const SwingProfile& profile) {
  check_profile(game, profile);
  const auto n = static_cast<unsigned>(game.size());
  // Weight of a size-s coalition is s!(n-1-s)!/n!.
  std::vector<BigInt> weights(n);
  for (unsigned s = 0; s < n; ++s) weights[s] = factorial(s) * factorial(n - 1 - s);
  const BigInt denominator = factorial(n);
  std::vector<Rational> values;
  values.reserve(n);
  for (PartyId i = 0; i < n; ++i) {
    BigInt numerator = 0;
    for (unsigned s = 0; s < n; ++s) numerator += profile.counts[i][s] * weights[s];
    values.emplace_back(numerator, denominator);
  }
  return make_report(IndexKind::SSI, game.names(), std::move(values));
}

IndexReport banzhaf(const WeightedVotingGame& game, const SwingProfile& profile, bool normalized) {
  check_profile(game, profile);
  const std::vector<BigInt> eta = all_swings(profile);
  BigInt denominator = power_of_two(game.size() - 1);
  if (normalized) {
    denominator = 0;
    for (const BigInt& e : eta) denominator += e;
    if (denominator == 0) throw DegenerateGame("no party has a swing; normalized Banzhaf is undefined");
  }
  std::vector<Rational> values;
  values.reserve(eta.size());
  for (const BigInt& e : eta) values.emplace_back(e, denominator);
  return make_report(normalized ? IndexKind::BanzhafNorm : IndexKind::BanzhafAbs, game.names(), std::move(values));
}

IndexReport coleman_prevent(const WeightedVotingGame& game, const SwingProfile& profile) {
  check_profile(game, profile);
  if (profile.winning_count == 0) throw DegenerateGame("no winning coalitions");
  std::vector<Rational> values;
  for (const BigInt& e : all_swings(profile)) values.emplace_back(e, profile.winning_count);
  return make_report(IndexKind::ColemanPrevent, game.names(), std::move(values));
}

IndexReport coleman_initiate(const WeightedVotingGame& game, const SwingProfile& profile) {
  check_profile(game, profile);
  const BigInt losing = power_of_two(game.size()) - profile.winning_count;
  if (losing == 0) throw DegenerateGame("no losing coalitions");
  std::vector<Rational> values;
  for (const BigInt& e : all_swings(profile)) values.emplace_back(e, losing);
  return make_report(IndexKind::ColemanInitiate, game.names(), std::move(values));
}

IndexReport shapley_shubik(const WeightedVotingGame& game, Engine engine, const EnumerationLimits& limits) {
  return shapley_shubik(game, swing_profile(game, engine, limits));
}

IndexReport banzhaf(const WeightedVotingGame& game, bool normalized, Engine engine,
                    const EnumerationLimits& limits) {
  return banzhaf(game, swing_profile(game, engine, limits), normalized);
}

IndexReport coleman_prevent(const WeightedVotingGame& game, Engine engine, const EnumerationLimits& limits) {
  return coleman_prevent(game, swing_profile(game, engine, limits));
}

IndexReport coleman_initiate(const WeightedVotingGame& game, Engine engine, const EnumerationLimits& limits) {
  return coleman_initiate(game, swing_profile(game, engine, limits));
}

IndexReport holler_pgi(const WeightedVotingGame& game, std::span<const Coalition> minimal_winning) {
  const std::vector<std::size_t> m = minimal_membership(game, minimal_winning);
  std::size_t total = 0;
  for (std::size_t c : m) total += c;
  if (total == 0) throw DegenerateGame("no minimal winning coalitions");
  std::vector<Rational> values;
  values.reserve(m.size());
  for (std::size_t c : m) values.emplace_back(BigInt(c), BigInt(total));
  return make_report(IndexKind::PGI, game.names(), std::move(values));
}

IndexReport deegan_packel(const WeightedVotingGame& game, std::span<const Coalition> minimal_winning) {
  if (minimal_winning.empty()) throw DegenerateGame("no minimal winning coalitions");
  std::vector<Rational> values(game.size(), Rational(0));
  for (Coalition s : minimal_winning) {
    game.check(s);
    const Rational share(BigInt(1), BigInt(s.size()));
    for (PartyId i : s.members()) values[i] += share;
  }
  const Rational scale(BigInt(1), BigInt(minimal_winning.size()));
  for (Rational& v : values) v *= scale;
  return make_report(IndexKind::DeeganPackel, game.names(), std::move(values));
}

IndexReport holler_pgi(const WeightedVotingGame& game, const EnumerationLimits& limits) {
  const std::vector<Coalition> m = enumerate_minimal_winning(game, limits);
  return holler_pgi(game, m);
}

IndexReport deegan_packel(const WeightedVotingGame& game, const EnumerationLimits& limits) {
  const std::vector<Coalition> m = enumerate_minimal_winning(game, limits);
  return deegan_packel(game, m);
}

}  // namespace wvg
