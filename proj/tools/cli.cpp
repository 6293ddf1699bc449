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

#include "cli.hpp"

#include "wvg/apportionment.hpp"
#include "wvg/errors.hpp"
#include "wvg/indices.hpp"
#include "wvg/io.hpp"
#include "wvg/myerson.hpp"
#include "wvg/scenarios.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#ifndef WVG_VERSION
#define WVG_VERSION "unknown"
#endif

namespace wvg::cli {

namespace {

enum class EngineChoice { Oracle, Dp, Both };
enum class OutputFormat { Table, Csv, Machine };

struct ComputeOptions {
  std::string indices;
  std::optional<Weight> quota;
  unsigned precision = 2;
  EngineChoice engine = EngineChoice::Dp;
  OutputFormat output = OutputFormat::Table;
  std::size_t max_players = EnumerationLimits{}.max_exhaustive_players;
  bool emit_version = false;
};

const std::map<std::string, std::vector<IndexKind>>& index_aliases() {
  static const std::map<std::string, std::vector<IndexKind>> aliases{
      {"ssi", {IndexKind::SSI}},
      {"shapley-shubik", {IndexKind::SSI}},
      {"banzhaf", {IndexKind::BanzhafNorm}},
      {"banzhaf-abs", {IndexKind::BanzhafAbs}},
      {"pgi", {IndexKind::PGI}},
      {"holler", {IndexKind::PGI}},
      {"deegan-packel", {IndexKind::DeeganPackel}},
      {"coleman", {IndexKind::ColemanPrevent, IndexKind::ColemanInitiate}},
      {"coleman-prevent", {IndexKind::ColemanPrevent}},
      {"coleman-initiate", {IndexKind::ColemanInitiate}},
      {"myerson", {IndexKind::Myerson}},
      {"all",
       {IndexKind::SSI, IndexKind::BanzhafAbs, IndexKind::BanzhafNorm, IndexKind::PGI, IndexKind::DeeganPackel,
        IndexKind::ColemanPrevent, IndexKind::ColemanInitiate, IndexKind::Myerson}},
  };
  return aliases;
}

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<IndexKind> parse_indices(const std::string& text, bool has_graph) {
  std::vector<IndexKind> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::transform(item.begin(), item.end(), item.begin(), [](unsigned char c) { return std::tolower(c); });
    const auto it = index_aliases().find(item);
    if (it == index_aliases().end()) throw UsageError("unknown index '" + item + "'");
    for (IndexKind k : it->second) {
      if (k == IndexKind::Myerson && item == "all" && !has_graph) continue;
      if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    }
  }
  if (out.empty()) throw UsageError("no indices selected");
  return out;
}

bool needs_swings(IndexKind k) {
  return k == IndexKind::SSI || k == IndexKind::BanzhafAbs || k == IndexKind::BanzhafNorm ||
         k == IndexKind::ColemanPrevent || k == IndexKind::ColemanInitiate;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot read file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string engine_name(EngineChoice e) {
  switch (e) {
    case EngineChoice::Oracle:
      return "oracle";
    case EngineChoice::Dp:
      return "dp";
    case EngineChoice::Both:
      return "both";
  }
  return "dp";
}

ReportDocument compute_report(const std::string& source, const WeightedVotingGame& game,
                              const std::optional<CommunicationGraph>& graph, const std::vector<IndexKind>& kinds,
                              const ComputeOptions& opts) {
  EnumerationLimits limits;
  limits.max_exhaustive_players = opts.max_players;

  std::optional<SwingProfile> profile;
  const bool want_swings = std::any_of(kinds.begin(), kinds.end(), needs_swings);
  if (want_swings || opts.engine == EngineChoice::Both) {
    if (opts.engine == EngineChoice::Both) {
      SwingProfile dp = swing_profile_dp(game, limits);
      SwingProfile oracle = swing_profile_oracle(game, limits);
      if (!(dp == oracle)) throw EngineMismatch("oracle and dp engines disagree on swing counts");
      profile = std::move(dp);
    } else {
      profile = swing_profile(game, opts.engine == EngineChoice::Oracle ? Engine::Oracle : Engine::Dp, limits);
    }
  }
  std::optional<std::vector<Coalition>> minimal;
  auto minimal_winning = [&]() -> const std::vector<Coalition>& {
    if (!minimal) minimal = enumerate_minimal_winning(game, limits);
    return *minimal;
  };

  ReportDocument doc;
  doc.source = source;
  doc.parties = game.parties();
  doc.quota = game.quota();
  doc.engine = engine_name(opts.engine);
  doc.precision = opts.precision;
  for (IndexKind kind : kinds) {
    IndexReport r;
    switch (kind) {
      case IndexKind::SSI:
        r = shapley_shubik(game, *profile);
        break;
      case IndexKind::BanzhafAbs:
        r = banzhaf(game, *profile, false);
        break;
      case IndexKind::BanzhafNorm:
        r = banzhaf(game, *profile, true);
        break;
      case IndexKind::ColemanPrevent:
        r = coleman_prevent(game, *profile);
        break;
      case IndexKind::ColemanInitiate:
        r = coleman_initiate(game, *profile);
        break;
      case IndexKind::PGI:
        r = holler_pgi(game, minimal_winning());
        break;
      case IndexKind::DeeganPackel:
        r = deegan_packel(game, minimal_winning());
        break;
      case IndexKind::Myerson:
        if (!graph) throw UsageError("the Myerson index needs edges in the game file");
        r = myerson_index(game, *graph, limits);
        break;
    }
    r.render(opts.precision);
    doc.indices.push_back(std::move(r));
  }
  if (opts.emit_version) doc.tool_version = WVG_VERSION;
  return doc;
}

void emit(const ReportDocument& doc, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Table:
      out << to_table(doc);
      break;
    case OutputFormat::Csv:
      out << to_csv(doc);
      break;
    case OutputFormat::Machine:
      out << to_machine(doc);
      break;
  }
}

void add_compute_flags(CLI::App& cmd, ComputeOptions& opts, std::optional<std::uint64_t>& quota) {
  cmd.add_option("--indices", opts.indices,
                 "Comma-separated: ssi, banzhaf, banzhaf-abs, pgi, deegan-packel, coleman, coleman-prevent, "
                 "coleman-initiate, myerson, all");
  cmd.add_option("--quota", quota, "Override the quota")->check(CLI::PositiveNumber);
  cmd.add_option("--precision", opts.precision, "Decimal places in rendered values")->check(CLI::Range(0, 30));
  const std::map<std::string, EngineChoice> engines{
      {"oracle", EngineChoice::Oracle}, {"dp", EngineChoice::Dp}, {"both", EngineChoice::Both}};
  cmd.add_option("--engine", opts.engine, "Swing-count engine: oracle, dp, or both (cross-checked)")
      ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
  const std::map<std::string, OutputFormat> outputs{
      {"table", OutputFormat::Table}, {"csv", OutputFormat::Csv}, {"machine", OutputFormat::Machine}};
  cmd.add_option("--output", opts.output, "table, csv, or machine (JSON)")
      ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));
  cmd.add_option("--max-players", opts.max_players, "Player cap for exhaustive enumeration");
  cmd.add_flag("--emit-version", opts.emit_version, "Include the tool version in the output");
}

std::string apportion_table(const SeatAllocation& a, const ElectionResult& e) {
  std::ostringstream out;
  std::size_t width = 6;
  for (const std::string& p : a.parties) width = std::max(width, p.size());
  out << std::left << std::setw(static_cast<int>(width)) << "Party" << std::right << std::setw(10) << "Votes %"
      << std::setw(12) << "Hare quota" << std::setw(8) << "Seats" << "  Qualifies\n";
  for (std::size_t i = 0; i < a.parties.size(); ++i) {
    out << std::left << std::setw(static_cast<int>(width)) << a.parties[i] << std::right << std::setw(10)
        << render_decimal(e.entries[i].share * 100, 2) << std::setw(12) << render_decimal(a.hare_quotas[i], 2)
        << std::setw(8) << a.seats[i] << "  " << (a.qualifying[i] ? "yes" : "no")
        << (i == a.winner ? "  (plurality bonus +" + std::to_string(a.bonus_seats) + ")" : "") << '\n';
  }
  out << std::left << std::setw(static_cast<int>(width)) << "Total" << std::right << std::setw(30) << a.total()
      << '\n';
  return out.str();
}

std::string apportion_machine(const SeatAllocation& a, const ElectionResult& e) {
  nlohmann::ordered_json parties = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < a.parties.size(); ++i) {
    parties.push_back({{"name", a.parties[i]},
                       {"share", to_fraction_string(e.entries[i].share)},
                       {"hare_quota", to_fraction_string(a.hare_quotas[i])},
                       {"seats", a.seats[i]},
                       {"qualifying", static_cast<bool>(a.qualifying[i])}});
  }
  nlohmann::ordered_json root = {
      {"parties", std::move(parties)}, {"winner", a.parties[a.winner]}, {"total_seats", a.total()}};
  return root.dump(2) + "\n";
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const EnumerationTooLarge*>(&e) || dynamic_cast<const EngineInfeasible*>(&e) ||
      dynamic_cast<const EngineMismatch*>(&e) || dynamic_cast<const DegenerateGame*>(&e)) {
    return kInfeasible;
  }
  return kUsageOrParse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power indices for weighted voting games", "wvg"};
  app.set_version_flag("--version", WVG_VERSION);
  app.require_subcommand(1);

  ComputeOptions compute_opts;
  std::optional<std::uint64_t> compute_quota;
  std::string game_path;
  std::string game_literal;
  CLI::App* compute = app.add_subcommand("compute", "Compute indices for a game file or literal");
  compute->add_option("file", game_path, "Game file (JSON)");
  compute->add_option("--game-literal", game_literal, "Inline game such as \"[151; 108, 52, 41]\"");
  add_compute_flags(*compute, compute_opts, compute_quota);

  ComputeOptions scenario_opts;
  std::optional<std::uint64_t> scenario_quota;
  std::string scenario_name;
  bool check = false;
  CLI::App* scenario = app.add_subcommand("scenario", "Run a bundled scenario and compare with published values");
  scenario->add_option("name", scenario_name, "Scenario name (see list-scenarios)")->required();
  scenario->add_flag("--check", check, "Exit with status 3 if any value misses its golden");
  add_compute_flags(*scenario, scenario_opts, scenario_quota);

  std::string election_path;
  std::optional<std::uint64_t> emit_quota;
  OutputFormat apportion_output = OutputFormat::Table;
  CLI::App* apportion = app.add_subcommand("apportion", "Allocate 300 seats from national vote shares");
  apportion->add_option("file", election_path, "Game file with votes")->required();
  apportion->add_option("--emit-game", emit_quota, "Print the induced game file at this quota instead")
      ->check(CLI::PositiveNumber);
  const std::map<std::string, OutputFormat> apportion_outputs{{"table", OutputFormat::Table},
                                                              {"machine", OutputFormat::Machine}};
  apportion->add_option("--output", apportion_output, "table or machine")
      ->transform(CLI::CheckedTransformer(apportion_outputs, CLI::ignore_case));

  CLI::App* list = app.add_subcommand("list-scenarios", "List bundled scenarios");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    std::ostringstream message;
    const int code = app.exit(e, out, message);
    err << message.str();
    return code == 0 ? kSuccess : kUsageOrParse;
  }

  try {
    if (*list) {
      for (const std::string& name : scenario_names()) {
        const Scenario s = load_scenario(name);
        out << std::left << std::setw(10) << name << "  " << s.description << '\n';
      }
      return kSuccess;
    }

    if (*compute) {
      compute_opts.quota = compute_quota;
      if (game_path.empty() == game_literal.empty()) throw UsageError("give exactly one of a game file or --game-literal");
      const GameDocument doc = game_literal.empty() ? parse_game_document(read_file(game_path))
                                                    : parse_game_literal(game_literal);
      const LoadedGame loaded = resolve(doc, compute_opts.quota);
      const std::string default_indices = loaded.graph ? "ssi,banzhaf,pgi,deegan-packel,coleman,myerson"
                                                       : "ssi,banzhaf,pgi,deegan-packel,coleman";
      const auto kinds = parse_indices(compute_opts.indices.empty() ? default_indices : compute_opts.indices,
                                       loaded.graph.has_value());
      const std::string source = !doc.name.empty() ? doc.name : (game_literal.empty() ? game_path : game_literal);
      ReportDocument report = compute_report(source, loaded.game, loaded.graph, kinds, compute_opts);
      report.warnings = loaded.warnings;
      emit(report, compute_opts.output, out);
      return kSuccess;
    }

    if (*scenario) {
      const Scenario s = load_scenario(scenario_name);
      WeightedVotingGame game = scenario_quota ? s.game.with_quota(*scenario_quota) : s.game;
      std::vector<IndexKind> kinds;
      if (scenario_opts.indices.empty()) {
        for (const Golden& g : s.goldens) kinds.push_back(g.kind);
      } else {
        kinds = parse_indices(scenario_opts.indices, s.graph.has_value());
      }
      ReportDocument report = compute_report(s.name, game, s.graph, kinds, scenario_opts);
      for (const std::string& note : s.notes) report.warnings.push_back("note: " + note);
      // Goldens describe the published quota only.
      if (!scenario_quota || *scenario_quota == s.game.quota()) {
        report.golden_diff = compare_to_goldens(s, report.indices);
      }
      emit(report, scenario_opts.output, out);
      const bool mismatch = std::any_of(report.golden_diff.begin(), report.golden_diff.end(),
                                        [](const GoldenComparison& c) { return !c.within_tolerance; });
      return check && mismatch ? kGoldenMismatch : kSuccess;
    }

    if (*apportion) {
      const GameDocument doc = parse_game_document(read_file(election_path));
      std::optional<ElectionResult> election;
      if (!doc.vote_percents.empty()) election = ElectionResult::from_percentages(doc.vote_percents);
      if (!doc.vote_counts.empty()) election = ElectionResult::from_counts(doc.vote_counts, doc.total_votes);
      if (!election) throw ParseError("votes", "missing");
      const SeatAllocation allocation = allocate(*election);
      if (emit_quota) {
        GameDocument induced;
        induced.name = doc.name;
        induced.quota = *emit_quota;
        induced.parties = allocation.to_game(*emit_quota).parties();
        out << write_game_document(induced);
      } else if (apportion_output == OutputFormat::Machine) {
        out << apportion_machine(allocation, *election);
      } else {
        out << apportion_table(allocation, *election);
      }
      return kSuccess;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kUsageOrParse;
}

}  // namespace wvg::cli
