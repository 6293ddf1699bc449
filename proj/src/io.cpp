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

#include "wvg/io.hpp"

#include "wvg/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <set>
#include <sstream>

namespace wvg {

using Json = nlohmann::ordered_json;

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

void reject_unknown_keys(const Json& object, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& item : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw ParseError(path.empty() ? item.key() : path + "." + item.key(), "unknown key");
    }
  }
}

const Json& require(const Json& object, const std::string& path, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) throw ParseError(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string as_string(const Json& value, const std::string& path) {
  if (!value.is_string()) throw ParseError(path, "expected a string");
  return value.get<std::string>();
}

std::uint64_t as_unsigned(const Json& value, const std::string& path) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer()) throw ParseError(path, "must be non-negative");
  throw ParseError(path, "expected an integer");
}

// Keeps the literal as written; floats re-serialize to their shortest round-trip form.
std::string as_decimal_text(const Json& value, const std::string& path) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number()) return value.dump();
  throw ParseError(path, "expected a decimal number");
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Json report_to_json(const IndexReport& r) {
  Json values = Json::array();
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    values.push_back({{"party", r.parties[i]}, {"exact", to_fraction_string(r.values[i])}, {"rendered", r.rendered[i]}});
  }
  Json ranking = Json::array();
  for (const auto& group : r.ranking) {
    Json names = Json::array();
    for (PartyId id : group) names.push_back(r.parties[id]);
    ranking.push_back(std::move(names));
  }
  return {{"index", std::string(to_string(r.kind))}, {"precision", r.precision}, {"values", std::move(values)},
          {"ranking", std::move(ranking)}};
}

IndexKind kind_from(const Json& j, const std::string& path) {
  const std::string name = as_string(j, path);
  const auto kind = index_kind_from_string(name);
  if (!kind) throw ParseError(path, "unknown index '" + name + "'");
  return *kind;
}

IndexReport report_from_json(const Json& j, const std::string& path) {
  IndexReport r;
  r.kind = kind_from(require(j, path, "index"), path + ".index");
  r.precision = static_cast<unsigned>(as_unsigned(require(j, path, "precision"), path + ".precision"));
  const Json& values = require(j, path, "values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string p = at(path + ".values", i);
    r.parties.push_back(as_string(require(values[i], p, "party"), p + ".party"));
    r.values.push_back(parse_rational(as_string(require(values[i], p, "exact"), p + ".exact")));
    r.rendered.push_back(as_string(require(values[i], p, "rendered"), p + ".rendered"));
  }
  for (const Json& group : require(j, path, "ranking")) {
    std::vector<PartyId> ids;
    for (const Json& name : group) {
      const auto it = std::find(r.parties.begin(), r.parties.end(), name.get<std::string>());
      if (it == r.parties.end()) throw ParseError(path + ".ranking", "unknown party in ranking");
      ids.push_back(static_cast<PartyId>(it - r.parties.begin()));
    }
    r.ranking.push_back(std::move(ids));
  }
  return r;
}

std::string ranking_text(const IndexReport& r) {
  std::string out;
  for (std::size_t g = 0; g < r.ranking.size(); ++g) {
    if (g > 0) out += " > ";
    for (std::size_t k = 0; k < r.ranking[g].size(); ++k) {
      if (k > 0) out += " = ";
      out += r.parties[r.ranking[g][k]];
    }
  }
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  out.push_back(std::move(field));
  return out;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::uint64_t parse_literal_integer(const std::string& text, const std::string& what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("game literal", "invalid " + what + " '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw ParseError("game literal", what + " '" + text + "' is too large");
  }
}

}  // namespace

GameDocument parse_game_document(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(line_column(text, e.byte > 0 ? e.byte - 1 : 0), "invalid JSON");
  }
  if (!root.is_object()) throw ParseError("", "game file must be a JSON object");
  reject_unknown_keys(root, "", {"name", "description", "quota", "parties", "edges", "votes", "total_votes"});

  GameDocument doc;
  if (root.contains("name")) doc.name = as_string(root["name"], "name");
  if (root.contains("description")) doc.description = as_string(root["description"], "description");
  if (root.contains("quota")) doc.quota = as_unsigned(root["quota"], "quota");

  if (root.contains("parties")) {
    const Json& parties = root["parties"];
    if (!parties.is_array()) throw ParseError("parties", "expected an array");
    for (std::size_t i = 0; i < parties.size(); ++i) {
      const std::string path = at("parties", i);
      if (!parties[i].is_object()) throw ParseError(path, "expected an object");
      reject_unknown_keys(parties[i], path, {"name", "weight"});
      doc.parties.push_back({as_string(require(parties[i], path, "name"), path + ".name"),
                             as_unsigned(require(parties[i], path, "weight"), path + ".weight")});
    }
  }

  if (root.contains("edges")) {
    const Json& edges = root["edges"];
    if (!edges.is_array()) throw ParseError("edges", "expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string path = at("edges", i);
      if (!edges[i].is_array() || edges[i].size() != 2) throw ParseError(path, "expected a pair of party names");
      doc.edges.emplace_back(as_string(edges[i][0], path + "[0]"), as_string(edges[i][1], path + "[1]"));
    }
  }

  if (root.contains("votes")) {
    const Json& votes = root["votes"];
    if (!votes.is_array()) throw ParseError("votes", "expected an array");
    for (std::size_t i = 0; i < votes.size(); ++i) {
      const std::string path = at("votes", i);
      if (!votes[i].is_object()) throw ParseError(path, "expected an object");
      reject_unknown_keys(votes[i], path, {"name", "percent", "count"});
      const std::string name = as_string(require(votes[i], path, "name"), path + ".name");
      const bool has_percent = votes[i].contains("percent");
      const bool has_count = votes[i].contains("count");
      if (has_percent == has_count) throw ParseError(path, "give exactly one of 'percent' or 'count'");
      if (has_percent) {
        const std::string text = as_decimal_text(votes[i]["percent"], path + ".percent");
        try {
          (void)parse_rational(text);
        } catch (const std::invalid_argument& e) {
          throw ParseError(path + ".percent", e.what());
        }
        doc.vote_percents.emplace_back(name, text);
      } else {
        doc.vote_counts.emplace_back(name, as_unsigned(votes[i]["count"], path + ".count"));
      }
    }
    if (!doc.vote_percents.empty() && !doc.vote_counts.empty()) {
      throw ParseError("votes", "mixes 'percent' and 'count' entries");
    }
  }
  if (root.contains("total_votes")) {
    if (doc.vote_counts.empty()) throw ParseError("total_votes", "only valid with vote counts");
    doc.total_votes = as_unsigned(root["total_votes"], "total_votes");
  }
  return doc;
}

GameDocument parse_game_literal(std::string_view literal) {
  const std::string body = trim(literal);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw ParseError("game literal", "expected [quota; w1, w2, ...]");
  }
  const std::string inner = body.substr(1, body.size() - 2);
  const auto semi = inner.find(';');
  if (semi == std::string::npos) throw ParseError("game literal", "missing ';' after the quota");

  GameDocument doc;
  doc.quota = parse_literal_integer(trim(inner.substr(0, semi)), "quota");
  std::stringstream items(inner.substr(semi + 1));
  std::string item;
  std::size_t index = 0;
  while (std::getline(items, item, ',')) {
    ++index;
    item = trim(item);
    const auto sep = item.find_first_of(":=");
    if (sep == std::string::npos) {
      doc.parties.push_back({"P" + std::to_string(index), parse_literal_integer(item, "weight")});
    } else {
      doc.parties.push_back({trim(item.substr(0, sep)), parse_literal_integer(trim(item.substr(sep + 1)), "weight")});
    }
  }
  if (doc.parties.empty()) throw ParseError("game literal", "no weights");
  return doc;
}

std::string write_game_document(const GameDocument& doc) {
  Json root = Json::object();
  if (!doc.name.empty()) root["name"] = doc.name;
  if (!doc.description.empty()) root["description"] = doc.description;
  if (doc.quota) root["quota"] = *doc.quota;
  if (!doc.parties.empty()) {
    Json parties = Json::array();
    for (const Party& p : doc.parties) parties.push_back({{"name", p.name}, {"weight", p.weight}});
    root["parties"] = std::move(parties);
  }
  if (!doc.edges.empty()) {
    Json edges = Json::array();
    for (const auto& [a, b] : doc.edges) edges.push_back(Json::array({a, b}));
    root["edges"] = std::move(edges);
  }
  if (!doc.vote_percents.empty() || !doc.vote_counts.empty()) {
    Json votes = Json::array();
    for (const auto& [name, pct] : doc.vote_percents) votes.push_back({{"name", name}, {"percent", pct}});
    for (const auto& [name, count] : doc.vote_counts) votes.push_back({{"name", name}, {"count", count}});
    root["votes"] = std::move(votes);
  }
  if (doc.total_votes) root["total_votes"] = *doc.total_votes;
  return root.dump(2) + "\n";
}

GameDocument to_document(const Scenario& scenario) {
  GameDocument doc;
  doc.name = scenario.name;
  doc.description = scenario.description;
  doc.quota = scenario.game.quota();
  doc.parties = scenario.game.parties();
  if (scenario.graph) {
    for (const auto& [a, b] : scenario.graph->edges()) {
      doc.edges.emplace_back(scenario.game.party(a).name, scenario.game.party(b).name);
    }
  }
  if (scenario.election) {
    for (const VoteShare& v : scenario.election->entries) {
      doc.vote_percents.emplace_back(v.party, render_decimal(v.share * 100, 2));
    }
  }
  return doc;
}

LoadedGame resolve(const GameDocument& doc, std::optional<Weight> quota_override) {
  std::optional<ElectionResult> election;
  if (!doc.vote_percents.empty()) election = ElectionResult::from_percentages(doc.vote_percents);
  if (!doc.vote_counts.empty()) election = ElectionResult::from_counts(doc.vote_counts, doc.total_votes);

  const std::optional<Weight> quota = quota_override ? quota_override : doc.quota;
  if (!quota) throw ParseError("quota", "missing (set it in the file or with --quota)");

  std::optional<SeatAllocation> allocation;
  std::vector<Party> parties = doc.parties;
  if (parties.empty()) {
    if (!election) throw ParseError("parties", "missing (give parties or votes)");
    allocation = allocate(*election);
    for (std::size_t i = 0; i < allocation->parties.size(); ++i) {
      if (allocation->qualifying[i]) parties.push_back({allocation->parties[i], allocation->seats[i]});
    }
  }

  LoadedGame out{WeightedVotingGame(std::move(parties), *quota), std::nullopt, std::move(election),
                 std::move(allocation), {}};
  if (!doc.edges.empty()) {
    CommunicationGraph graph(out.game.size());
    for (const auto& [a, b] : doc.edges) graph.add_edge(out.game, a, b);
    out.graph = std::move(graph);
  }
  if (out.election && out.allocation == std::nullopt) {
    for (const VoteShare& v : out.election->entries) {
      if (!out.game.find(v.party)) throw ParseError("votes", "unknown party '" + v.party + "'");
    }
  }
  if (!out.game.is_majority()) {
    out.warnings.push_back("quota " + std::to_string(out.game.quota()) + " is at most half of the total weight " +
                           std::to_string(out.game.total_weight()) +
                           "; a winning coalition's complement may also win");
  }
  for (const Party& p : out.game.parties()) {
    if (p.weight == 0) out.warnings.push_back("party " + p.name + " has zero weight and is a null player");
  }
  return out;
}

bool operator==(const ReportDocument& a, const ReportDocument& b) {
  return a.source == b.source && a.parties == b.parties && a.quota == b.quota && a.engine == b.engine &&
         a.precision == b.precision && a.indices == b.indices && a.warnings == b.warnings &&
         a.golden_diff == b.golden_diff && a.tool_version == b.tool_version;
}

std::string to_machine(const ReportDocument& report) {
  Json parties = Json::array();
  for (const Party& p : report.parties) parties.push_back({{"name", p.name}, {"weight", p.weight}});
  Json indices = Json::array();
  for (const IndexReport& r : report.indices) indices.push_back(report_to_json(r));
  Json root = {{"source", report.source},
               {"game", {{"quota", report.quota}, {"parties", std::move(parties)}}},
               {"engine", report.engine},
               {"precision", report.precision},
               {"indices", std::move(indices)},
               {"warnings", report.warnings}};
  if (!report.golden_diff.empty()) {
    Json diff = Json::array();
    for (const GoldenComparison& c : report.golden_diff) {
      diff.push_back({{"index", std::string(to_string(c.kind))},
                      {"party", c.party},
                      {"computed", to_fraction_string(c.computed)},
                      {"rendered", c.computed_rendered},
                      {"golden", c.golden},
                      {"delta", to_fraction_string(c.delta)},
                      {"within_tolerance", c.within_tolerance}});
    }
    root["golden_diff"] = std::move(diff);
  }
  if (report.tool_version) root["tool_version"] = *report.tool_version;
  return root.dump(2) + "\n";
}

ReportDocument from_machine(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(line_column(text, e.byte > 0 ? e.byte - 1 : 0), "invalid JSON");
  }
  ReportDocument r;
  r.source = as_string(require(root, "", "source"), "source");
  const Json& game = require(root, "", "game");
  r.quota = as_unsigned(require(game, "game", "quota"), "game.quota");
  const Json& parties = require(game, "game", "parties");
  for (std::size_t i = 0; i < parties.size(); ++i) {
    const std::string p = at("game.parties", i);
    r.parties.push_back({as_string(require(parties[i], p, "name"), p + ".name"),
                         as_unsigned(require(parties[i], p, "weight"), p + ".weight")});
  }
  r.engine = as_string(require(root, "", "engine"), "engine");
  r.precision = static_cast<unsigned>(as_unsigned(require(root, "", "precision"), "precision"));
  const Json& indices = require(root, "", "indices");
  for (std::size_t i = 0; i < indices.size(); ++i) r.indices.push_back(report_from_json(indices[i], at("indices", i)));
  for (const Json& w : require(root, "", "warnings")) r.warnings.push_back(w.get<std::string>());
  if (root.contains("golden_diff")) {
    const Json& diff = root["golden_diff"];
    for (std::size_t i = 0; i < diff.size(); ++i) {
      const std::string p = at("golden_diff", i);
      GoldenComparison c;
      c.kind = kind_from(require(diff[i], p, "index"), p + ".index");
      c.party = as_string(require(diff[i], p, "party"), p + ".party");
      c.computed = parse_rational(as_string(require(diff[i], p, "computed"), p + ".computed"));
      c.computed_rendered = as_string(require(diff[i], p, "rendered"), p + ".rendered");
      c.golden = as_string(require(diff[i], p, "golden"), p + ".golden");
      c.delta = parse_rational(as_string(require(diff[i], p, "delta"), p + ".delta"));
      c.within_tolerance = require(diff[i], p, "within_tolerance").get<bool>();
      r.golden_diff.push_back(std::move(c));
    }
  }
  if (root.contains("tool_version")) r.tool_version = as_string(root["tool_version"], "tool_version");
  return r;
}

std::string to_csv(const ReportDocument& report) {
  std::ostringstream out;
  out << "index,party,value,numerator,denominator\n";
  for (const IndexReport& r : report.indices) {
    for (std::size_t i = 0; i < r.values.size(); ++i) {
      out << to_string(r.kind) << ',' << csv_field(r.parties[i]) << ',' << r.rendered[i] << ','
          << boost::multiprecision::numerator(r.values[i]) << ',' << boost::multiprecision::denominator(r.values[i])
          << '\n';
    }
  }
  return out.str();
}

std::vector<IndexReport> from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "index,party,value,numerator,denominator") {
    throw ParseError("line 1", "unexpected CSV header");
  }
  struct Pending {
    IndexKind kind;
    std::vector<std::string> parties;
    std::vector<Rational> values;
    unsigned precision = 0;
  };
  std::vector<Pending> pending;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    const std::string where = "line " + std::to_string(line_no);
    if (fields.size() != 5) throw ParseError(where, "expected 5 fields");
    const auto kind = index_kind_from_string(fields[0]);
    if (!kind) throw ParseError(where, "unknown index '" + fields[0] + "'");
    if (pending.empty() || pending.back().kind != *kind) pending.push_back({*kind, {}, {}, 0});
    Pending& p = pending.back();
    p.parties.push_back(fields[1]);
    try {
      p.values.push_back(parse_rational(fields[3] + "/" + fields[4]));
    } catch (const std::invalid_argument& e) {
      throw ParseError(where, e.what());
    }
    const auto dot = fields[2].find('.');
    p.precision = dot == std::string::npos ? 0 : static_cast<unsigned>(fields[2].size() - dot - 1);
  }
  std::vector<IndexReport> out;
  for (Pending& p : pending) out.push_back(make_report(p.kind, std::move(p.parties), std::move(p.values), p.precision));
  return out;
}

std::string render_delta(const Rational& delta, unsigned places) {
  if (delta == 0) return "0";
  const std::string text = render_decimal(delta, places);
  return delta > 0 ? "+" + text : text;
}

std::string format_golden_line(const GoldenComparison& c) {
  return c.party + " " + std::string(to_string(c.kind)) + " = " + c.computed_rendered + ", golden " + c.golden +
         ", delta " + render_delta(c.delta, kGoldenPrecision) + (c.within_tolerance ? "" : "  MISMATCH");
}

std::string to_table(const ReportDocument& report) {
  std::ostringstream out;
  out << "Game: " << report.source << "  [" << report.quota << ";";
  for (std::size_t i = 0; i < report.parties.size(); ++i) out << (i == 0 ? " " : ", ") << report.parties[i].weight;
  out << "]\n";
  out << "Engine: " << report.engine << "\n\n";

  std::size_t name_width = 6;
  for (const Party& p : report.parties) name_width = std::max(name_width, p.name.size());
  std::vector<std::size_t> widths;
  for (const IndexReport& r : report.indices) {
    std::size_t w = to_string(r.kind).size();
    for (const std::string& s : r.rendered) w = std::max(w, s.size());
    widths.push_back(w);
  }

  out << std::left << std::setw(static_cast<int>(name_width)) << "Party" << "  " << std::right << std::setw(8)
      << "Weight";
  for (std::size_t k = 0; k < report.indices.size(); ++k) {
    out << "  " << std::setw(static_cast<int>(widths[k])) << to_string(report.indices[k].kind);
  }
  out << '\n';
  for (std::size_t i = 0; i < report.parties.size(); ++i) {
    out << std::left << std::setw(static_cast<int>(name_width)) << report.parties[i].name << "  " << std::right
        << std::setw(8) << report.parties[i].weight;
    for (std::size_t k = 0; k < report.indices.size(); ++k) {
      out << "  " << std::setw(static_cast<int>(widths[k])) << report.indices[k].rendered_of(report.parties[i].name);
    }
    out << '\n';
  }
  if (!report.indices.empty()) out << '\n';
  for (const IndexReport& r : report.indices) out << "Ranking " << to_string(r.kind) << ": " << ranking_text(r) << '\n';
  for (const std::string& w : report.warnings) out << "warning: " << w << '\n';
  if (!report.golden_diff.empty()) {
    out << "\nGolden comparison (tolerance " << render_decimal(kGoldenTolerance, kGoldenPrecision) << "):\n";
    for (const GoldenComparison& c : report.golden_diff) out << "  " << format_golden_line(c) << '\n';
  }
  if (report.tool_version) out << "wvg " << *report.tool_version << '\n';
  return out.str();
}

}  // namespace wvg
