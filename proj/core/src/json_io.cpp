#include "nfg/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nfg {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& message) {
  throw_error(Errc::ParseError, message);
}

const json& require_field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) {
    parse_fail(std::string("missing field \"") + name + "\"");
  }
  return *it;
}

std::vector<std::string> string_array(const json& node, const char* field) {
  if (!node.is_array()) {
    parse_fail(std::string("field \"") + field + "\" must be an array");
  }
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) {
      parse_fail(std::string("field \"") + field +
                 "\" must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

// Flattens the nested payoff arrays in row-major order, checking the length
// at every level against the strategy counts.
void flatten_payoffs(const json& node, const std::vector<std::size_t>& dims,
                     std::size_t depth, std::size_t n_players,
                     std::vector<double>& out) {
  if (!node.is_array()) {
    parse_fail("field \"payoffs\": expected an array at nesting depth " +
               std::to_string(depth));
  }
  if (depth == dims.size()) {
    if (node.size() != n_players) {
      parse_fail("field \"payoffs\": innermost array has " +
                 std::to_string(node.size()) + " numbers, expected one per "
                 "player (" + std::to_string(n_players) + ")");
    }
    for (const auto& value : node) {
      if (!value.is_number()) {
        parse_fail("field \"payoffs\": expected a number, got " +
                   std::string(value.type_name()));
      }
      out.push_back(value.get<double>());
    }
    return;
  }
  if (node.size() != dims[depth]) {
    parse_fail("field \"payoffs\": array at depth " + std::to_string(depth) +
               " has length " + std::to_string(node.size()) + ", expected " +
               std::to_string(dims[depth]));
  }
  for (const auto& child : node) {
    flatten_payoffs(child, dims, depth + 1, n_players, out);
  }
}

json nest_payoffs(const NormalFormGame& game, StrategyProfile& profile,
                  std::size_t depth) {
  json node = json::array();
  if (depth == game.num_players()) {
    for (double v : game.source_payoffs(profile)) {
      node.push_back(v == 0.0 ? 0.0 : v);
    }
    return node;
  }
  for (std::size_t s = 0; s < game.num_strategies(depth); ++s) {
    profile.indices[depth] = s;
    node.push_back(nest_payoffs(game, profile, depth + 1));
  }
  profile.indices[depth] = 0;
  return node;
}

}  // namespace

NormalFormGame game_from_json_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!doc.is_object()) {
    parse_fail("game file must hold a single JSON object");
  }

  auto players = string_array(require_field(doc, "players"), "players");

  const json& strat_node = require_field(doc, "strategies");
  if (!strat_node.is_array()) {
    parse_fail("field \"strategies\" must be an array of arrays");
  }
  if (strat_node.size() != players.size()) {
    parse_fail("field \"strategies\" has " +
               std::to_string(strat_node.size()) + " entries for " +
               std::to_string(players.size()) + " players");
  }
  std::vector<std::vector<std::string>> strategies;
  for (const auto& entry : strat_node) {
    strategies.push_back(string_array(entry, "strategies"));
  }

  const json& orient_node = require_field(doc, "orientation");
  if (!orient_node.is_string()) {
    parse_fail("field \"orientation\" must be a string");
  }
  const std::string orient_text = orient_node.get<std::string>();
  Orientation orientation;
  if (orient_text == "maximize") {
    orientation = Orientation::maximize;
  } else if (orient_text == "minimize") {
    orientation = Orientation::minimize;
  } else {
    parse_fail("field \"orientation\" must be \"maximize\" or \"minimize\", "
               "got \"" + orient_text + "\"");
  }

  std::vector<std::size_t> dims;
  for (const auto& list : strategies) dims.push_back(list.size());
  std::vector<double> payoffs;
  flatten_payoffs(require_field(doc, "payoffs"), dims, 0, players.size(),
                  payoffs);

  return NormalFormGame(std::move(players), std::move(strategies),
                        std::move(payoffs), orientation);
}

std::string game_to_json_text(const NormalFormGame& game, int indent) {
  json doc;
  doc["players"] = game.players();
  json strategies = json::array();
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    strategies.push_back(game.strategy_labels(p));
  }
  doc["strategies"] = std::move(strategies);
  doc["orientation"] = orientation_name(game.orientation());
  StrategyProfile cursor = game.first_profile();
  doc["payoffs"] = nest_payoffs(game, cursor, 0);
  return doc.dump(indent);
}

NormalFormGame read_game_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw_error(Errc::FileNotFound,
                "cannot open game file \"" + path.string() + "\"");
  }
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return game_from_json_text(text.str());
  } catch (const GameError& e) {
    if (e.code() == Errc::ParseError) {
      throw GameError(Errc::ParseError,
                      path.string() + ": " + std::string(e.what()));
    }
    throw;
  }
}

void write_game_file(const std::filesystem::path& path,
                     const NormalFormGame& game) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw_error(Errc::FileNotFound,
                "cannot write game file \"" + path.string() + "\"");
  }
  out << game_to_json_text(game, 1) << '\n';
}

}  // namespace nfg
