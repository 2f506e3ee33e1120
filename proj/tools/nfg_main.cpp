// Command-line front end for the normal-form game solvers.
//
// Subcommands: solve, dominance, iesds, pareto (alias of solve), arms-race,
// dynamics. Output is a deterministic text report, or one JSON object with
// --json. Exit codes: 0 success, 2 parse/validation error, 3 game too large.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nfg/analysis.hpp"
#include "nfg/game.hpp"
#include "nfg/json_io.hpp"
#include "nfg/scenarios.hpp"

namespace {

using nfg::NormalFormGame;
using nfg::StrategyProfile;
using json = nlohmann::json;

struct OutputFlags {
  bool json = false;
  bool quiet = false;
};

// Up to 9 significant digits, trailing zeros trimmed, locale-free.
std::string fmt_num(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string fmt_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i];
  }
  return out;
}

std::vector<std::string> profile_labels(const NormalFormGame& game,
                                        const StrategyProfile& profile) {
  std::vector<std::string> out;
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    out.push_back(game.strategy_labels(p)[profile.indices[p]]);
  }
  return out;
}

std::string fmt_profile(const NormalFormGame& game,
                        const StrategyProfile& profile) {
  return "(" + fmt_list(profile_labels(game, profile)) + ")";
}

std::string fmt_payoffs(const NormalFormGame& game,
                        const StrategyProfile& profile) {
  std::string out = "(";
  const auto values = game.source_payoffs(profile);
  for (std::size_t p = 0; p < values.size(); ++p) {
    if (p > 0) out += ", ";
    out += fmt_num(values[p]);
  }
  return out + ")";
}

std::string fmt_probs(const std::vector<double>& probs) {
  std::string out = "(";
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (i > 0) out += ", ";
    out += fmt_num(probs[i]);
  }
  return out + ")";
}

void game_header(std::ostream& os, const NormalFormGame& game) {
  os << "players: " << fmt_list(game.players()) << "\n";
  os << "strategies:";
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    os << (p == 0 ? " " : "; ") << game.players()[p] << " = {"
       << fmt_list(game.strategy_labels(p)) << "}";
  }
  os << "\n";
  os << "orientation: " << nfg::orientation_name(game.orientation());
  if (game.orientation() == nfg::Orientation::minimize) {
    os << " (payoffs displayed as the source costs)";
  }
  os << "\n";
}

json game_json(const NormalFormGame& game) {
  return json::parse(nfg::game_to_json_text(game));
}

json profile_json(const NormalFormGame& game, const StrategyProfile& profile) {
  json entry;
  entry["profile"] = profile_labels(game, profile);
  entry["indices"] = profile.indices;
  entry["payoffs"] = game.source_payoffs(profile);
  return entry;
}

json mixed_json(const nfg::MixedProfile& mixed) {
  json probs = json::array();
  for (const auto& strategy : mixed.strategies) probs.push_back(strategy.probs);
  return probs;
}

// Renders the EquilibriumReport section shared by solve and arms-race.
void report_text(std::ostream& os, const NormalFormGame& game,
                 const nfg::EquilibriumReport& report) {
  if (report.pure_equilibria.empty()) {
    os << "no pure equilibria\n";
  } else {
    os << "pure Nash equilibria: " << report.pure_equilibria.size() << "\n";
    for (const auto& profile : report.pure_equilibria) {
      os << "  " << fmt_profile(game, profile) << "  payoffs "
         << fmt_payoffs(game, profile) << "\n";
    }
  }
  os << "dominant-strategy equilibrium: ";
  if (report.dominant_strategy_profile) {
    os << fmt_profile(game, *report.dominant_strategy_profile) << "\n";
  } else {
    os << "none\n";
  }
  os << "Pareto-optimal profiles: " << report.pareto_optimal.size() << "\n";
  for (const auto& profile : report.pareto_optimal) {
    os << "  " << fmt_profile(game, profile) << "  payoffs "
       << fmt_payoffs(game, profile) << "\n";
  }
  if (game.num_players() == 2 && game.num_strategies(0) == 2 &&
      game.num_strategies(1) == 2) {
    os << "mixed equilibria (2x2): " << report.mixed_equilibria.size() << "\n";
    for (const auto& mixed : report.mixed_equilibria) {
      os << " ";
      for (std::size_t p = 0; p < game.num_players(); ++p) {
        os << (p == 0 ? " " : "; ") << game.players()[p] << " = "
           << fmt_probs(mixed.strategies[p].probs);
      }
      os << "\n";
    }
    if (report.mixed_degenerate) {
      os << "note: degenerate 2x2 game, interior indifference equilibrium "
            "undefined\n";
    }
  }
}

json report_json(const NormalFormGame& game,
                 const nfg::EquilibriumReport& report) {
  json out;
  out["pure_equilibria"] = json::array();
  for (const auto& profile : report.pure_equilibria) {
    out["pure_equilibria"].push_back(profile_json(game, profile));
  }
  if (report.dominant_strategy_profile) {
    out["dominant_strategy_profile"] =
        profile_json(game, *report.dominant_strategy_profile);
  } else {
    out["dominant_strategy_profile"] = nullptr;
  }
  out["pareto_optimal"] = json::array();
  for (const auto& profile : report.pareto_optimal) {
    out["pareto_optimal"].push_back(profile_json(game, profile));
  }
  if (game.num_players() == 2 && game.num_strategies(0) == 2 &&
      game.num_strategies(1) == 2) {
    out["mixed_equilibria"] = json::array();
    for (const auto& mixed : report.mixed_equilibria) {
      out["mixed_equilibria"].push_back(mixed_json(mixed));
    }
    out["mixed_degenerate"] = report.mixed_degenerate;
  }
  return out;
}

void dynamics_text(std::ostream& os, const NormalFormGame& game,
                   const nfg::DynamicsTrajectory& trajectory) {
  os << "trajectory: " << trajectory.states.size() << " states\n";
  for (const auto& state : trajectory.states) {
    os << "  " << fmt_profile(game, state) << "  payoffs "
       << fmt_payoffs(game, state) << "\n";
  }
  os << "converged: " << (trajectory.converged ? "yes" : "no") << " (after "
     << trajectory.steps_taken << " player updates)\n";
}

json dynamics_json(const NormalFormGame& game,
                   const nfg::DynamicsTrajectory& trajectory) {
  json out;
  out["states"] = json::array();
  for (const auto& state : trajectory.states) {
    out["states"].push_back(profile_labels(game, state));
  }
  out["converged"] = trajectory.converged;
  out["steps_taken"] = trajectory.steps_taken;
  return out;
}

void emit(const OutputFlags& flags, const json& machine,
          const std::string& text) {
  if (flags.quiet) return;
  if (flags.json) {
    std::cout << machine.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

StrategyProfile resolve_profile(const NormalFormGame& game,
                                const std::string& text) {
  std::vector<std::string> labels;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      labels.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  labels.push_back(current);
  if (labels.size() != game.num_players()) {
    nfg::throw_error(nfg::Errc::BadFlag,
                     "profile \"" + text + "\" names " +
                         std::to_string(labels.size()) + " strategies for " +
                         std::to_string(game.num_players()) + " players");
  }
  StrategyProfile profile{std::vector<std::size_t>(game.num_players(), 0)};
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    auto index = game.find_strategy(p, labels[p]);
    if (!index) {
      nfg::throw_error(nfg::Errc::BadFlag,
                       "player \"" + game.players()[p] +
                           "\" has no strategy labeled \"" + labels[p] + "\"");
    }
    profile.indices[p] = *index;
  }
  return profile;
}

void maybe_export(const std::string& path, const NormalFormGame& game,
                  std::ostream& text) {
  if (path.empty()) return;
  nfg::write_game_file(path, game);
  text << "exported game to " << path << "\n";
}

int cmd_solve(const std::string& command, const std::string& path,
              const std::string& export_path, const OutputFlags& flags) {
  const NormalFormGame game = nfg::read_game_file(path);
  const auto report = nfg::analyze(game);

  std::ostringstream text;
  text << "command: " << command << "\n";
  text << "file: " << path << "\n";
  game_header(text, game);
  text << "\n";
  report_text(text, game, report);
  maybe_export(export_path, game, text);

  json machine;
  machine["command"] = command;
  machine["input"] = {{"path", path}, {"game", game_json(game)}};
  machine["results"] = report_json(game, report);
  emit(flags, machine, text.str());
  return 0;
}

int cmd_dominance(const std::string& path, const OutputFlags& flags) {
  const NormalFormGame game = nfg::read_game_file(path);

  std::ostringstream text;
  text << "command: dominance\n";
  text << "file: " << path << "\n";
  game_header(text, game);
  text << "\n";

  json players = json::array();
  bool any = false;
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    json entry;
    entry["player"] = game.players()[p];
    entry["strict"] = json::array();
    entry["weak_only"] = json::array();
    const auto& labels = game.strategy_labels(p);
    for (std::size_t a = 0; a < labels.size(); ++a) {
      for (std::size_t b = 0; b < labels.size(); ++b) {
        if (a == b) continue;
        if (nfg::strictly_dominates(game, p, a, b)) {
          any = true;
          entry["strict"].push_back({labels[a], labels[b]});
          text << game.players()[p] << ": " << labels[a]
               << " strictly dominates " << labels[b] << "\n";
        } else if (nfg::weakly_dominates(game, p, a, b)) {
          any = true;
          entry["weak_only"].push_back({labels[a], labels[b]});
          text << game.players()[p] << ": " << labels[a]
               << " weakly dominates " << labels[b] << "\n";
        }
      }
    }
    json strict_dom = json::array();
    json weak_dom = json::array();
    for (auto s : nfg::dominant_strategies(game, p, nfg::DominanceMode::strict))
      strict_dom.push_back(labels[s]);
    for (auto s : nfg::dominant_strategies(game, p, nfg::DominanceMode::weak))
      weak_dom.push_back(labels[s]);
    entry["strict_dominant"] = strict_dom;
    entry["weak_dominant"] = weak_dom;
    players.push_back(entry);
  }
  if (!any) text << "no dominance relations\n";
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    auto strict = nfg::dominant_strategies(game, p, nfg::DominanceMode::strict);
    text << "dominant strategies (strict): " << game.players()[p] << " = {";
    for (std::size_t i = 0; i < strict.size(); ++i) {
      if (i > 0) text << ", ";
      text << game.strategy_labels(p)[strict[i]];
    }
    text << "}\n";
  }

  json machine;
  machine["command"] = "dominance";
  machine["input"] = {{"path", path}, {"game", game_json(game)}};
  machine["results"] = {{"players", players}};
  emit(flags, machine, text.str());
  return 0;
}

int cmd_iesds(const std::string& path, const std::string& mode_name,
              const OutputFlags& flags) {
  const NormalFormGame game = nfg::read_game_file(path);
  const nfg::DominanceMode mode = mode_name == "weak"
                                      ? nfg::DominanceMode::weak
                                      : nfg::DominanceMode::strict;
  const auto result = nfg::iesds(game, mode);

  std::ostringstream text;
  text << "command: iesds\n";
  text << "file: " << path << "\n";
  game_header(text, game);
  text << "mode: " << nfg::dominance_mode_name(mode) << "\n\n";
  if (result.trace.steps.empty()) {
    text << "elimination trace: empty (no dominated strategies)\n";
    text << "game unchanged\n";
  } else {
    text << "elimination trace: " << result.trace.steps.size()
         << (result.trace.steps.size() == 1 ? " step\n" : " steps\n");
    for (const auto& step : result.trace.steps) {
      text << "  round " << step.round << ": " << game.players()[step.player]
           << " eliminates "
           << game.strategy_labels(step.player)[step.eliminated]
           << " (dominated by "
           << game.strategy_labels(step.player)[step.dominator] << ")\n";
    }
    text << "reduced game strategies:";
    for (std::size_t p = 0; p < game.num_players(); ++p) {
      text << (p == 0 ? " " : "; ") << game.players()[p] << " = {"
           << fmt_list(result.reduced.strategy_labels(p)) << "}";
    }
    text << "\n";
    if (result.reduced.profile_count() <= 64) {
      StrategyProfile profile = result.reduced.first_profile();
      do {
        text << "  " << fmt_profile(result.reduced, profile) << "  payoffs "
             << fmt_payoffs(result.reduced, profile) << "\n";
      } while (result.reduced.next_profile(profile));
    }
  }

  json trace = json::array();
  for (const auto& step : result.trace.steps) {
    trace.push_back(
        {{"round", step.round},
         {"player", game.players()[step.player]},
         {"eliminated", game.strategy_labels(step.player)[step.eliminated]},
         {"dominator", game.strategy_labels(step.player)[step.dominator]}});
  }
  json machine;
  machine["command"] = "iesds";
  machine["input"] = {{"path", path},
                      {"game", game_json(game)},
                      {"mode", nfg::dominance_mode_name(mode)}};
  machine["results"] = {{"trace", trace},
                        {"reduced", game_json(result.reduced)}};
  emit(flags, machine, text.str());
  return 0;
}

int cmd_arms_race(std::size_t countries, const std::vector<double>& payoffs,
                  const std::string& start_spec, std::size_t max_steps,
                  const std::string& export_path, const OutputFlags& flags) {
  if (payoffs.size() != 4) {
    nfg::throw_error(nfg::Errc::BadFlag,
                     "--payoffs needs exactly four values t,r,p,s");
  }
  const nfg::ArmsRaceModel model{countries, payoffs[0], payoffs[1], payoffs[2],
                                 payoffs[3]};
  const NormalFormGame game = nfg::arms_race_game(model);
  const auto report = nfg::analyze(game);

  std::ostringstream text;
  text << "command: arms-race\n";
  text << "model: countries = " << countries << ", t = " << fmt_num(payoffs[0])
       << ", r = " << fmt_num(payoffs[1]) << ", p = " << fmt_num(payoffs[2])
       << ", s = " << fmt_num(payoffs[3]) << "\n";
  game_header(text, game);
  text << "\n";
  report_text(text, game, report);

  // The all-disarm profile beats the all-arm equilibrium for every country,
  // yet nobody can reach it unilaterally.
  const StrategyProfile all_arm{
      std::vector<std::size_t>(countries, nfg::kArm)};
  const StrategyProfile all_disarm{
      std::vector<std::size_t>(countries, nfg::kDisarm)};
  bool superior = true;
  for (std::size_t p = 0; p < countries && superior; ++p) {
    superior = game.utility(all_disarm, p) >
               game.utility(all_arm, p) + nfg::kPayoffTol;
  }
  if (superior && !nfg::is_pure_nash(game, all_disarm)) {
    text << "note: " << fmt_profile(game, all_disarm)
         << " is Pareto-superior to the equilibrium "
         << fmt_profile(game, all_arm) << " but is not an equilibrium\n";
  }

  json machine;
  machine["command"] = "arms-race";
  machine["input"] = {{"countries", countries},
                      {"t", payoffs[0]},
                      {"r", payoffs[1]},
                      {"p", payoffs[2]},
                      {"s", payoffs[3]},
                      {"start", start_spec.empty() ? json(nullptr)
                                                   : json(start_spec)},
                      {"max_steps", max_steps}};
  machine["results"] = report_json(game, report);

  if (!start_spec.empty()) {
    const StrategyProfile start = resolve_profile(game, start_spec);
    const auto trajectory = nfg::best_response_dynamics(game, start, max_steps);
    text << "\ndynamics from " << fmt_profile(game, start) << ":\n";
    dynamics_text(text, game, trajectory);
    machine["results"]["dynamics"] = dynamics_json(game, trajectory);
  }
  maybe_export(export_path, game, text);

  emit(flags, machine, text.str());
  return 0;
}

int cmd_dynamics(const std::string& path, const std::string& start_spec,
                 std::size_t max_steps, const OutputFlags& flags) {
  const NormalFormGame game = nfg::read_game_file(path);
  const StrategyProfile start = resolve_profile(game, start_spec);
  const auto trajectory = nfg::best_response_dynamics(game, start, max_steps);

  std::ostringstream text;
  text << "command: dynamics\n";
  text << "file: " << path << "\n";
  game_header(text, game);
  text << "start: " << fmt_profile(game, start)
       << ", max steps: " << max_steps << "\n\n";
  dynamics_text(text, game, trajectory);

  json machine;
  machine["command"] = "dynamics";
  machine["input"] = {{"path", path},
                      {"game", game_json(game)},
                      {"start", profile_labels(game, start)},
                      {"max_steps", max_steps}};
  machine["results"] = dynamics_json(game, trajectory);
  emit(flags, machine, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite normal-form game solver"};
  app.require_subcommand(1);

  OutputFlags flags;
  auto add_common = [&flags](CLI::App* sub) {
    sub->add_flag("--json", flags.json, "emit one JSON object instead of text");
    sub->add_flag("--quiet", flags.quiet, "suppress report output");
  };

  std::string solve_path, solve_export;
  auto* solve = app.add_subcommand(
      "solve", "equilibria, dominance profile and Pareto set of a game file");
  solve->add_option("file", solve_path, "game JSON file")->required();
  solve->add_option("--export", solve_export, "re-export the parsed game");
  add_common(solve);

  std::string pareto_path, pareto_export;
  auto* pareto = app.add_subcommand(
      "pareto", "alias of solve (the report includes the Pareto set)");
  pareto->add_option("file", pareto_path, "game JSON file")->required();
  pareto->add_option("--export", pareto_export, "re-export the parsed game");
  add_common(pareto);

  std::string dom_path;
  auto* dominance =
      app.add_subcommand("dominance", "pairwise dominance relations");
  dominance->add_option("file", dom_path, "game JSON file")->required();
  add_common(dominance);

  std::string iesds_path, iesds_mode = "strict";
  auto* iesds_cmd = app.add_subcommand(
      "iesds", "iterated elimination of dominated strategies");
  iesds_cmd->add_option("file", iesds_path, "game JSON file")->required();
  iesds_cmd->add_option("--mode", iesds_mode, "strict or weak")
      ->check(CLI::IsMember({"strict", "weak"}))
      ->capture_default_str();
  add_common(iesds_cmd);

  std::size_t countries = 2;
  std::vector<double> race_payoffs{3, 2, 1, 0};
  std::string race_start, race_export;
  std::size_t race_steps = 100;
  auto* arms = app.add_subcommand("arms-race",
                                  "N-country arms race from pairwise "
                                  "prisoner's-dilemma incentives");
  arms->add_option("--countries", countries, "number of countries (>= 2)")
      ->capture_default_str();
  arms->add_option("--payoffs", race_payoffs,
                   "pairwise payoffs t,r,p,s with t > r > p > s")
      ->delimiter(',')
      ->capture_default_str();
  arms->add_option("--start", race_start,
                   "comma-separated strategy labels; runs best-response "
                   "dynamics from this profile");
  arms->add_option("--max-steps", race_steps, "cap on player updates")
      ->capture_default_str();
  arms->add_option("--export", race_export, "write the game as a JSON file");
  add_common(arms);

  std::string dyn_path, dyn_start;
  std::size_t dyn_steps = 100;
  auto* dynamics =
      app.add_subcommand("dynamics", "round-robin best-response dynamics");
  dynamics->add_option("file", dyn_path, "game JSON file")->required();
  dynamics->add_option("--start", dyn_start, "comma-separated strategy labels")
      ->required();
  dynamics->add_option("--max-steps", dyn_steps, "cap on player updates")
      ->capture_default_str();
  add_common(dynamics);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve("solve", solve_path, solve_export, flags);
    if (pareto->parsed())
      return cmd_solve("pareto", pareto_path, pareto_export, flags);
    if (dominance->parsed()) return cmd_dominance(dom_path, flags);
    if (iesds_cmd->parsed()) return cmd_iesds(iesds_path, iesds_mode, flags);
    if (arms->parsed())
      return cmd_arms_race(countries, race_payoffs, race_start, race_steps,
                           race_export, flags);
    if (dynamics->parsed())
      return cmd_dynamics(dyn_path, dyn_start, dyn_steps, flags);
  } catch (const nfg::GameError& e) {
    std::cerr << "error [" << nfg::errc_name(e.code()) << "]: " << e.what()
              << "\n";
    return e.code() == nfg::Errc::GameTooLarge ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
