#include "nfg/scenarios.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace nfg {

void ArmsRaceModel::validate() const {
  if (n_countries < 2) {
    throw_error(Errc::InvalidModel, "an arms race needs at least 2 countries");
  }
  if (!(temptation > reward + kPayoffTol && reward > punishment + kPayoffTol &&
        punishment > sucker + kPayoffTol)) {
    std::ostringstream msg;
    msg << "payoffs must satisfy t > r > p > s, got t=" << temptation
        << " r=" << reward << " p=" << punishment << " s=" << sucker;
    throw_error(Errc::InvalidModel, msg.str());
  }
}

NormalFormGame arms_race_game(const ArmsRaceModel& model) {
  model.validate();
  const std::size_t n = model.n_countries;
  if (n >= 64 || (std::size_t{1} << n) > kMaxProfiles) {
    throw_error(Errc::GameTooLarge,
                "2^" + std::to_string(n) + " profiles exceed the cap of " +
                    std::to_string(kMaxProfiles));
  }
  // pair_payoff[mine][theirs] with 0 = W, 1 = NW
  const double pair_payoff[2][2] = {
      {model.punishment, model.temptation},
      {model.sucker, model.reward},
  };
  std::vector<std::string> countries(n);
  std::vector<std::vector<std::string>> strategies(n, {"W", "NW"});
  for (std::size_t i = 0; i < n; ++i) {
    countries[i] = "Country" + std::to_string(i + 1);
  }
  const std::size_t profiles = std::size_t{1} << n;
  std::vector<double> payoffs;
  payoffs.reserve(profiles * n);
  for (std::size_t code = 0; code < profiles; ++code) {
    // bit i of code = strategy of player i, with player 0 outermost
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t mine = (code >> (n - 1 - i)) & 1u;
      double total = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const std::size_t theirs = (code >> (n - 1 - j)) & 1u;
        total += pair_payoff[mine][theirs];
      }
      payoffs.push_back(total);
    }
  }
  return NormalFormGame(std::move(countries), std::move(strategies),
                        std::move(payoffs), Orientation::maximize);
}

EquilibriumReport arms_race_report(const ArmsRaceModel& model) {
  return analyze(arms_race_game(model));
}

DynamicsTrajectory best_response_dynamics(const NormalFormGame& game,
                                          const StrategyProfile& start,
                                          std::size_t max_steps) {
  game.validate_profile(start);
  if (max_steps < 1) {
    throw_error(Errc::BadFlag, "max_steps must be at least 1");
  }
  DynamicsTrajectory trajectory;
  trajectory.states.push_back(start);
  StrategyProfile current = start;
  const std::size_t n = game.num_players();
  std::size_t quiet = 0;  // consecutive players that kept their strategy
  std::size_t player = 0;
  while (trajectory.steps_taken < max_steps) {
    ++trajectory.steps_taken;
    const auto best = best_responses(game, player, current);
    const std::size_t chosen = current.indices[player];
    const bool keep =
        std::find(best.begin(), best.end(), chosen) != best.end();
    if (keep) {
      ++quiet;
    } else {
      current.indices[player] = best.front();
      trajectory.states.push_back(current);
      quiet = 0;
    }
    if (quiet >= n) {  // a full round with no change
      trajectory.converged = true;
      break;
    }
    player = (player + 1) % n;
  }
  return trajectory;
}

}  // namespace nfg
