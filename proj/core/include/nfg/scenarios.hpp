#ifndef NFG_SCENARIOS_HPP
#define NFG_SCENARIOS_HPP

#include <cstddef>

#include "nfg/analysis.hpp"
#include "nfg/game.hpp"

namespace nfg {

/// An N-country arms race built from pairwise prisoner's-dilemma incentives.
/// Each country keeps building weapons ("W") or stops ("NW"); a country's
/// utility is the sum over every other country of the pairwise payoff:
/// temptation when arming against a disarmed side, reward for mutual
/// disarmament, punishment for mutual armament, sucker for disarming against
/// an armed side. Requires t > r > p > s (by more than kPayoffTol) and at
/// least two countries.
struct ArmsRaceModel {
  std::size_t n_countries = 2;
  double temptation = 3;   // t: arm while the other disarms
  double reward = 2;       // r: mutual disarmament
  double punishment = 1;   // p: mutual armament
  double sucker = 0;       // s: disarm while the other arms

  /// Throws InvalidModel if the ordering or country count is violated.
  void validate() const;
};

/// Strategy indices in arms-race games: "W" first, "NW" second.
inline constexpr std::size_t kArm = 0;
inline constexpr std::size_t kDisarm = 1;

/// Maximize-oriented game over n_countries players with strategies
/// ("W", "NW"). Throws InvalidModel or GameTooLarge (2^n over the profile
/// cap).
NormalFormGame arms_race_game(const ArmsRaceModel& model);

/// Full equilibrium report for the arms-race game. For every valid model the
/// all-W profile is the unique pure Nash equilibrium and the strict
/// dominant-strategy profile, while all-NW is Pareto-optimal.
EquilibriumReport arms_race_report(const ArmsRaceModel& model);

/// Myopic best-response play. States start at the initial profile and gain
/// one entry per strategy change, so consecutive states differ in exactly
/// one coordinate.
struct DynamicsTrajectory {
  std::vector<StrategyProfile> states;
  bool converged = false;
  std::size_t steps_taken = 0;  // single-player updates evaluated
};

/// Round-robin myopic best-response dynamics from `start`. Players update in
/// order 0, 1, ...; a player already playing a best response keeps it,
/// otherwise it switches to the lowest-index best response. Stops converged
/// once a full round passes with no change, or unconverged after max_steps
/// player updates. Requires max_steps >= 1.
DynamicsTrajectory best_response_dynamics(const NormalFormGame& game,
                                          const StrategyProfile& start,
                                          std::size_t max_steps);

}  // namespace nfg

#endif  // NFG_SCENARIOS_HPP
