// Brute-force oracles and random-game generators used by the property and
// acceptance suites. Everything here re-derives results from first
// definitions so it stays independent of the solver code paths it checks.
#ifndef NFG_TESTS_ORACLES_HPP
#define NFG_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "nfg/game.hpp"

namespace nfg_test {

// A payoff tensor the oracles walk directly: dims per player, entries in
// row-major order with the per-player payoff vector innermost, already in
// maximize orientation.
struct RawGame {
  std::vector<std::size_t> dims;
  std::vector<double> utilities;

  std::size_t num_players() const { return dims.size(); }

  std::size_t cell_offset(const std::vector<std::size_t>& profile) const {
    std::size_t flat = 0;
    for (std::size_t p = 0; p < dims.size(); ++p) {
      flat = flat * dims[p] + profile[p];
    }
    return flat * dims.size();
  }

  double utility(const std::vector<std::size_t>& profile,
                 std::size_t player) const {
    return utilities[cell_offset(profile) + player];
  }

  bool next(std::vector<std::size_t>& profile) const {
    for (std::size_t p = dims.size(); p-- > 0;) {
      if (++profile[p] < dims[p]) return true;
      profile[p] = 0;
    }
    return false;
  }
};

inline RawGame raw_from_game(const nfg::NormalFormGame& game) {
  RawGame raw;
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    raw.dims.push_back(game.num_strategies(p));
  }
  nfg::StrategyProfile profile = game.first_profile();
  do {
    auto cell = game.utilities(profile);
    raw.utilities.insert(raw.utilities.end(), cell.begin(), cell.end());
  } while (game.next_profile(profile));
  return raw;
}

// Nash check straight from the definition: no unilateral deviation gains
// more than tol.
inline bool oracle_is_nash(const RawGame& raw,
                           const std::vector<std::size_t>& profile,
                           double tol = 1e-9) {
  for (std::size_t p = 0; p < raw.num_players(); ++p) {
    const double current = raw.utility(profile, p);
    std::vector<std::size_t> probe = profile;
    for (std::size_t s = 0; s < raw.dims[p]; ++s) {
      probe[p] = s;
      if (raw.utility(probe, p) > current + tol) return false;
    }
  }
  return true;
}

inline std::vector<std::vector<std::size_t>> oracle_all_nash(
    const RawGame& raw) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> profile(raw.num_players(), 0);
  do {
    if (oracle_is_nash(raw, profile)) out.push_back(profile);
  } while (raw.next(profile));
  return out;
}

// Pareto filter by pairwise comparison of every cell.
inline std::vector<std::vector<std::size_t>> oracle_pareto(const RawGame& raw,
                                                           double tol = 1e-9) {
  std::vector<std::vector<std::size_t>> all;
  std::vector<std::size_t> profile(raw.num_players(), 0);
  do {
    all.push_back(profile);
  } while (raw.next(profile));

  std::vector<std::vector<std::size_t>> out;
  for (const auto& cand : all) {
    bool dominated = false;
    for (const auto& rival : all) {
      bool all_geq = true, some_better = false;
      for (std::size_t p = 0; p < raw.num_players(); ++p) {
        const double rv = raw.utility(rival, p);
        const double cv = raw.utility(cand, p);
        if (!(rv >= cv - tol)) { all_geq = false; break; }
        if (rv > cv + tol) some_better = true;
      }
      if (all_geq && some_better) { dominated = true; break; }
    }
    if (!dominated) out.push_back(cand);
  }
  return out;
}

// Random game with small integer payoffs (tolerances never stressed).
inline nfg::NormalFormGame random_game(std::mt19937_64& rng,
                                       std::size_t max_players = 3,
                                       std::size_t max_strategies = 4,
                                       int lo = -10, int hi = 10) {
  std::uniform_int_distribution<std::size_t> players_dist(1, max_players);
  std::uniform_int_distribution<std::size_t> strat_dist(1, max_strategies);
  std::uniform_int_distribution<int> payoff_dist(lo, hi);
  const std::size_t n = players_dist(rng);
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> strategies;
  std::size_t cells = 1;
  for (std::size_t p = 0; p < n; ++p) {
    players.push_back("P" + std::to_string(p));
    const std::size_t count = strat_dist(rng);
    cells *= count;
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < count; ++s) {
      labels.push_back("s" + std::to_string(s));
    }
    strategies.push_back(std::move(labels));
  }
  std::vector<double> payoffs(cells * n);
  for (double& v : payoffs) v = payoff_dist(rng);
  return nfg::NormalFormGame(std::move(players), std::move(strategies),
                             std::move(payoffs), nfg::Orientation::maximize);
}

// Random prisoner's-dilemma years satisfying betrayer < silent < tell <
// sucker.
inline std::array<double, 4> random_pd_years(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(1, 40);
  std::array<int, 4> draws{};
  for (;;) {
    for (int& d : draws) d = dist(rng);
    std::sort(draws.begin(), draws.end());
    if (draws[0] < draws[1] && draws[1] < draws[2] && draws[2] < draws[3])
      break;
  }
  // returns (both_tell, betrayer, sucker, both_silent)
  return {double(draws[2]), double(draws[0]), double(draws[3]),
          double(draws[1])};
}

// Random arms-race payoffs with t > r > p > s.
inline std::array<double, 4> random_arms_payoffs(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(0, 50);
  std::array<int, 4> draws{};
  for (;;) {
    for (int& d : draws) d = dist(rng);
    std::sort(draws.begin(), draws.end());
    if (draws[0] < draws[1] && draws[1] < draws[2] && draws[2] < draws[3])
      break;
  }
  return {double(draws[3]), double(draws[2]), double(draws[1]),
          double(draws[0])};
}

// The staircase fixture: player 0's strategy 2 only becomes dominated after
// player 1 loses strategy 0. Payoffs (player 0, player 1) per cell:
//   s0: (0,0) (3,1)
//   s1: (4,0) (3,1)
//   s2: (5,0) (1,1)
inline nfg::NormalFormGame staircase_game() {
  return nfg::NormalFormGame(
      {"P0", "P1"}, {{"a", "b", "c"}, {"x", "y"}},
      {0, 0, 3, 1, 4, 0, 3, 1, 5, 0, 1, 1}, nfg::Orientation::maximize);
}

inline nfg::NormalFormGame matching_pennies() {
  return nfg::NormalFormGame(
      {"Row", "Col"}, {{"H", "T"}, {"H", "T"}},
      {1, -1, -1, 1, -1, 1, 1, -1}, nfg::Orientation::maximize);
}

inline nfg::NormalFormGame battle_of_sexes() {
  return nfg::NormalFormGame(
      {"Row", "Col"}, {{"a", "b"}, {"a", "b"}},
      {3, 2, 0, 0, 0, 0, 2, 3}, nfg::Orientation::maximize);
}

}  // namespace nfg_test

#endif  // NFG_TESTS_ORACLES_HPP
