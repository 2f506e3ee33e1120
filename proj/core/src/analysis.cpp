#include "nfg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace nfg {

namespace {

// A game restricted to surviving strategies, addressed by original indices.
// Only what IESDS and the dominance checks need; the reduced NormalFormGame
// is materialized once at the end.
struct Restriction {
  const NormalFormGame* game;
  std::vector<std::vector<std::size_t>> surviving;

  explicit Restriction(const NormalFormGame& g) : game(&g) {
    surviving.resize(g.num_players());
    for (std::size_t p = 0; p < g.num_players(); ++p) {
      surviving[p].resize(g.num_strategies(p));
      std::iota(surviving[p].begin(), surviving[p].end(), std::size_t{0});
    }
  }

  // Applies fn to every profile that fixes `player` to `own` and ranges the
  // other players over their surviving strategies. fn gets the full profile
  // in original indices and may return false to stop early.
  template <typename Fn>
  void for_each_opponent_combo(std::size_t player, std::size_t own,
                               Fn&& fn) const {
    const std::size_t n = game->num_players();
    StrategyProfile profile{std::vector<std::size_t>(n, 0)};
    std::vector<std::size_t> cursor(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
      profile.indices[p] = (p == player) ? own : surviving[p][0];
    }
    for (;;) {
      if (!fn(profile)) return;
      // odometer over every player except `player`
      std::size_t p = n;
      while (p-- > 0) {
        if (p == player) continue;
        if (++cursor[p] < surviving[p].size()) {
          profile.indices[p] = surviving[p][cursor[p]];
          break;
        }
        cursor[p] = 0;
        profile.indices[p] = surviving[p][0];
      }
      if (p == std::numeric_limits<std::size_t>::max()) return;  // wrapped
    }
  }

  bool dominates(std::size_t player, std::size_t a, std::size_t b,
                 DominanceMode mode) const {
    bool strict_everywhere = true;
    bool weak_everywhere = true;
    bool strict_somewhere = false;
    for_each_opponent_combo(player, a, [&](StrategyProfile& profile) {
      const double ua = game->utility(profile, player);
      profile.indices[player] = b;
      const double ub = game->utility(profile, player);
      profile.indices[player] = a;
      if (!(ua > ub + kPayoffTol)) strict_everywhere = false;
      else strict_somewhere = true;
      if (!(ua >= ub - kPayoffTol)) weak_everywhere = false;
      if (mode == DominanceMode::strict) return strict_everywhere;
      return weak_everywhere;
    });
    if (mode == DominanceMode::strict) return strict_everywhere;
    return weak_everywhere && strict_somewhere;
  }
};

void check_distinct(std::size_t a, std::size_t b) {
  if (a == b) {
    throw_error(Errc::SameStrategy,
                "strategy " + std::to_string(a) +
                    " cannot be compared with itself");
  }
}

void check_profile_cap(const NormalFormGame& game) {
  if (game.profile_count() > kMaxProfiles) {
    throw_error(Errc::GameTooLarge,
                "game has " + std::to_string(game.profile_count()) +
                    " profiles, cap is " + std::to_string(kMaxProfiles));
  }
}

MixedProfile point_mass(const NormalFormGame& game,
                        const StrategyProfile& profile) {
  MixedProfile out;
  out.strategies.resize(game.num_players());
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    out.strategies[p].probs.assign(game.num_strategies(p), 0.0);
    out.strategies[p].probs[profile.indices[p]] = 1.0;
  }
  return out;
}

// Expected utility for `player` if it deviates to pure strategy `own` while
// everyone else keeps mixing.
double expected_utility_vs(const NormalFormGame& game,
                           const MixedProfile& mixed, std::size_t player,
                           std::size_t own) {
  const std::size_t n = game.num_players();
  double total = 0.0;
  StrategyProfile profile{std::vector<std::size_t>(n, 0)};
  profile.indices[player] = own;
  for (;;) {
    double weight = 1.0;
    for (std::size_t p = 0; p < n; ++p) {
      if (p == player) continue;
      weight *= mixed.strategies[p].probs[profile.indices[p]];
    }
    if (weight > 0.0) total += weight * game.utility(profile, player);
    // advance opponents only
    std::size_t p = n;
    bool advanced = false;
    while (p-- > 0) {
      if (p == player) continue;
      if (++profile.indices[p] < game.num_strategies(p)) {
        advanced = true;
        break;
      }
      profile.indices[p] = 0;
    }
    if (!advanced) return total;
  }
}

}  // namespace

const char* dominance_mode_name(DominanceMode mode) {
  return mode == DominanceMode::strict ? "strict" : "weak";
}

std::vector<std::size_t> best_responses(const NormalFormGame& game,
                                        std::size_t player,
                                        const StrategyProfile& others) {
  game.validate_player(player);
  if (others.indices.size() != game.num_players()) {
    throw_error(Errc::IndexOutOfBounds,
                "profile has " + std::to_string(others.indices.size()) +
                    " entries for " + std::to_string(game.num_players()) +
                    " players");
  }
  StrategyProfile probe = others;
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    if (p == player) continue;
    if (probe.indices[p] >= game.num_strategies(p)) {
      throw_error(Errc::IndexOutOfBounds,
                  "strategy index " + std::to_string(probe.indices[p]) +
                      " out of range for player \"" + game.players()[p] +
                      "\"");
    }
  }
  const std::size_t count = game.num_strategies(player);
  std::vector<double> values(count);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < count; ++s) {
    probe.indices[player] = s;
    values[s] = game.utility(probe, player);
    best = std::max(best, values[s]);
  }
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < count; ++s) {
    if (values[s] >= best - kPayoffTol) out.push_back(s);
  }
  return out;
}

bool is_pure_nash(const NormalFormGame& game, const StrategyProfile& profile) {
  game.validate_profile(profile);
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    const double current = game.utility(profile, p);
    StrategyProfile probe = profile;
    for (std::size_t s = 0; s < game.num_strategies(p); ++s) {
      probe.indices[p] = s;
      if (game.utility(probe, p) > current + kPayoffTol) return false;
    }
  }
  return true;
}

std::vector<StrategyProfile> enumerate_pure_nash(const NormalFormGame& game) {
  check_profile_cap(game);
  std::vector<StrategyProfile> out;
  StrategyProfile profile = game.first_profile();
  do {
    if (is_pure_nash(game, profile)) out.push_back(profile);
  } while (game.next_profile(profile));
  return out;
}

bool strictly_dominates(const NormalFormGame& game, std::size_t player,
                        std::size_t a, std::size_t b) {
  game.validate_player(player);
  check_distinct(a, b);
  if (a >= game.num_strategies(player) || b >= game.num_strategies(player)) {
    throw_error(Errc::IndexOutOfBounds, "strategy index out of range");
  }
  return Restriction(game).dominates(player, a, b, DominanceMode::strict);
}

bool weakly_dominates(const NormalFormGame& game, std::size_t player,
                      std::size_t a, std::size_t b) {
  game.validate_player(player);
  check_distinct(a, b);
  if (a >= game.num_strategies(player) || b >= game.num_strategies(player)) {
    throw_error(Errc::IndexOutOfBounds, "strategy index out of range");
  }
  return Restriction(game).dominates(player, a, b, DominanceMode::weak);
}

std::vector<std::size_t> dominant_strategies(const NormalFormGame& game,
                                             std::size_t player,
                                             DominanceMode mode) {
  game.validate_player(player);
  const Restriction view(game);
  const std::size_t count = game.num_strategies(player);
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < count; ++a) {
    bool dominant = true;
    for (std::size_t b = 0; b < count && dominant; ++b) {
      if (b == a) continue;
      dominant = view.dominates(player, a, b, mode);
    }
    if (dominant) out.push_back(a);
  }
  return out;
}

std::optional<StrategyProfile> dominant_strategy_equilibrium(
    const NormalFormGame& game) {
  StrategyProfile profile{std::vector<std::size_t>(game.num_players(), 0)};
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    auto strict = dominant_strategies(game, p, DominanceMode::strict);
    if (strict.empty()) return std::nullopt;
    profile.indices[p] = strict.front();  // strict mode yields at most one
  }
  return profile;
}

IesdsResult iesds(const NormalFormGame& game, DominanceMode mode) {
  check_profile_cap(game);
  Restriction view(game);
  EliminationTrace trace;
  int round = 1;
  // Position of the previous elimination; a find at or before it means the
  // scan wrapped, which starts a new round.
  std::pair<std::size_t, std::size_t> last_pos{0, 0};
  bool have_last = false;

  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t p = 0; p < game.num_players() && !progress; ++p) {
      auto& alive = view.surviving[p];
      if (alive.size() < 2) continue;
      for (std::size_t si = 0; si < alive.size() && !progress; ++si) {
        const std::size_t victim = alive[si];
        for (std::size_t di = 0; di < alive.size(); ++di) {
          const std::size_t dominator = alive[di];
          if (dominator == victim) continue;
          if (!view.dominates(p, dominator, victim, mode)) continue;
          const std::pair<std::size_t, std::size_t> pos{p, victim};
          if (have_last && pos <= last_pos) ++round;
          last_pos = pos;
          have_last = true;
          trace.steps.push_back({round, p, victim, dominator, mode});
          alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(si));
          progress = true;
          break;
        }
      }
    }
  }

  // Materialize the reduced game from the source payoffs so orientation and
  // display values carry over.
  std::vector<std::vector<std::string>> labels(game.num_players());
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    for (std::size_t s : view.surviving[p]) {
      labels[p].push_back(game.strategy_labels(p)[s]);
    }
  }
  std::vector<double> payoffs;
  const std::size_t n = game.num_players();
  std::vector<std::size_t> cursor(n, 0);
  StrategyProfile profile{std::vector<std::size_t>(n, 0)};
  for (std::size_t p = 0; p < n; ++p) profile.indices[p] = view.surviving[p][0];
  for (;;) {
    auto cell = game.source_payoffs(profile);
    payoffs.insert(payoffs.end(), cell.begin(), cell.end());
    std::size_t p = n;
    bool advanced = false;
    while (p-- > 0) {
      if (++cursor[p] < view.surviving[p].size()) {
        profile.indices[p] = view.surviving[p][cursor[p]];
        advanced = true;
        break;
      }
      cursor[p] = 0;
      profile.indices[p] = view.surviving[p][0];
    }
    if (!advanced) break;
  }
  NormalFormGame reduced(game.players(), std::move(labels), std::move(payoffs),
                         game.orientation());
  return IesdsResult{std::move(reduced), std::move(trace),
                     std::move(view.surviving)};
}

std::vector<StrategyProfile> enumerate_pareto_optimal(
    const NormalFormGame& game) {
  check_profile_cap(game);
  std::vector<StrategyProfile> profiles;
  StrategyProfile profile = game.first_profile();
  do {
    profiles.push_back(profile);
  } while (game.next_profile(profile));

  const std::size_t n = game.num_players();
  std::vector<StrategyProfile> out;
  for (const auto& candidate : profiles) {
    const auto cu = game.utilities(candidate);
    bool dominated = false;
    for (const auto& rival : profiles) {
      if (&rival == &candidate) continue;
      const auto ru = game.utilities(rival);
      bool all_geq = true;
      bool some_better = false;
      for (std::size_t p = 0; p < n; ++p) {
        if (!(ru[p] >= cu[p] - kPayoffTol)) {
          all_geq = false;
          break;
        }
        if (ru[p] > cu[p] + kPayoffTol) some_better = true;
      }
      if (all_geq && some_better) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(candidate);
  }
  return out;
}

bool epsilon_nash_check(const NormalFormGame& game, const MixedProfile& mixed,
                        double epsilon) {
  if (mixed.strategies.size() != game.num_players()) {
    throw_error(Errc::IndexOutOfBounds,
                "mixed profile has " +
                    std::to_string(mixed.strategies.size()) +
                    " strategies for " + std::to_string(game.num_players()) +
                    " players");
  }
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    mixed.strategies[p].validate(game.num_strategies(p));
  }
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    double current = 0.0;
    for (std::size_t s = 0; s < game.num_strategies(p); ++s) {
      const double weight = mixed.strategies[p].probs[s];
      if (weight > 0.0) current += weight * expected_utility_vs(game, mixed, p, s);
    }
    for (std::size_t s = 0; s < game.num_strategies(p); ++s) {
      if (expected_utility_vs(game, mixed, p, s) > current + epsilon) {
        return false;
      }
    }
  }
  return true;
}

Mixed2x2Solution solve_2x2_mixed_detailed(const NormalFormGame& game) {
  if (game.num_players() != 2 || game.num_strategies(0) != 2 ||
      game.num_strategies(1) != 2) {
    throw_error(Errc::NotTwoByTwo,
                "mixed solver handles exactly 2 players with 2 strategies each");
  }
  Mixed2x2Solution out;
  for (const auto& pure : enumerate_pure_nash(game)) {
    out.equilibria.push_back(point_mass(game, pure));
  }

  // u[player][row strategy][column strategy]
  double a[2][2], b[2][2];
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const StrategyProfile cell{{i, j}};
      a[i][j] = game.utility(cell, 0);
      b[i][j] = game.utility(cell, 1);
    }
  }
  // Row's probability p on strategy 0 makes the column player indifferent,
  // and symmetrically for q.
  const double p_den = b[0][0] - b[0][1] - b[1][0] + b[1][1];
  const double q_den = a[0][0] - a[0][1] - a[1][0] + a[1][1];
  if (std::abs(p_den) <= kPayoffTol || std::abs(q_den) <= kPayoffTol) {
    out.degenerate = true;
    return out;
  }
  const double p = (b[1][1] - b[1][0]) / p_den;
  const double q = (a[1][1] - a[0][1]) / q_den;
  const bool interior = p > kPayoffTol && p < 1.0 - kPayoffTol &&
                        q > kPayoffTol && q < 1.0 - kPayoffTol;
  if (interior) {
    MixedProfile candidate{{MixedStrategy{{p, 1.0 - p}},
                            MixedStrategy{{q, 1.0 - q}}}};
    if (epsilon_nash_check(game, candidate, kPayoffTol)) {
      out.equilibria.push_back(std::move(candidate));
      out.has_interior = true;
    }
  }
  return out;
}

std::vector<MixedProfile> solve_2x2_mixed(const NormalFormGame& game) {
  return solve_2x2_mixed_detailed(game).equilibria;
}

EquilibriumReport analyze(const NormalFormGame& game) {
  EquilibriumReport report;
  report.pure_equilibria = enumerate_pure_nash(game);
  report.pareto_optimal = enumerate_pareto_optimal(game);
  report.dominant_strategy_profile = dominant_strategy_equilibrium(game);
  if (game.num_players() == 2 && game.num_strategies(0) == 2 &&
      game.num_strategies(1) == 2) {
    auto mixed = solve_2x2_mixed_detailed(game);
    report.mixed_equilibria = std::move(mixed.equilibria);
    report.mixed_degenerate = mixed.degenerate;
  }
  return report;
}

}  // namespace nfg
