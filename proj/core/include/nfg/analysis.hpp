#ifndef NFG_ANALYSIS_HPP
#define NFG_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "nfg/game.hpp"

namespace nfg {

enum class DominanceMode { strict, weak };

const char* dominance_mode_name(DominanceMode mode);

/// One iterated-elimination step. Strategy indices refer to the original
/// game, not the shrinking one.
struct EliminationStep {
  int round = 0;
  std::size_t player = 0;
  std::size_t eliminated = 0;
  std::size_t dominator = 0;
  DominanceMode mode = DominanceMode::strict;

  bool operator==(const EliminationStep&) const = default;
};

struct EliminationTrace {
  std::vector<EliminationStep> steps;

  bool operator==(const EliminationTrace&) const = default;
};

struct IesdsResult {
  NormalFormGame reduced;
  EliminationTrace trace;
  // Surviving original strategy indices per player, ascending.
  std::vector<std::vector<std::size_t>> surviving;
};

/// All strategies of `player` whose utility is within kPayoffTol of the best
/// achievable against the opponents fixed by `others` (its entry for `player`
/// is ignored). Never empty; ascending order.
std::vector<std::size_t> best_responses(const NormalFormGame& game,
                                        std::size_t player,
                                        const StrategyProfile& others);

/// True iff no player can gain more than kPayoffTol by a unilateral
/// deviation.
bool is_pure_nash(const NormalFormGame& game, const StrategyProfile& profile);

/// Every pure Nash equilibrium, in lexicographic profile order.
std::vector<StrategyProfile> enumerate_pure_nash(const NormalFormGame& game);

/// True iff strategy a beats strategy b by more than kPayoffTol against every
/// combination of opponent pure strategies. Throws SameStrategy when a == b.
bool strictly_dominates(const NormalFormGame& game, std::size_t player,
                        std::size_t a, std::size_t b);

/// True iff a is at least as good as b (within kPayoffTol) everywhere and
/// better (by more than kPayoffTol) somewhere.
bool weakly_dominates(const NormalFormGame& game, std::size_t player,
                      std::size_t a, std::size_t b);

/// Strategies of `player` dominating every other strategy in the given mode.
/// At most one element in strict mode; a lone strategy is vacuously dominant.
std::vector<std::size_t> dominant_strategies(const NormalFormGame& game,
                                             std::size_t player,
                                             DominanceMode mode);

/// The profile of strict dominant strategies when every player has one
/// (then also the unique pure Nash equilibrium); absent otherwise.
std::optional<StrategyProfile> dominant_strategy_equilibrium(
    const NormalFormGame& game);

/// Iterated elimination of dominated strategies. Scans players low-to-high,
/// strategies low-to-high, removes the first dominated strategy found
/// (recording the lowest-index surviving dominator) and restarts the scan.
/// A step's round increments when the restart finds its next elimination at
/// a scan position at or before the previous one, i.e. when progress needed
/// an earlier elimination to open up. The strict-mode result is independent
/// of elimination order; the weak-mode result is only defined by this order.
IesdsResult iesds(const NormalFormGame& game, DominanceMode mode);

/// Profiles not Pareto-dominated: no other profile is at least as good for
/// everyone (within kPayoffTol) and better for someone (by more than
/// kPayoffTol). Lexicographic order.
std::vector<StrategyProfile> enumerate_pareto_optimal(
    const NormalFormGame& game);

/// True iff no player can raise its expected utility by more than epsilon by
/// deviating to any pure strategy.
bool epsilon_nash_check(const NormalFormGame& game, const MixedProfile& mixed,
                        double epsilon);

struct Mixed2x2Solution {
  std::vector<MixedProfile> equilibria;  // pure point masses first, then interior
  bool has_interior = false;
  // An indifference equation had a (near-)zero denominator, so an interior
  // equilibrium is undefined; only point masses are reported.
  bool degenerate = false;
};

/// Equilibria of a 2-player 2x2 game: every pure equilibrium as a point-mass
/// mixed profile (lexicographic order) plus the interior equilibrium obtained
/// from the two indifference equations when both probabilities land strictly
/// inside (0,1). Throws NotTwoByTwo otherwise.
Mixed2x2Solution solve_2x2_mixed_detailed(const NormalFormGame& game);

std::vector<MixedProfile> solve_2x2_mixed(const NormalFormGame& game);

/// Everything the solvers can say about one game.
struct EquilibriumReport {
  std::vector<StrategyProfile> pure_equilibria;
  std::vector<MixedProfile> mixed_equilibria;  // 2x2 games only
  std::optional<StrategyProfile> dominant_strategy_profile;
  std::vector<StrategyProfile> pareto_optimal;
  bool mixed_degenerate = false;
};

EquilibriumReport analyze(const NormalFormGame& game);

}  // namespace nfg

#endif  // NFG_ANALYSIS_HPP
