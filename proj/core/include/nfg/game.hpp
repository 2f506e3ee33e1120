#ifndef NFG_GAME_HPP
#define NFG_GAME_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nfg/error.hpp"

namespace nfg {

// Tolerance used for every payoff comparison in the solvers.
inline constexpr double kPayoffTol = 1e-9;

// Construction refuses games with more pure profiles than this; all solvers
// are exhaustive.
inline constexpr std::size_t kMaxProfiles = 1'000'000;

// Whether the source payoffs were utilities (maximize) or costs (minimize).
// Costs are negated at construction so the solvers only ever maximize.
enum class Orientation { maximize, minimize };

const char* orientation_name(Orientation o);

/// One pure strategy index per player. Orders lexicographically.
struct StrategyProfile {
  std::vector<std::size_t> indices;

  auto operator<=>(const StrategyProfile&) const = default;
};

/// A probability distribution over one player's strategies.
struct MixedStrategy {
  std::vector<double> probs;

  auto operator<=>(const MixedStrategy&) const = default;

  /// Throws InvalidMixedStrategy unless entries are >= 0 and sum to 1
  /// within kPayoffTol, or IndexOutOfBounds on a size mismatch.
  void validate(std::size_t n_strategies) const;
};

/// One MixedStrategy per player.
struct MixedProfile {
  std::vector<MixedStrategy> strategies;

  auto operator<=>(const MixedProfile&) const = default;
};

/// A finite normal-form game: player labels, per-player strategy labels and a
/// dense payoff tensor laid out row-major over player indices (player 0
/// outermost), innermost dimension the per-player payoff vector.
///
/// Payoffs are stored as utilities; minimize-oriented input is negated on the
/// way in and recovered by negation for display. Instances are immutable
/// after construction and safe to share across threads.
class NormalFormGame {
 public:
  /// Validates shapes and finiteness. Throws EmptyGame, GameTooLarge,
  /// ShapeMismatch or NonFinitePayoff. `payoffs` is in source orientation.
  NormalFormGame(std::vector<std::string> players,
                 std::vector<std::vector<std::string>> strategies,
                 std::vector<double> payoffs, Orientation orientation);

  std::size_t num_players() const { return players_.size(); }
  std::size_t num_strategies(std::size_t player) const;
  const std::vector<std::string>& players() const { return players_; }
  const std::vector<std::string>& strategy_labels(std::size_t player) const;
  Orientation orientation() const { return orientation_; }

  /// Number of pure strategy profiles (product of strategy counts).
  std::size_t profile_count() const { return profile_count_; }

  /// Utility vector for one cell, one entry per player. Throws
  /// IndexOutOfBounds on an invalid profile.
  std::span<const double> utilities(const StrategyProfile& profile) const;
  double utility(const StrategyProfile& profile, std::size_t player) const;

  /// The cell's payoffs as the source data gave them: costs for a
  /// minimize-oriented game, utilities otherwise.
  std::vector<double> source_payoffs(const StrategyProfile& profile) const;

  /// Flat tensor offset of the cell (not including the player dimension).
  std::size_t flat_index(const StrategyProfile& profile) const;

  void validate_profile(const StrategyProfile& profile) const;
  void validate_player(std::size_t player) const;

  /// All-zeros profile, the lexicographically first one.
  StrategyProfile first_profile() const;

  /// Advances to the next profile in lexicographic order (last player's index
  /// moves fastest); returns false after wrapping past the last profile.
  bool next_profile(StrategyProfile& profile) const;

  /// Index of the strategy with this label for `player`, if any.
  std::optional<std::size_t> find_strategy(std::size_t player,
                                           const std::string& label) const;

  bool operator==(const NormalFormGame& other) const = default;

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> strategies_;
  std::vector<double> utilities_;  // always maximize orientation
  Orientation orientation_;
  std::size_t profile_count_;
};

/// The two-suspect interrogation game with payoffs in years of prison
/// (minimize orientation). Players "Bob" and "Jane", strategies "T" (tell)
/// and "DT" (don't tell). Requires betrayer < both_silent < both_tell <
/// sucker, the cost ordering that makes the game a prisoner's dilemma;
/// throws InvalidOrdering otherwise.
NormalFormGame pd_from_years(double both_tell = 5, double betrayer = 1,
                             double sucker = 8, double both_silent = 2);

/// The buried-goods exchange game (maximize orientation). Each side holds an
/// item worth v_own to itself and values the other's item at v_other; honest
/// trade swaps the items, betrayal keeps one's own and takes the other's.
/// Requires positive values with v_other_a > v_own_a and v_other_b > v_own_b;
/// throws InvalidValuation otherwise.
NormalFormGame exchange_game(double v_own_a, double v_other_a, double v_own_b,
                             double v_other_b);

}  // namespace nfg

#endif  // NFG_GAME_HPP
