#include "nfg/game.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace nfg {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NonFinitePayoff: return "NonFinitePayoff";
    case Errc::EmptyGame: return "EmptyGame";
    case Errc::GameTooLarge: return "GameTooLarge";
    case Errc::IndexOutOfBounds: return "IndexOutOfBounds";
    case Errc::SameStrategy: return "SameStrategy";
    case Errc::InvalidOrdering: return "InvalidOrdering";
    case Errc::InvalidValuation: return "InvalidValuation";
    case Errc::InvalidModel: return "InvalidModel";
    case Errc::InvalidMixedStrategy: return "InvalidMixedStrategy";
    case Errc::NotTwoByTwo: return "NotTwoByTwo";
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::ParseError: return "ParseError";
    case Errc::BadFlag: return "BadFlag";
  }
  return "UnknownError";
}

const char* orientation_name(Orientation o) {
  return o == Orientation::maximize ? "maximize" : "minimize";
}

void MixedStrategy::validate(std::size_t n_strategies) const {
  if (probs.size() != n_strategies) {
    throw_error(Errc::IndexOutOfBounds,
                "mixed strategy has " + std::to_string(probs.size()) +
                    " entries for a player with " +
                    std::to_string(n_strategies) + " strategies");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw_error(Errc::InvalidMixedStrategy,
                  "mixed strategy probabilities must be finite and >= 0");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kPayoffTol) {
    std::ostringstream msg;
    msg << "mixed strategy probabilities sum to " << sum << ", not 1";
    throw_error(Errc::InvalidMixedStrategy, msg.str());
  }
}

NormalFormGame::NormalFormGame(std::vector<std::string> players,
                               std::vector<std::vector<std::string>> strategies,
                               std::vector<double> payoffs,
                               Orientation orientation)
    : players_(std::move(players)),
      strategies_(std::move(strategies)),
      utilities_(std::move(payoffs)),
      orientation_(orientation) {
  if (players_.empty()) {
    throw_error(Errc::EmptyGame, "a game needs at least one player");
  }
  if (strategies_.size() != players_.size()) {
    throw_error(Errc::ShapeMismatch,
                "expected one strategy list per player: " +
                    std::to_string(players_.size()) + " players, " +
                    std::to_string(strategies_.size()) + " strategy lists");
  }
  profile_count_ = 1;
  for (std::size_t p = 0; p < strategies_.size(); ++p) {
    if (strategies_[p].empty()) {
      throw_error(Errc::EmptyGame,
                  "player \"" + players_[p] + "\" has no strategies");
    }
    if (strategies_[p].size() > kMaxProfiles / profile_count_) {
      throw_error(Errc::GameTooLarge,
                  "profile count exceeds the cap of " +
                      std::to_string(kMaxProfiles));
    }
    profile_count_ *= strategies_[p].size();
  }
  const std::size_t expected = profile_count_ * players_.size();
  if (utilities_.size() != expected) {
    throw_error(Errc::ShapeMismatch,
                "payoff tensor has " + std::to_string(utilities_.size()) +
                    " entries, expected " + std::to_string(expected));
  }
  for (double& u : utilities_) {
    if (!std::isfinite(u)) {
      throw_error(Errc::NonFinitePayoff, "payoff entries must be finite");
    }
    if (orientation_ == Orientation::minimize) {
      u = (u == 0.0) ? 0.0 : -u;  // avoid storing -0
    }
  }
}

std::size_t NormalFormGame::num_strategies(std::size_t player) const {
  validate_player(player);
  return strategies_[player].size();
}

const std::vector<std::string>& NormalFormGame::strategy_labels(
    std::size_t player) const {
  validate_player(player);
  return strategies_[player];
}

void NormalFormGame::validate_player(std::size_t player) const {
  if (player >= players_.size()) {
    throw_error(Errc::IndexOutOfBounds,
                "player index " + std::to_string(player) + " out of range");
  }
}

void NormalFormGame::validate_profile(const StrategyProfile& profile) const {
  if (profile.indices.size() != players_.size()) {
    throw_error(Errc::IndexOutOfBounds,
                "profile has " + std::to_string(profile.indices.size()) +
                    " entries for " + std::to_string(players_.size()) +
                    " players");
  }
  for (std::size_t p = 0; p < players_.size(); ++p) {
    if (profile.indices[p] >= strategies_[p].size()) {
      throw_error(Errc::IndexOutOfBounds,
                  "strategy index " + std::to_string(profile.indices[p]) +
                      " out of range for player \"" + players_[p] + "\"");
    }
  }
}

std::size_t NormalFormGame::flat_index(const StrategyProfile& profile) const {
  validate_profile(profile);
  std::size_t flat = 0;
  for (std::size_t p = 0; p < players_.size(); ++p) {
    flat = flat * strategies_[p].size() + profile.indices[p];
  }
  return flat;
}

std::span<const double> NormalFormGame::utilities(
    const StrategyProfile& profile) const {
  const std::size_t offset = flat_index(profile) * players_.size();
  return {utilities_.data() + offset, players_.size()};
}

double NormalFormGame::utility(const StrategyProfile& profile,
                               std::size_t player) const {
  validate_player(player);
  return utilities(profile)[player];
}

std::vector<double> NormalFormGame::source_payoffs(
    const StrategyProfile& profile) const {
  auto cell = utilities(profile);
  std::vector<double> out(cell.begin(), cell.end());
  if (orientation_ == Orientation::minimize) {
    for (double& v : out) v = (v == 0.0) ? 0.0 : -v;
  }
  return out;
}

StrategyProfile NormalFormGame::first_profile() const {
  return StrategyProfile{std::vector<std::size_t>(players_.size(), 0)};
}

bool NormalFormGame::next_profile(StrategyProfile& profile) const {
  for (std::size_t p = players_.size(); p-- > 0;) {
    if (++profile.indices[p] < strategies_[p].size()) return true;
    profile.indices[p] = 0;
  }
  return false;
}

std::optional<std::size_t> NormalFormGame::find_strategy(
    std::size_t player, const std::string& label) const {
  validate_player(player);
  const auto& labels = strategies_[player];
  for (std::size_t s = 0; s < labels.size(); ++s) {
    if (labels[s] == label) return s;
  }
  return std::nullopt;
}

NormalFormGame pd_from_years(double both_tell, double betrayer, double sucker,
                             double both_silent) {
  if (!(betrayer < both_silent && both_silent < both_tell &&
        both_tell < sucker)) {
    std::ostringstream msg;
    msg << "years must satisfy betrayer < both_silent < both_tell < sucker, "
        << "got " << betrayer << ", " << both_silent << ", " << both_tell
        << ", " << sucker;
    throw_error(Errc::InvalidOrdering, msg.str());
  }
  // Cells in years, Bob outermost: (T,T), (T,DT), (DT,T), (DT,DT).
  std::vector<double> years = {
      both_tell, both_tell,  // both tell
      betrayer,  sucker,     // Bob tells, Jane stays silent
      sucker,    betrayer,   // Jane tells, Bob stays silent
      both_silent, both_silent,
  };
  return NormalFormGame({"Bob", "Jane"}, {{"T", "DT"}, {"T", "DT"}},
                        std::move(years), Orientation::minimize);
}

NormalFormGame exchange_game(double v_own_a, double v_other_a, double v_own_b,
                             double v_other_b) {
  if (!(v_own_a > 0 && v_other_a > 0 && v_own_b > 0 && v_other_b > 0)) {
    throw_error(Errc::InvalidValuation, "valuations must be positive");
  }
  if (!(v_other_a > v_own_a && v_other_b > v_own_b)) {
    throw_error(Errc::InvalidValuation,
                "each side must value the other's item above its own, "
                "else there is no reason to trade");
  }
  // (H,H) swaps the items; betraying keeps one's own and, against an honest
  // opponent, takes theirs too.
  std::vector<double> payoffs = {
      v_other_a, v_other_b,                // (H,H)
      0.0, v_own_b + v_other_b,            // (H,B)
      v_own_a + v_other_a, 0.0,            // (B,H)
      v_own_a, v_own_b,                    // (B,B)
  };
  return NormalFormGame({"A", "B"}, {{"Honest", "Betray"}, {"Honest", "Betray"}},
                        std::move(payoffs), Orientation::maximize);
}

}  // namespace nfg
