#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "doctest.h"
#include "nfg/game.hpp"
#include "support/oracles.hpp"

using nfg::Errc;
using nfg::GameError;
using nfg::NormalFormGame;
using nfg::Orientation;
using nfg::StrategyProfile;

namespace {

bool throws_with_code(Errc expected, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const GameError& e) {
    return e.code() == expected;
  }
  return false;
}

}  // namespace

TEST_CASE("minimize orientation negates payoffs on construction") {
  // years per cell: (T,T)=(5,5) (T,DT)=(1,8) (DT,T)=(8,1) (DT,DT)=(2,2)
  NormalFormGame game({"Bob", "Jane"}, {{"T", "DT"}, {"T", "DT"}},
                      {5, 5, 1, 8, 8, 1, 2, 2}, Orientation::minimize);
  CHECK(game.orientation() == Orientation::minimize);
  CHECK(game.utility({{0, 0}}, 0) == -5.0);
  CHECK(game.utility({{0, 0}}, 1) == -5.0);
  CHECK(game.utility({{1, 0}}, 0) == -8.0);
  CHECK(game.utility({{1, 0}}, 1) == -1.0);
  CHECK(game.source_payoffs({{0, 0}}) == std::vector<double>{5, 5});
  CHECK(game.source_payoffs({{1, 0}}) == std::vector<double>{8, 1});
}

TEST_CASE("degenerate single-player single-strategy game is valid") {
  NormalFormGame game({"Solo"}, {{"only"}}, {0}, Orientation::maximize);
  CHECK(game.profile_count() == 1);
  CHECK(game.utility({{0}}, 0) == 0.0);
  CHECK(game.source_payoffs({{0}}) == std::vector<double>{0});
}

TEST_CASE("construction rejects bad shapes and values") {
  CHECK(throws_with_code(Errc::ShapeMismatch, [] {
    // 2x2 two-player game needs 8 entries, give 7
    NormalFormGame({"A", "B"}, {{"x", "y"}, {"x", "y"}}, {1, 2, 3, 4, 5, 6, 7},
                   Orientation::maximize);
  }));
  CHECK(throws_with_code(Errc::EmptyGame, [] {
    NormalFormGame({}, {}, {}, Orientation::maximize);
  }));
  CHECK(throws_with_code(Errc::EmptyGame, [] {
    NormalFormGame({"A"}, {{}}, {}, Orientation::maximize);
  }));
  CHECK(throws_with_code(Errc::ShapeMismatch, [] {
    NormalFormGame({"A", "B"}, {{"x"}}, {1, 2}, Orientation::maximize);
  }));
  CHECK(throws_with_code(Errc::NonFinitePayoff, [] {
    NormalFormGame({"A"}, {{"x"}}, {std::nan("")}, Orientation::maximize);
  }));
  CHECK(throws_with_code(Errc::NonFinitePayoff, [] {
    NormalFormGame({"A"}, {{"x", "y"}},
                   {1, std::numeric_limits<double>::infinity()},
                   Orientation::maximize);
  }));
}

TEST_CASE("construction rejects games over the profile cap") {
  std::vector<std::string> huge(1001);
  for (std::size_t i = 0; i < huge.size(); ++i) huge[i] = std::to_string(i);
  CHECK(throws_with_code(Errc::GameTooLarge, [&] {
    NormalFormGame({"A", "B"}, {huge, huge}, {}, Orientation::maximize);
  }));
}

TEST_CASE("payoff lookup validates the profile") {
  NormalFormGame game = nfg::pd_from_years();
  CHECK(throws_with_code(Errc::IndexOutOfBounds,
                         [&] { game.utilities({{0}}); }));
  CHECK(throws_with_code(Errc::IndexOutOfBounds,
                         [&] { game.utilities({{0, 2}}); }));
  CHECK(throws_with_code(Errc::IndexOutOfBounds,
                         [&] { game.utility({{0, 0}}, 5); }));
}

TEST_CASE("pd_from_years defaults reproduce the interrogation matrix") {
  NormalFormGame game = nfg::pd_from_years();
  CHECK(game.players() == std::vector<std::string>{"Bob", "Jane"});
  CHECK(game.strategy_labels(0) == std::vector<std::string>{"T", "DT"});
  CHECK(game.orientation() == Orientation::minimize);
  // years: both tell 5 each; lone teller 1, silent one 8; both silent 2
  CHECK(game.source_payoffs({{0, 0}}) == std::vector<double>{5, 5});
  CHECK(game.source_payoffs({{0, 1}}) == std::vector<double>{1, 8});
  CHECK(game.source_payoffs({{1, 0}}) == std::vector<double>{8, 1});
  CHECK(game.source_payoffs({{1, 1}}) == std::vector<double>{2, 2});
  // profile (Jane tells, Bob silent): Bob 8 years, Jane 1 year
  CHECK(game.utility({{1, 0}}, 0) == -8.0);
  CHECK(game.utility({{1, 0}}, 1) == -1.0);
}

TEST_CASE("a teller's years range from betrayer to both-tell") {
  NormalFormGame game = nfg::pd_from_years(5, 1, 8, 2);
  // Bob tells: worst case 5 years (Jane tells too), best case 1 (Jane silent)
  const double vs_tell = game.source_payoffs({{0, 0}})[0];
  const double vs_silent = game.source_payoffs({{0, 1}})[0];
  CHECK(std::max(vs_tell, vs_silent) == 5.0);
  CHECK(std::min(vs_tell, vs_silent) == 1.0);
}

TEST_CASE("pd_from_years rejects non-dilemma orderings") {
  CHECK(throws_with_code(Errc::InvalidOrdering,
                         [] { nfg::pd_from_years(2, 1, 8, 5); }));
  CHECK(throws_with_code(Errc::InvalidOrdering,
                         [] { nfg::pd_from_years(5, 3, 8, 2); }));
}

TEST_CASE("pd_from_years output is symmetric under player swap") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 20; ++trial) {
    const auto years = nfg_test::random_pd_years(rng);
    NormalFormGame game =
        nfg::pd_from_years(years[0], years[1], years[2], years[3]);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        CHECK(game.utility({{i, j}}, 0) == game.utility({{j, i}}, 1));
      }
    }
  }
}

TEST_CASE("exchange game payoffs") {
  NormalFormGame game = nfg::exchange_game(1, 2, 1, 2);
  CHECK(game.orientation() == Orientation::maximize);
  CHECK(game.strategy_labels(0) ==
        std::vector<std::string>{"Honest", "Betray"});
  CHECK(game.source_payoffs({{0, 0}}) == std::vector<double>{2, 2});
  CHECK(game.source_payoffs({{0, 1}}) == std::vector<double>{0, 3});
  // the betrayer keeps his own item and takes the other's
  CHECK(game.source_payoffs({{1, 0}}) == std::vector<double>{3, 0});
  // mutual betrayal: each keeps what it started with
  CHECK(game.source_payoffs({{1, 1}}) == std::vector<double>{1, 1});
}

TEST_CASE("exchange game rejects valuations without a trade motive") {
  CHECK(throws_with_code(Errc::InvalidValuation,
                         [] { nfg::exchange_game(2, 1, 1, 2); }));
  CHECK(throws_with_code(Errc::InvalidValuation,
                         [] { nfg::exchange_game(1, 2, 2, 1); }));
  CHECK(throws_with_code(Errc::InvalidValuation,
                         [] { nfg::exchange_game(0, 2, 1, 2); }));
  CHECK(throws_with_code(Errc::InvalidValuation,
                         [] { nfg::exchange_game(-1, 2, 1, 2); }));
}

TEST_CASE("tensor layout matches the row-major formula on a 2x3x4 game") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-9, 9);
  const std::size_t dims[3] = {2, 3, 4};
  std::vector<double> entries(2 * 3 * 4 * 3);
  for (double& v : entries) v = dist(rng);
  NormalFormGame game({"A", "B", "C"},
                      {{"a0", "a1"},
                       {"b0", "b1", "b2"},
                       {"c0", "c1", "c2", "c3"}},
                      entries, Orientation::maximize);
  for (std::size_t i0 = 0; i0 < dims[0]; ++i0) {
    for (std::size_t i1 = 0; i1 < dims[1]; ++i1) {
      for (std::size_t i2 = 0; i2 < dims[2]; ++i2) {
        const StrategyProfile profile{{i0, i1, i2}};
        const std::size_t flat = (i0 * dims[1] + i1) * dims[2] + i2;
        CHECK(game.flat_index(profile) == flat);
        for (std::size_t p = 0; p < 3; ++p) {
          CHECK(game.utility(profile, p) == entries[flat * 3 + p]);
        }
      }
    }
  }
}

TEST_CASE("round-trip: constructed games read back their input values") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> dist(-20, 20);
  for (Orientation orientation :
       {Orientation::maximize, Orientation::minimize}) {
    std::vector<double> entries(3 * 2 * 2);
    for (double& v : entries) v = dist(rng);
    NormalFormGame game({"A", "B"}, {{"x", "y", "z"}, {"u", "v"}}, entries,
                        orientation);
    std::size_t flat = 0;
    StrategyProfile profile = game.first_profile();
    do {
      const auto cell = game.source_payoffs(profile);
      for (std::size_t p = 0; p < 2; ++p) {
        CHECK(cell[p] == entries[flat * 2 + p]);
      }
      ++flat;
    } while (game.next_profile(profile));
    CHECK(flat == game.profile_count());
  }
}

TEST_CASE("mixed strategy validation") {
  nfg::MixedStrategy ok{{0.5, 0.5}};
  CHECK_NOTHROW(ok.validate(2));
  // within the 1e-9 sum tolerance
  CHECK_NOTHROW(nfg::MixedStrategy{{0.5, 0.5 + 5e-10}}.validate(2));
  CHECK(throws_with_code(Errc::InvalidMixedStrategy, [] {
    nfg::MixedStrategy{{0.7, 0.7}}.validate(2);
  }));
  CHECK(throws_with_code(Errc::InvalidMixedStrategy, [] {
    nfg::MixedStrategy{{-0.1, 1.1}}.validate(2);
  }));
  CHECK(throws_with_code(Errc::IndexOutOfBounds, [] {
    nfg::MixedStrategy{{1.0}}.validate(2);
  }));
}

TEST_CASE("strategy label lookup") {
  NormalFormGame game = nfg::pd_from_years();
  CHECK(game.find_strategy(0, "DT") == std::size_t{1});
  CHECK(game.find_strategy(1, "T") == std::size_t{0});
  CHECK(!game.find_strategy(0, "missing").has_value());
}
