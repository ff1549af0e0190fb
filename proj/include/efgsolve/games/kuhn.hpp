#pragma once

#include <initializer_list>
#include <vector>

#include "efgsolve/core/strategy.hpp"
#include "efgsolve/core/types.hpp"

namespace efg {

inline constexpr int kJack = 0;
inline constexpr int kQueen = 1;
inline constexpr int kKing = 2;

// One-parameter family of Kuhn equilibria. Player one bets a Jack with
// probability alpha, calls with a Queen with probability beta and bets a King
// with probability gamma; player two calls with a Queen and bluffs a Jack after
// a pass with probability 1/3 each.
struct KuhnEquilibriumSpec {
  double gamma = 0.0;

  double alpha() const { return gamma / 3.0; }
  double beta() const { return (1.0 + gamma) / 3.0; }
  static constexpr double eta = 1.0 / 3.0;
  static constexpr double xi = 1.0 / 3.0;
};

inline constexpr double kKuhnGameValue = -1.0 / 18.0;

// Key of the Kuhn infoset where `owner` holds `card` after the public betting.
InfoSetKey kuhn_key(Player owner, int card, std::initializer_list<ActionId> betting);

// Complete profile (all 12 infosets) for the given gamma in [0, 1].
StrategyProfile kuhn_equilibrium_profile(double gamma);

struct InfosetAction {
  InfoSetKey key;
  ActionId action = 0;

  auto operator<=>(const InfosetAction&) const = default;
};

// The seven dominated (infoset, action) pairs of Kuhn poker, sorted.
std::vector<InfosetAction> kuhn_dominated_actions();

}  // namespace efg
