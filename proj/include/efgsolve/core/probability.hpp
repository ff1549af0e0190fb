#pragma once

#include "efgsolve/core/game.hpp"
#include "efgsolve/core/game_tree.hpp"
#include "efgsolve/core/strategy.hpp"

namespace efg {

// Per-contributor factors of a reach probability.
struct ReachProbabilities {
  double player_one = 1.0;
  double player_two = 1.0;
  double chance = 1.0;

  double total() const { return player_one * player_two * chance; }
  double of(Player p) const;
  // Product of everyone but p, chance included.
  double excluding(Player p) const;
};

// pi(h) split by contributor. Missing infosets in the profile play uniformly.
ReachProbabilities reach_probability(const Game& game, const StrategyProfile& profile,
                                     const History& h);

// pi(h, z) split by contributor; all factors are 0 when h is not a prefix of z.
ReachProbabilities tail_probability_by_player(const Game& game, const StrategyProfile& profile,
                                              const History& h, const History& z);

double tail_probability(const Game& game, const StrategyProfile& profile, const History& h,
                        const History& z);

// u_p(profile) by full traversal.
double expected_value(const Game& game, const StrategyProfile& profile, Player p);
double expected_value(const GameTree& tree, const TabularPolicy& policy, Player p);

}  // namespace efg
