#pragma once

#include <vector>

#include "efgsolve/core/game.hpp"
#include "efgsolve/core/game_tree.hpp"
#include "efgsolve/core/strategy.hpp"

namespace efg {

struct BestResponseResult {
  double value = 0.0;         // b_i: the responder's expected payoff
  BehaviorStrategy strategy;  // pure, one entry per responder infoset
};

// Exact best response of `responder` against the opponent's part of `policy`.
// The responder's own entries in `policy` are ignored. Ties go to the lowest
// action id.
BestResponseResult best_response(const TabularPolicy& policy, Player responder);

// Same, on a game given by its rules; infosets missing from the strategy are
// played uniformly and keys foreign to the game raise GameMismatchError.
BestResponseResult best_response(const GamePtr& game, const BehaviorStrategy& opponent_strategy,
                                 Player responder);

// b_1(policy_2) + b_2(policy_1).
double exploitability(const TabularPolicy& policy);
double exploitability(const GamePtr& game, const StrategyProfile& profile);

}  // namespace efg
