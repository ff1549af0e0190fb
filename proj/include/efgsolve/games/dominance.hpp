#pragma once

#include <cstddef>
#include <vector>

#include "efgsolve/core/game.hpp"
#include "efgsolve/core/game_tree.hpp"
#include "efgsolve/games/kuhn.hpp"

namespace efg {

// Pure-strategy dominance below an information set.
//
// Action a at I (owned by i) is dominated when some plan for i that plays
// another action b at I and fixes i's actions further down does at least as
// well as every plan starting with a, against every surviving pure strategy of
// the opponent, and strictly better against at least one. Payoffs are
// restricted to terminals below I and weighted by chance and the opponent's
// reach, so i's own play before I never matters. Dominated actions are removed
// simultaneously and the test is repeated until nothing changes; the result
// is iterated dominance in the usual game-theoretic sense.
class DominanceOracle {
 public:
  static constexpr std::size_t kDefaultBudget = 50'000'000;

  // Throws SizeError when a single test would exceed `budget` leaf visits.
  explicit DominanceOracle(const GameTree& tree, std::size_t budget = kDefaultBudget);

  bool eliminated(std::int32_t infoset, ActionId a) const { return !alive_[infoset][a]; }
  // Round in which the action was removed (1-based), 0 if it survives.
  int elimination_round(std::int32_t infoset, ActionId a) const { return round_[infoset][a]; }

  std::vector<InfosetAction> eliminated_actions() const;

 private:
  bool dominated(std::int32_t infoset, ActionId a) const;

  const GameTree& tree_;
  std::size_t budget_;
  std::vector<std::vector<bool>> alive_;
  std::vector<std::vector<int>> round_;
};

// True when (key, a) is removed by iterated dominance. Throws
// GameMismatchError when the key is not an infoset of the game.
bool verify_dominated(const GamePtr& game, const InfoSetKey& key, ActionId a,
                      std::size_t budget = DominanceOracle::kDefaultBudget);

}  // namespace efg
