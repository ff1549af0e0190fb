#pragma once

#include <cstdint>
#include <vector>

#include "efgsolve/core/game_tree.hpp"

namespace efg {

// Cumulative tables of vanilla CFR over a tree's flat infoset slots.
struct CfrState {
  explicit CfrState(const GameTree& tree);

  const GameTree* tree;
  std::vector<double> regrets;
  std::vector<double> strategy_sum;  // reach-weighted current strategies
  std::int64_t iteration = 0;
  std::uint64_t nodes_visited = 0;

  // Regret matching on the cumulative regrets.
  TabularPolicy current_policy() const;
  TabularPolicy average_policy() const;
};

// One full traversal: both players' immediate counterfactual regrets under
// the current strategy are added to the regret table at once, and the current
// strategy is added to the average with the owner's reach as weight.
void cfr_iteration(CfrState& state);

// Immediate counterfactual regrets r(I, a) = v(sigma_{I->a}, I) - v(sigma, I)
// for every infoset slot of both players, from the owner's point of view.
std::vector<double> counterfactual_regrets(const TabularPolicy& policy);

}  // namespace efg
