#pragma once

#include <cstdint>
#include <vector>

#include "efgsolve/core/game_tree.hpp"
#include "efgsolve/core/random.hpp"

namespace efg {

struct MctsConfig {
  double exploration = 2.0;  // C, in payoff units
  std::uint64_t seed = 0;
  std::int64_t iterations = 0;

  // Throws ParameterError when C < 0 or iterations < 0.
  void validate() const;
};

// Information-set statistics for UCT: mean reward and visit count per
// (infoset, action) slot, total visits per infoset. Rewards are the owner's.
struct UctTables {
  explicit UctTables(const GameTree& tree);

  const GameTree* tree;
  std::vector<double> value;
  std::vector<std::int64_t> visits;
  std::vector<std::int64_t> parent_visits;
  std::int64_t iteration = 0;
  std::uint64_t nodes_visited = 0;
};

// argmax_a v_a + C sqrt(ln n_p / n_a). Unvisited actions come first; ties go
// to the lowest action id.
ActionId uct_select(const UctTables& tables, std::int32_t infoset, double exploration);

// Credit given to one slot at the end of an iteration.
struct RewardEvent {
  std::int32_t slot = 0;
  double reward = 0.0;
};

// Samples chance, selects with UCT at every decision and credits every
// visited (infoset, action) with its owner's utility of the terminal.
// Appends the credits to `trace` when given.
void mcts_iteration(UctTables& tables, double exploration, UniformSource& rng,
                    std::vector<RewardEvent>* trace = nullptr);

// Probabilities proportional to visit counts; unvisited infosets uniform.
TabularPolicy extract_visit_strategy(const UctTables& tables);

class MctsSolver {
 public:
  MctsSolver(const GameTree& tree, MctsConfig config);

  void run(std::int64_t iterations);
  const UctTables& tables() const { return tables_; }
  TabularPolicy visit_policy() const { return extract_visit_strategy(tables_); }

 private:
  MctsConfig config_;
  UctTables tables_;
  SeededStream rng_;
};

}  // namespace efg
