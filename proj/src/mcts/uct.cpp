#include "efgsolve/mcts/uct.hpp"

#include <cmath>
#include <string>

#include "efgsolve/core/errors.hpp"

namespace efg {

void MctsConfig::validate() const {
  if (!(exploration >= 0.0) || !std::isfinite(exploration)) {
    throw ParameterError("exploration constant must be >= 0, got " + std::to_string(exploration));
  }
  if (iterations < 0) throw ParameterError("iterations must be non-negative");
}

UctTables::UctTables(const GameTree& t)
    : tree(&t),
      value(t.num_infoset_actions(), 0.0),
      visits(t.num_infoset_actions(), 0),
      parent_visits(t.infosets().size(), 0) {}

ActionId uct_select(const UctTables& tables, std::int32_t infoset, double exploration) {
  const auto& info = tables.tree->infoset(infoset);
  for (std::int32_t a = 0; a < info.num_actions; ++a) {
    if (tables.visits[info.offset + a] == 0) return static_cast<ActionId>(a);
  }
  const double log_parent = std::log(static_cast<double>(tables.parent_visits[infoset]));
  ActionId best = 0;
  double best_score = -INFINITY;
  for (std::int32_t a = 0; a < info.num_actions; ++a) {
    const auto slot = info.offset + a;
    const double score =
        tables.value[slot] +
        exploration * std::sqrt(log_parent / static_cast<double>(tables.visits[slot]));
    if (score > best_score) {
      best_score = score;
      best = static_cast<ActionId>(a);
    }
  }
  return best;
}

void mcts_iteration(UctTables& tables, double exploration, UniformSource& rng,
                    std::vector<RewardEvent>* trace) {
  const GameTree& tree = *tables.tree;
  thread_local std::vector<std::pair<std::int32_t, std::int32_t>> path;  // (infoset, slot)
  path.clear();

  std::int32_t id = tree.root();
  std::uint64_t visited = 1;
  while (!tree.node(id).terminal) {
    const auto& n = tree.node(id);
    ActionId a = 0;
    if (n.player == Player::kChance) {
      a = static_cast<ActionId>(sample_index(tree.chance_probs(id), rng.next()));
    } else {
      a = uct_select(tables, n.infoset, exploration);
      path.emplace_back(n.infoset, tree.infoset(n.infoset).offset + static_cast<std::int32_t>(a));
    }
    id = n.first_child + static_cast<std::int32_t>(a);
    ++visited;
  }

  const double u1 = tree.node(id).utility;
  for (auto [infoset, slot] : path) {
    const double reward = sign_of(tree.infoset_owner(infoset)) * u1;
    const auto n = ++tables.visits[slot];
    tables.value[slot] += (reward - tables.value[slot]) / static_cast<double>(n);
    ++tables.parent_visits[infoset];
    if (trace) trace->push_back({slot, reward});
  }
  ++tables.iteration;
  tables.nodes_visited += visited;
}

TabularPolicy extract_visit_strategy(const UctTables& tables) {
  std::vector<double> weights(tables.visits.begin(), tables.visits.end());
  return normalize_weights(*tables.tree, weights);
}

MctsSolver::MctsSolver(const GameTree& tree, MctsConfig config)
    : config_(config), tables_(tree), rng_(config.seed) {
  config_.validate();
}

void MctsSolver::run(std::int64_t iterations) {
  for (std::int64_t k = 0; k < iterations; ++k) mcts_iteration(tables_, config_.exploration, rng_);
}

}  // namespace efg
