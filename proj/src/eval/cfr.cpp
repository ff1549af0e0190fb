#include "efgsolve/eval/cfr.hpp"

#include <array>

#include "efgsolve/core/regret_matching.hpp"

namespace efg {

namespace {

// Reach factors indexed by Player: player one, player two, chance.
using Reach = std::array<double, 3>;

double opponent_reach(const Reach& reach, Player p) {
  return reach[2] * (p == Player::kOne ? reach[1] : reach[0]);
}

// Returns player one's expected utility below `id` and accumulates immediate
// regrets (and, when `strategy_sum` is set, the owner-reach-weighted policy).
double traverse(const GameTree& tree, const TabularPolicy& policy, std::int32_t id,
                const Reach& reach, std::vector<double>& regrets,
                std::vector<double>* strategy_sum) {
  const auto& n = tree.node(id);
  if (n.terminal) return n.utility;
  if (n.player == Player::kChance) {
    const auto probs = tree.chance_probs(id);
    double v = 0.0;
    for (std::int32_t a = 0; a < n.num_children; ++a) {
      Reach next = reach;
      next[2] *= probs[a];
      v += probs[a] * traverse(tree, policy, n.first_child + a, next, regrets, strategy_sum);
    }
    return v;
  }

  const auto sigma = policy.at(n.infoset);
  const int me = index_of(n.player);
  std::array<double, 64> small{};
  std::vector<double> large;
  double* child_values = small.data();
  if (n.num_children > static_cast<std::int32_t>(small.size())) {
    large.resize(n.num_children);
    child_values = large.data();
  }
  double v = 0.0;
  for (std::int32_t a = 0; a < n.num_children; ++a) {
    Reach next = reach;
    next[me] *= sigma[a];
    child_values[a] = traverse(tree, policy, n.first_child + a, next, regrets, strategy_sum);
    v += sigma[a] * child_values[a];
  }

  const auto offset = tree.infoset(n.infoset).offset;
  const double weight = opponent_reach(reach, n.player) * sign_of(n.player);
  for (std::int32_t a = 0; a < n.num_children; ++a) {
    regrets[offset + a] += weight * (child_values[a] - v);
    if (strategy_sum) (*strategy_sum)[offset + a] += reach[me] * sigma[a];
  }
  return v;
}

}  // namespace

CfrState::CfrState(const GameTree& t)
    : tree(&t), regrets(t.num_infoset_actions(), 0.0), strategy_sum(t.num_infoset_actions(), 0.0) {}

TabularPolicy CfrState::current_policy() const {
  TabularPolicy policy(*tree);
  for (std::int32_t id = 0; id < static_cast<std::int32_t>(tree->infosets().size()); ++id) {
    const auto& info = tree->infoset(id);
    regret_matching({regrets.data() + info.offset, static_cast<std::size_t>(info.num_actions)},
                    policy.at(id));
  }
  return policy;
}

TabularPolicy CfrState::average_policy() const { return normalize_weights(*tree, strategy_sum); }

void cfr_iteration(CfrState& state) {
  const auto policy = state.current_policy();
  traverse(*state.tree, policy, state.tree->root(), Reach{1.0, 1.0, 1.0}, state.regrets,
           &state.strategy_sum);
  ++state.iteration;
  state.nodes_visited += state.tree->size();
}

std::vector<double> counterfactual_regrets(const TabularPolicy& policy) {
  const auto& tree = policy.tree();
  std::vector<double> regrets(tree.num_infoset_actions(), 0.0);
  traverse(tree, policy, tree.root(), Reach{1.0, 1.0, 1.0}, regrets, nullptr);
  return regrets;
}

}  // namespace efg
