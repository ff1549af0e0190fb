#include "efgsolve/core/probability.hpp"

#include "efgsolve/core/errors.hpp"

namespace efg {

double ReachProbabilities::of(Player p) const {
  switch (p) {
    case Player::kOne:
      return player_one;
    case Player::kTwo:
      return player_two;
    case Player::kChance:
      return chance;
  }
  return 0.0;
}

double ReachProbabilities::excluding(Player p) const {
  switch (p) {
    case Player::kOne:
      return player_two * chance;
    case Player::kTwo:
      return player_one * chance;
    case Player::kChance:
      return player_one * player_two;
  }
  return 0.0;
}

namespace {

// Multiplies the step probabilities of z's actions with index in [from, z.size()).
ReachProbabilities segment_probability(const Game& game, const StrategyProfile& profile,
                                       const History& z, std::size_t from) {
  ReachProbabilities reach;
  History prefix = z.prefix(from);
  for (std::size_t i = from; i < z.size(); ++i) {
    const ActionId a = z[i];
    if (game.is_terminal(prefix)) {
      throw InvalidHistoryError("action after terminal history " + prefix.to_string());
    }
    const std::size_t n = game.num_actions(prefix);
    if (a >= n) {
      throw InvalidHistoryError("illegal action " + std::to_string(a) + " at " +
                                prefix.to_string());
    }
    const Player p = game.current_player(prefix);
    if (p == Player::kChance) {
      reach.chance *= game.chance_probs(prefix)[a];
    } else {
      const double prob = profile[p].probability(game.infoset_key(prefix, p), n, a);
      if (p == Player::kOne) {
        reach.player_one *= prob;
      } else {
        reach.player_two *= prob;
      }
    }
    prefix.push(a);
  }
  return reach;
}

double walk(const GameTree& tree, const TabularPolicy& policy, std::int32_t id) {
  const auto& node = tree.node(id);
  if (node.terminal) return node.utility;
  double value = 0.0;
  if (node.player == Player::kChance) {
    auto probs = tree.chance_probs(id);
    for (std::int32_t a = 0; a < node.num_children; ++a) {
      if (probs[a] > 0.0) value += probs[a] * walk(tree, policy, node.first_child + a);
    }
  } else {
    auto probs = policy.at(node.infoset);
    for (std::int32_t a = 0; a < node.num_children; ++a) {
      if (probs[a] > 0.0) value += probs[a] * walk(tree, policy, node.first_child + a);
    }
  }
  return value;
}

}  // namespace

ReachProbabilities reach_probability(const Game& game, const StrategyProfile& profile,
                                     const History& h) {
  return segment_probability(game, profile, h, 0);
}

ReachProbabilities tail_probability_by_player(const Game& game, const StrategyProfile& profile,
                                              const History& h, const History& z) {
  game.validate(h);
  if (!h.is_prefix_of(z)) return {0.0, 0.0, 0.0};
  return segment_probability(game, profile, z, h.size());
}

double tail_probability(const Game& game, const StrategyProfile& profile, const History& h,
                        const History& z) {
  return tail_probability_by_player(game, profile, h, z).total();
}

double expected_value(const Game& game, const StrategyProfile& profile, Player p) {
  GameTree tree(std::shared_ptr<const Game>(&game, [](const Game*) {}));
  return expected_value(tree, TabularPolicy::from_profile(tree, profile), p);
}

double expected_value(const GameTree& tree, const TabularPolicy& policy, Player p) {
  return sign_of(p) * walk(tree, policy, tree.root());
}

}  // namespace efg
