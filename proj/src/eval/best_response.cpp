#include "efgsolve/eval/best_response.hpp"

#include <cmath>

#include "efgsolve/core/errors.hpp"

namespace efg {

namespace {

class BestResponder {
 public:
  BestResponder(const TabularPolicy& policy, Player responder)
      : tree_(policy.tree()),
        policy_(policy),
        responder_(responder),
        opponent_reach_(tree_.size(), 0.0),
        value_(tree_.size(), 0.0),
        done_(tree_.size(), false),
        choice_(tree_.infosets().size(), -1) {
    // Nodes are stored parents-first, so one forward sweep fills pi_{-i}.
    opponent_reach_[tree_.root()] = 1.0;
    for (std::int32_t id = 0; id < static_cast<std::int32_t>(tree_.size()); ++id) {
      const auto& n = tree_.node(id);
      if (n.terminal) continue;
      const double reach = opponent_reach_[id];
      if (n.player == Player::kChance) {
        const auto probs = tree_.chance_probs(id);
        for (std::int32_t a = 0; a < n.num_children; ++a) {
          opponent_reach_[n.first_child + a] = reach * probs[a];
        }
      } else if (n.player == responder_) {
        for (std::int32_t a = 0; a < n.num_children; ++a) opponent_reach_[n.first_child + a] = reach;
      } else {
        const auto sigma = policy_.at(n.infoset);
        for (std::int32_t a = 0; a < n.num_children; ++a) {
          opponent_reach_[n.first_child + a] = reach * sigma[a];
        }
      }
    }
  }

  BestResponseResult run() {
    BestResponseResult result;
    result.value = value(tree_.root());
    for (std::int32_t id = 0; id < static_cast<std::int32_t>(tree_.infosets().size()); ++id) {
      const auto& info = tree_.infoset(id);
      if (info.key.owner != responder_) continue;
      std::vector<double> probs(info.num_actions, 0.0);
      probs[choose(id)] = 1.0;
      result.strategy.set(info.key, std::move(probs));
    }
    return result;
  }

 private:
  double value(std::int32_t id) {
    if (done_[id]) return value_[id];
    const auto& n = tree_.node(id);
    double v = 0.0;
    if (n.terminal) {
      v = sign_of(responder_) * n.utility;
    } else if (n.player == Player::kChance) {
      const auto probs = tree_.chance_probs(id);
      for (std::int32_t a = 0; a < n.num_children; ++a) v += probs[a] * value(n.first_child + a);
    } else if (n.player == responder_) {
      v = value(n.first_child + choose(n.infoset));
    } else {
      const auto sigma = policy_.at(n.infoset);
      for (std::int32_t a = 0; a < n.num_children; ++a) {
        if (sigma[a] > 0.0) v += sigma[a] * value(n.first_child + a);
      }
    }
    done_[id] = true;
    value_[id] = v;
    return v;
  }

  std::int32_t choose(std::int32_t infoset) {
    if (choice_[infoset] >= 0) return choice_[infoset];
    const auto& info = tree_.infoset(infoset);
    std::int32_t best = 0;
    double best_value = -INFINITY;
    for (std::int32_t a = 0; a < info.num_actions; ++a) {
      double q = 0.0;
      for (auto m : info.members) q += opponent_reach_[m] * value(tree_.node(m).first_child + a);
      if (q > best_value) {
        best_value = q;
        best = a;
      }
    }
    choice_[infoset] = best;
    return best;
  }

  const GameTree& tree_;
  const TabularPolicy& policy_;
  Player responder_;
  std::vector<double> opponent_reach_;
  std::vector<double> value_;
  std::vector<bool> done_;
  std::vector<std::int32_t> choice_;
};

}  // namespace

BestResponseResult best_response(const TabularPolicy& policy, Player responder) {
  if (responder == Player::kChance) throw ParameterError("chance cannot best-respond");
  return BestResponder(policy, responder).run();
}

BestResponseResult best_response(const GamePtr& game, const BehaviorStrategy& opponent_strategy,
                                 Player responder) {
  if (responder == Player::kChance) throw ParameterError("chance cannot best-respond");
  const GameTree tree(game);
  const Player other = opponent(responder);
  check_strategy_matches(tree, opponent_strategy, other);
  const auto policy = TabularPolicy::from_strategy(tree, opponent_strategy, other);
  return best_response(policy, responder);
}

double exploitability(const TabularPolicy& policy) {
  return best_response(policy, Player::kOne).value + best_response(policy, Player::kTwo).value;
}

double exploitability(const GamePtr& game, const StrategyProfile& profile) {
  const GameTree tree(game);
  for (Player p : kPlayers) check_strategy_matches(tree, profile[p], p);
  return exploitability(TabularPolicy::from_profile(tree, profile));
}

}  // namespace efg
