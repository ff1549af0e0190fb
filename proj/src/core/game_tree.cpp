#include "efgsolve/core/game_tree.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "efgsolve/core/errors.hpp"

namespace efg {

namespace {

class TreeBuilder {
 public:
  TreeBuilder(const Game& game, std::size_t node_limit, std::vector<TreeNode>& nodes,
              std::vector<double>& chance_probs, std::vector<InfosetInfo>& infosets,
              std::unordered_map<InfoSetKey, std::int32_t, InfoSetKeyHash>& index)
      : game_(game),
        node_limit_(node_limit),
        nodes_(nodes),
        chance_probs_(chance_probs),
        infosets_(infosets),
        index_(index) {}

  void build() {
    nodes_.emplace_back();
    History h;
    expand(0, h);
  }

 private:
  void expand(std::int32_t id, History& h) {
    if (game_.is_terminal(h)) {
      nodes_[id].terminal = true;
      nodes_[id].utility = game_.utility(h, Player::kOne);
      return;
    }
    const Player player = game_.current_player(h);
    const auto n = static_cast<std::int32_t>(game_.num_actions(h));
    if (n <= 0) throw Error("non-terminal history without actions: " + h.to_string());

    nodes_[id].player = player;
    if (player == Player::kChance) {
      auto probs = game_.chance_probs(h);
      if (static_cast<std::int32_t>(probs.size()) != n) {
        throw Error("chance distribution size mismatch at " + h.to_string());
      }
      double total = 0.0;
      for (double p : probs) total += p;
      if (std::abs(total - 1.0) > 1e-12) {
        throw Error("chance probabilities do not sum to 1 at " + h.to_string());
      }
      nodes_[id].chance_offset = static_cast<std::int32_t>(chance_probs_.size());
      chance_probs_.insert(chance_probs_.end(), probs.begin(), probs.end());
    } else {
      nodes_[id].infoset = register_infoset(game_.infoset_key(h, player), player, n, id, h);
    }

    if (nodes_.size() + static_cast<std::size_t>(n) > node_limit_) {
      throw SizeError("game tree exceeds node limit of " + std::to_string(node_limit_));
    }
    const auto first = static_cast<std::int32_t>(nodes_.size());
    nodes_[id].first_child = first;
    nodes_[id].num_children = n;
    const std::int32_t depth = nodes_[id].depth + 1;
    for (std::int32_t a = 0; a < n; ++a) {
      TreeNode child;
      child.parent = id;
      child.action_from_parent = static_cast<ActionId>(a);
      child.depth = depth;
      nodes_.push_back(child);
    }
    for (std::int32_t a = 0; a < n; ++a) {
      h.push(static_cast<ActionId>(a));
      expand(first + a, h);
      h.pop();
    }
  }

  std::int32_t register_infoset(InfoSetKey key, Player player, std::int32_t num_actions,
                                std::int32_t node, const History& h) {
    if (key.owner != player) {
      throw Error("infoset key owner differs from acting player at " + h.to_string());
    }
    auto [it, inserted] = index_.try_emplace(key, static_cast<std::int32_t>(infosets_.size()));
    if (inserted) {
      InfosetInfo info;
      info.key = std::move(key);
      info.num_actions = num_actions;
      infosets_.push_back(std::move(info));
    } else if (infosets_[it->second].num_actions != num_actions) {
      throw Error("histories in infoset " + it->first.hex() + " disagree on action count");
    }
    infosets_[it->second].members.push_back(node);
    return it->second;
  }

  const Game& game_;
  std::size_t node_limit_;
  std::vector<TreeNode>& nodes_;
  std::vector<double>& chance_probs_;
  std::vector<InfosetInfo>& infosets_;
  std::unordered_map<InfoSetKey, std::int32_t, InfoSetKeyHash>& index_;
};

}  // namespace

GameTree::GameTree(GamePtr game, std::size_t node_limit) : game_(std::move(game)) {
  if (!game_) throw ParameterError("null game");
  TreeBuilder(*game_, node_limit, nodes_, chance_probs_, infosets_, infoset_index_).build();
  std::int32_t offset = 0;
  for (auto& info : infosets_) {
    info.offset = offset;
    offset += info.num_actions;
  }
  num_infoset_actions_ = static_cast<std::size_t>(offset);
  for (std::int32_t id = 0; id < static_cast<std::int32_t>(nodes_.size()); ++id) {
    if (nodes_[id].terminal) terminals_.push_back(id);
  }
}

std::span<const double> GameTree::chance_probs(std::int32_t id) const {
  const auto& n = nodes_[id];
  return {chance_probs_.data() + n.chance_offset, static_cast<std::size_t>(n.num_children)};
}

std::optional<std::int32_t> GameTree::find_infoset(const InfoSetKey& key) const {
  auto it = infoset_index_.find(key);
  if (it == infoset_index_.end()) return std::nullopt;
  return it->second;
}

History GameTree::history(std::int32_t id) const {
  std::vector<ActionId> actions;
  for (std::int32_t cur = id; nodes_[cur].parent >= 0; cur = nodes_[cur].parent) {
    actions.push_back(nodes_[cur].action_from_parent);
  }
  std::reverse(actions.begin(), actions.end());
  return History(std::move(actions));
}

std::int32_t GameTree::find_node(const History& h) const {
  std::int32_t id = root();
  for (ActionId a : h.actions()) {
    const auto& n = nodes_[id];
    if (n.terminal || a >= static_cast<ActionId>(n.num_children)) {
      throw InvalidHistoryError("history " + h.to_string() + " is not in the game");
    }
    id = n.first_child + static_cast<std::int32_t>(a);
  }
  return id;
}

TabularPolicy::TabularPolicy(const GameTree& tree)
    : tree_(&tree), probs_(tree.num_infoset_actions()) {
  for (const auto& info : tree.infosets()) {
    std::fill_n(probs_.begin() + info.offset, info.num_actions,
                1.0 / static_cast<double>(info.num_actions));
  }
}

TabularPolicy TabularPolicy::from_profile(const GameTree& tree, const StrategyProfile& profile) {
  TabularPolicy policy(tree);
  for (const auto& info : tree.infosets()) {
    auto probs = profile[info.key.owner].probabilities(info.key, info.num_actions);
    std::copy(probs.begin(), probs.end(), policy.probs_.begin() + info.offset);
  }
  return policy;
}

TabularPolicy TabularPolicy::from_strategy(const GameTree& tree, const BehaviorStrategy& strategy,
                                           Player owner) {
  StrategyProfile profile;
  profile[owner] = strategy;
  return from_profile(tree, profile);
}

void check_strategy_matches(const GameTree& tree, const BehaviorStrategy& strategy, Player owner) {
  for (const auto& [key, probs] : strategy.table()) {
    const auto id = key.owner == owner ? tree.find_infoset(key) : std::nullopt;
    if (!id) {
      throw GameMismatchError("player " + to_string(owner) + " key " + key.hex() +
                              " is not an infoset of " + tree.game().name());
    }
    if (static_cast<std::int32_t>(probs.size()) != tree.infoset(*id).num_actions) {
      throw GameMismatchError("key " + key.hex() + " has " + std::to_string(probs.size()) +
                              " probabilities but the infoset has " +
                              std::to_string(tree.infoset(*id).num_actions) + " actions");
    }
  }
}

std::span<const double> TabularPolicy::at(std::int32_t infoset) const {
  const auto& info = tree_->infoset(infoset);
  return {probs_.data() + info.offset, static_cast<std::size_t>(info.num_actions)};
}

std::span<double> TabularPolicy::at(std::int32_t infoset) {
  const auto& info = tree_->infoset(infoset);
  return {probs_.data() + info.offset, static_cast<std::size_t>(info.num_actions)};
}

void TabularPolicy::assign_player(const TabularPolicy& other, Player owner) {
  if (other.tree_ != tree_) throw ParameterError("policies live on different trees");
  for (const auto& info : tree_->infosets()) {
    if (info.key.owner != owner) continue;
    std::copy_n(other.probs_.begin() + info.offset, info.num_actions,
                probs_.begin() + info.offset);
  }
}

BehaviorStrategy TabularPolicy::to_strategy(Player owner) const {
  BehaviorStrategy strategy;
  for (std::int32_t id = 0; id < static_cast<std::int32_t>(tree_->infosets().size()); ++id) {
    const auto& info = tree_->infoset(id);
    if (info.key.owner != owner) continue;
    auto probs = at(id);
    strategy.set(info.key, std::vector<double>(probs.begin(), probs.end()));
  }
  return strategy;
}

StrategyProfile TabularPolicy::to_profile() const {
  return combine(to_strategy(Player::kOne), to_strategy(Player::kTwo));
}

TabularPolicy normalize_weights(const GameTree& tree, std::span<const double> weights) {
  if (weights.size() != tree.num_infoset_actions()) {
    throw ParameterError("weight table does not match tree");
  }
  TabularPolicy policy(tree);
  for (std::int32_t id = 0; id < static_cast<std::int32_t>(tree.infosets().size()); ++id) {
    const auto& info = tree.infoset(id);
    double total = 0.0;
    for (std::int32_t a = 0; a < info.num_actions; ++a) total += weights[info.offset + a];
    if (total <= 0.0) continue;
    auto row = policy.at(id);
    for (std::int32_t a = 0; a < info.num_actions; ++a) row[a] = weights[info.offset + a] / total;
  }
  return policy;
}

}  // namespace efg
