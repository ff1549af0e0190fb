#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "efgsolve/core/game.hpp"
#include "efgsolve/core/strategy.hpp"

namespace efg {

// One history of the expanded game. Children of a node are contiguous.
struct TreeNode {
  Player player = Player::kChance;  // meaningless at terminals
  bool terminal = false;
  std::int32_t parent = -1;
  ActionId action_from_parent = 0;
  std::int32_t first_child = -1;
  std::int32_t num_children = 0;
  std::int32_t infoset = -1;       // decision nodes only
  std::int32_t chance_offset = -1;  // chance nodes only, into chance_probs()
  std::int32_t depth = 0;
  double utility = 0.0;             // player-one utility at terminals
};

struct InfosetInfo {
  InfoSetKey key;
  std::int32_t num_actions = 0;
  std::int32_t offset = 0;  // start of this infoset's slots in flat action arrays
  std::vector<std::int32_t> members;
};

// A Game expanded into an explicit node array with indexed information sets.
// Every solver runs on this form; keys keep it tied to the Game's strategies.
class GameTree {
 public:
  static constexpr std::size_t kDefaultNodeLimit = 20'000'000;

  explicit GameTree(GamePtr game, std::size_t node_limit = kDefaultNodeLimit);

  const Game& game() const { return *game_; }
  const GamePtr& game_ptr() const { return game_; }

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(std::int32_t id) const { return nodes_[id]; }
  std::int32_t root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }

  std::int32_t child(std::int32_t id, ActionId a) const { return nodes_[id].first_child + a; }
  std::span<const double> chance_probs(std::int32_t id) const;

  const std::vector<InfosetInfo>& infosets() const { return infosets_; }
  const InfosetInfo& infoset(std::int32_t id) const { return infosets_[id]; }
  std::optional<std::int32_t> find_infoset(const InfoSetKey& key) const;
  Player infoset_owner(std::int32_t id) const { return infosets_[id].key.owner; }

  // Total number of (infoset, action) slots.
  std::size_t num_infoset_actions() const { return num_infoset_actions_; }

  const std::vector<std::int32_t>& terminals() const { return terminals_; }

  History history(std::int32_t id) const;
  // Node reached by h; throws InvalidHistoryError when h is not in the game.
  std::int32_t find_node(const History& h) const;

 private:
  GamePtr game_;
  std::vector<TreeNode> nodes_;
  std::vector<double> chance_probs_;
  std::vector<InfosetInfo> infosets_;
  std::unordered_map<InfoSetKey, std::int32_t, InfoSetKeyHash> infoset_index_;
  std::vector<std::int32_t> terminals_;
  std::size_t num_infoset_actions_ = 0;
};

// Behavior strategies for both players laid out on a GameTree's infoset slots.
// The tree must outlive the policy.
class TabularPolicy {
 public:
  // Uniform everywhere.
  explicit TabularPolicy(const GameTree& tree);

  static TabularPolicy from_profile(const GameTree& tree, const StrategyProfile& profile);
  static TabularPolicy from_strategy(const GameTree& tree, const BehaviorStrategy& strategy,
                                     Player owner);

  std::span<const double> at(std::int32_t infoset) const;
  std::span<double> at(std::int32_t infoset);

  // Copies one player's infosets from another policy on the same tree.
  void assign_player(const TabularPolicy& other, Player owner);

  const GameTree& tree() const { return *tree_; }
  const std::vector<double>& values() const { return probs_; }

  // Every infoset of the tree, both players.
  StrategyProfile to_profile() const;
  BehaviorStrategy to_strategy(Player owner) const;

 private:
  const GameTree* tree_;
  std::vector<double> probs_;
};

// Throws GameMismatchError naming the first key of `strategy` that is not an
// infoset of `owner` in the tree, or whose vector length differs from the
// infoset's action count.
void check_strategy_matches(const GameTree& tree, const BehaviorStrategy& strategy, Player owner);

// Normalizes non-negative weights per infoset; all-zero rows become uniform.
TabularPolicy normalize_weights(const GameTree& tree, std::span<const double> weights);

}  // namespace efg
