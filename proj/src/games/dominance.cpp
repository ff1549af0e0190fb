#include "efgsolve/games/dominance.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "efgsolve/core/errors.hpp"

namespace efg {

namespace {

constexpr double kTolerance = 1e-12;

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

// Odometer over the surviving actions of a list of infosets.
class PureStrategyCounter {
 public:
  PureStrategyCounter(std::vector<std::int32_t> infosets,
                      const std::vector<std::vector<bool>>& alive)
      : infosets_(std::move(infosets)) {
    for (auto id : infosets_) {
      std::vector<ActionId> options;
      for (ActionId a = 0; a < alive[id].size(); ++a) {
        if (alive[id][a]) options.push_back(a);
      }
      options_.push_back(std::move(options));
    }
    digits_.assign(infosets_.size(), 0);
  }

  // Saturates at SIZE_MAX.
  std::size_t count() const {
    std::size_t n = 1;
    for (const auto& o : options_) n = saturating_mul(n, o.size());
    return n;
  }

  void write(std::vector<std::int32_t>& choice) const {
    for (std::size_t k = 0; k < infosets_.size(); ++k) {
      choice[infosets_[k]] = static_cast<std::int32_t>(options_[k][digits_[k]]);
    }
  }

  bool advance() {
    for (std::size_t k = 0; k < digits_.size(); ++k) {
      if (++digits_[k] < options_[k].size()) return true;
      digits_[k] = 0;
    }
    return false;
  }

  void reset() { std::fill(digits_.begin(), digits_.end(), 0); }

 private:
  std::vector<std::int32_t> infosets_;
  std::vector<std::vector<ActionId>> options_;
  std::vector<std::size_t> digits_;
};

struct Subtree {
  std::set<std::int32_t> own;
  std::set<std::int32_t> opponent;
  std::size_t nodes = 0;
};

void collect(const GameTree& tree, std::int32_t id, Player owner, Subtree& out) {
  const auto& n = tree.node(id);
  ++out.nodes;
  if (n.terminal) return;
  if (n.player == owner) {
    out.own.insert(n.infoset);
  } else if (n.player != Player::kChance) {
    out.opponent.insert(n.infoset);
  }
  for (std::int32_t k = 0; k < n.num_children; ++k) collect(tree, n.first_child + k, owner, out);
}

// Owner's utility below `id`, chance-weighted, with both players pure.
double subtree_value(const GameTree& tree, std::int32_t id, Player owner,
                     const std::vector<std::int32_t>& choice) {
  const auto& n = tree.node(id);
  if (n.terminal) return sign_of(owner) * n.utility;
  if (n.player == Player::kChance) {
    const auto probs = tree.chance_probs(id);
    double v = 0.0;
    for (std::int32_t k = 0; k < n.num_children; ++k) {
      v += probs[k] * subtree_value(tree, n.first_child + k, owner, choice);
    }
    return v;
  }
  return subtree_value(tree, tree.child(id, choice[n.infoset]), owner, choice);
}

struct MemberPrefix {
  std::int32_t node = 0;
  double chance = 1.0;
  std::vector<std::pair<std::int32_t, ActionId>> opponent_moves;
};

MemberPrefix prefix_of(const GameTree& tree, std::int32_t member, Player owner) {
  MemberPrefix out;
  out.node = member;
  for (std::int32_t id = member; tree.node(id).parent >= 0; id = tree.node(id).parent) {
    const auto& parent = tree.node(tree.node(id).parent);
    const ActionId a = tree.node(id).action_from_parent;
    if (parent.player == Player::kChance) {
      out.chance *= tree.chance_probs(tree.node(id).parent)[a];
    } else if (parent.player != owner) {
      out.opponent_moves.emplace_back(parent.infoset, a);
    }
  }
  return out;
}

}  // namespace

DominanceOracle::DominanceOracle(const GameTree& tree, std::size_t budget)
    : tree_(tree), budget_(budget) {
  for (const auto& info : tree.infosets()) {
    alive_.emplace_back(info.num_actions, true);
    round_.emplace_back(info.num_actions, 0);
  }
  for (int round = 1;; ++round) {
    std::vector<std::pair<std::int32_t, ActionId>> removed;
    for (std::int32_t id = 0; id < static_cast<std::int32_t>(alive_.size()); ++id) {
      for (ActionId a = 0; a < alive_[id].size(); ++a) {
        if (alive_[id][a] && dominated(id, a)) removed.emplace_back(id, a);
      }
    }
    if (removed.empty()) break;
    for (auto [id, a] : removed) {
      alive_[id][a] = false;
      round_[id][a] = round;
    }
  }
}

bool DominanceOracle::dominated(std::int32_t infoset, ActionId a) const {
  const auto& info = tree_.infoset(infoset);
  const Player owner = info.key.owner;

  std::vector<MemberPrefix> prefixes;
  std::set<std::int32_t> opponent_sets;
  for (auto m : info.members) {
    prefixes.push_back(prefix_of(tree_, m, owner));
    for (auto [id, act] : prefixes.back().opponent_moves) opponent_sets.insert(id);
  }

  // Own infosets below each action; opponent infosets below any action.
  std::vector<Subtree> below(info.num_actions);
  for (ActionId x = 0; x < static_cast<ActionId>(info.num_actions); ++x) {
    for (auto m : info.members) collect(tree_, tree_.child(m, x), owner, below[x]);
    opponent_sets.insert(below[x].opponent.begin(), below[x].opponent.end());
  }

  PureStrategyCounter opponent({opponent_sets.begin(), opponent_sets.end()}, alive_);
  const std::size_t num_opponent = opponent.count();

  std::vector<std::int32_t> choice(tree_.infosets().size(), -1);
  // payoff[plan][tau] for the plans that start with action x.
  auto table = [&](ActionId x) {
    PureStrategyCounter own({below[x].own.begin(), below[x].own.end()}, alive_);
    const std::size_t cost =
        saturating_mul(saturating_mul(own.count(), num_opponent), below[x].nodes);
    if (cost > budget_) {
      throw SizeError("dominance test at " + info.key.hex() + " needs " + std::to_string(cost) +
                      " visits, budget " + std::to_string(budget_));
    }
    std::vector<std::vector<double>> out;
    do {
      own.write(choice);
      std::vector<double> row;
      opponent.reset();
      do {
        opponent.write(choice);
        double v = 0.0;
        for (const auto& p : prefixes) {
          bool reached = true;
          for (auto [id, act] : p.opponent_moves) reached = reached && choice[id] == static_cast<std::int32_t>(act);
          if (reached) v += p.chance * subtree_value(tree_, tree_.child(p.node, x), owner, choice);
        }
        row.push_back(v);
      } while (opponent.advance());
      out.push_back(std::move(row));
    } while (own.advance());
    return out;
  };

  const auto worse = table(a);
  for (ActionId b = 0; b < static_cast<ActionId>(info.num_actions); ++b) {
    if (b == a || !alive_[infoset][b]) continue;
    for (const auto& candidate : table(b)) {
      bool dominates = true;
      for (const auto& row : worse) {
        bool strict = false;
        for (std::size_t t = 0; t < num_opponent && dominates; ++t) {
          if (candidate[t] < row[t] - kTolerance) dominates = false;
          if (candidate[t] > row[t] + kTolerance) strict = true;
        }
        if (!dominates || !strict) {
          dominates = false;
          break;
        }
      }
      if (dominates) return true;
    }
  }
  return false;
}

std::vector<InfosetAction> DominanceOracle::eliminated_actions() const {
  std::vector<InfosetAction> out;
  for (std::int32_t id = 0; id < static_cast<std::int32_t>(alive_.size()); ++id) {
    for (ActionId a = 0; a < alive_[id].size(); ++a) {
      if (!alive_[id][a]) out.push_back({tree_.infoset(id).key, a});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_dominated(const GamePtr& game, const InfoSetKey& key, ActionId a, std::size_t budget) {
  const GameTree tree(game);
  const auto id = tree.find_infoset(key);
  if (!id) throw GameMismatchError("infoset " + key.hex() + " is not in " + game->name());
  if (a >= static_cast<ActionId>(tree.infoset(*id).num_actions)) {
    throw InvalidHistoryError("action " + std::to_string(a) + " is not legal at " + key.hex());
  }
  return DominanceOracle(tree, budget).eliminated(*id, a);
}

}  // namespace efg
