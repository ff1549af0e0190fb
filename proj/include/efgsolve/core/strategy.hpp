#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "efgsolve/core/types.hpp"

namespace efg {

// Probability vectors per information set for one player. Information sets
// without an entry are read as uniform over their legal actions.
class BehaviorStrategy {
 public:
  using Table = std::map<InfoSetKey, std::vector<double>>;

  static constexpr double kSumTolerance = 1e-9;

  // Throws ValidationError unless probs is non-empty, non-negative and sums
  // to one within kSumTolerance.
  void set(const InfoSetKey& key, std::vector<double> probs);

  const std::vector<double>* find(const InfoSetKey& key) const;
  bool contains(const InfoSetKey& key) const { return find(key) != nullptr; }

  // Stored vector, or uniform when absent. Throws ValidationError when a
  // stored vector has the wrong length.
  std::vector<double> probabilities(const InfoSetKey& key, std::size_t num_actions) const;
  double probability(const InfoSetKey& key, std::size_t num_actions, ActionId a) const;

  const Table& table() const { return table_; }
  std::size_t size() const { return table_.size(); }
  bool empty() const { return table_.empty(); }

  bool operator==(const BehaviorStrategy&) const = default;

 private:
  Table table_;
};

struct StrategyProfile {
  std::array<BehaviorStrategy, 2> players;

  BehaviorStrategy& operator[](Player p) { return players[index_of(p)]; }
  const BehaviorStrategy& operator[](Player p) const { return players[index_of(p)]; }

  bool operator==(const StrategyProfile&) const = default;
};

StrategyProfile combine(const BehaviorStrategy& player_one, const BehaviorStrategy& player_two);

}  // namespace efg
