#include "efgsolve/core/strategy.hpp"

#include <cmath>
#include <string>

#include "efgsolve/core/errors.hpp"

namespace efg {

void BehaviorStrategy::set(const InfoSetKey& key, std::vector<double> probs) {
  if (probs.empty()) throw ValidationError("empty probability vector for key " + key.hex());
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw ValidationError("negative or non-finite probability at key " + key.hex());
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw ValidationError("probabilities at key " + key.hex() + " sum to " +
                          std::to_string(total));
  }
  table_[key] = std::move(probs);
}

const std::vector<double>* BehaviorStrategy::find(const InfoSetKey& key) const {
  auto it = table_.find(key);
  return it == table_.end() ? nullptr : &it->second;
}

std::vector<double> BehaviorStrategy::probabilities(const InfoSetKey& key,
                                                    std::size_t num_actions) const {
  if (const auto* stored = find(key)) {
    if (stored->size() != num_actions) {
      throw ValidationError("key " + key.hex() + " has " + std::to_string(stored->size()) +
                            " probabilities, game has " + std::to_string(num_actions) +
                            " actions");
    }
    return *stored;
  }
  return std::vector<double>(num_actions, 1.0 / static_cast<double>(num_actions));
}

double BehaviorStrategy::probability(const InfoSetKey& key, std::size_t num_actions,
                                     ActionId a) const {
  if (const auto* stored = find(key)) {
    if (stored->size() != num_actions) {
      throw ValidationError("key " + key.hex() + " has wrong action count");
    }
    return (*stored)[a];
  }
  return 1.0 / static_cast<double>(num_actions);
}

StrategyProfile combine(const BehaviorStrategy& player_one, const BehaviorStrategy& player_two) {
  StrategyProfile profile;
  profile[Player::kOne] = player_one;
  profile[Player::kTwo] = player_two;
  return profile;
}

}  // namespace efg
