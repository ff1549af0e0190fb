#include "efgsolve/games/kuhn.hpp"

#include <algorithm>

#include "efgsolve/core/errors.hpp"
#include "efgsolve/games/games.hpp"

namespace efg {

InfoSetKey kuhn_key(Player owner, int card, std::initializer_list<ActionId> betting) {
  KeyBuilder key;
  key.put(static_cast<std::uint32_t>(card));
  for (ActionId a : betting) key.put(a);
  return key.build(owner);
}

StrategyProfile kuhn_equilibrium_profile(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ParameterError("gamma must lie in [0, 1]");
  const KuhnEquilibriumSpec spec{gamma};
  auto bet = [](double p) { return std::vector<double>{1.0 - p, p}; };

  StrategyProfile profile;
  auto& p1 = profile[Player::kOne];
  p1.set(kuhn_key(Player::kOne, kJack, {}), bet(spec.alpha()));
  p1.set(kuhn_key(Player::kOne, kQueen, {}), bet(0.0));
  p1.set(kuhn_key(Player::kOne, kKing, {}), bet(spec.gamma));
  p1.set(kuhn_key(Player::kOne, kJack, {kPass, kBet}), bet(0.0));
  p1.set(kuhn_key(Player::kOne, kQueen, {kPass, kBet}), bet(spec.beta()));
  p1.set(kuhn_key(Player::kOne, kKing, {kPass, kBet}), bet(1.0));

  auto& p2 = profile[Player::kTwo];
  p2.set(kuhn_key(Player::kTwo, kJack, {kBet}), bet(0.0));
  p2.set(kuhn_key(Player::kTwo, kQueen, {kBet}), bet(KuhnEquilibriumSpec::eta));
  p2.set(kuhn_key(Player::kTwo, kKing, {kBet}), bet(1.0));
  p2.set(kuhn_key(Player::kTwo, kJack, {kPass}), bet(KuhnEquilibriumSpec::xi));
  p2.set(kuhn_key(Player::kTwo, kQueen, {kPass}), bet(0.0));
  p2.set(kuhn_key(Player::kTwo, kKing, {kPass}), bet(1.0));
  return profile;
}

std::vector<InfosetAction> kuhn_dominated_actions() {
  std::vector<InfosetAction> out{
      {kuhn_key(Player::kOne, kQueen, {}), kBet},
      {kuhn_key(Player::kOne, kJack, {kPass, kBet}), kBet},
      {kuhn_key(Player::kOne, kKing, {kPass, kBet}), kPass},
      {kuhn_key(Player::kTwo, kJack, {kBet}), kBet},
      {kuhn_key(Player::kTwo, kKing, {kBet}), kPass},
      {kuhn_key(Player::kTwo, kQueen, {kPass}), kBet},
      {kuhn_key(Player::kTwo, kKing, {kPass}), kPass},
  };
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace efg
