#include "efgsolve/eval/kuhn_metrics.hpp"

#include "efgsolve/core/game_tree.hpp"
#include "efgsolve/games/games.hpp"
#include "efgsolve/games/kuhn.hpp"

namespace efg {

namespace {

void check_kuhn(const StrategyProfile& profile) {
  static const GameTree tree(make_kuhn());
  for (Player p : kPlayers) check_strategy_matches(tree, profile[p], p);
}

double bet(const StrategyProfile& profile, Player p, int card, std::initializer_list<ActionId> b) {
  return profile[p].probability(kuhn_key(p, card, b), 2, kBet);
}

double square(double x) { return x * x; }

}  // namespace

KuhnParameters kuhn_parameters(const StrategyProfile& profile) {
  check_kuhn(profile);
  KuhnParameters out;
  out.alpha = bet(profile, Player::kOne, kJack, {});
  out.beta = bet(profile, Player::kOne, kQueen, {kPass, kBet});
  out.gamma = bet(profile, Player::kOne, kKing, {});
  out.eta = bet(profile, Player::kTwo, kQueen, {kBet});
  out.xi = bet(profile, Player::kTwo, kJack, {kPass});
  return out;
}

double kuhn_squared_error(const StrategyProfile& profile) {
  const auto k = kuhn_parameters(profile);
  const KuhnEquilibriumSpec target{k.gamma};
  return square(k.alpha - target.alpha()) + square(k.beta - target.beta()) +
         square(k.eta - KuhnEquilibriumSpec::eta) + square(k.xi - KuhnEquilibriumSpec::xi);
}

double dominated_error(const StrategyProfile& profile) {
  check_kuhn(profile);
  double total = 0.0;
  for (const auto& [key, a] : kuhn_dominated_actions()) total += profile[key.owner].probability(key, 2, a);
  return total;
}

}  // namespace efg
