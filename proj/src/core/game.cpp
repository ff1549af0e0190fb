#include "efgsolve/core/game.hpp"

#include <numeric>

#include "efgsolve/core/errors.hpp"

namespace efg {

std::vector<ActionId> Game::legal_actions(const History& h) const {
  std::vector<ActionId> actions(num_actions(h));
  std::iota(actions.begin(), actions.end(), ActionId{0});
  return actions;
}

void Game::validate(const History& h) const {
  History prefix;
  for (ActionId a : h.actions()) {
    if (is_terminal(prefix)) {
      throw InvalidHistoryError("action after terminal history " + prefix.to_string());
    }
    if (a >= num_actions(prefix)) {
      throw InvalidHistoryError("illegal action " + std::to_string(a) + " at " +
                                prefix.to_string());
    }
    prefix.push(a);
  }
}

}  // namespace efg
