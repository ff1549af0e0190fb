#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "efgsolve/core/types.hpp"

namespace efg {

// Rules of a two-player zero-sum extensive-form game, written as pure
// functions on histories. Legal actions at a non-terminal history are always
// the indices 0..num_actions(h)-1. Implementations are immutable and safe to
// share across threads.
class Game {
 public:
  virtual ~Game() = default;

  virtual std::string name() const = 0;

  // Largest number of outcomes at any chance node.
  virtual std::size_t num_chance_outcomes() const = 0;

  virtual bool is_terminal(const History& h) const = 0;

  // Player::kChance at chance nodes. Requires a non-terminal history.
  virtual Player current_player(const History& h) const = 0;

  virtual std::size_t num_actions(const History& h) const = 0;

  // Outcome distribution at a chance node, indexed by ActionId.
  virtual std::vector<double> chance_probs(const History& h) const = 0;

  // Utility of terminal history z for player p; utility(z, 2) = -utility(z, 1).
  virtual double utility(const History& z, Player p) const = 0;

  // Observation key of player p at history h.
  virtual InfoSetKey infoset_key(const History& h, Player p) const = 0;

  // Largest |utility| over all terminals, the game's payoff scale.
  virtual double payoff_scale() const = 0;

  virtual std::string action_label(const History& h, ActionId a) const {
    (void)h;
    return std::to_string(a);
  }

  std::vector<ActionId> legal_actions(const History& h) const;

  // Throws InvalidHistoryError unless every action of h is legal at its prefix.
  void validate(const History& h) const;
};

using GamePtr = std::shared_ptr<const Game>;

}  // namespace efg
