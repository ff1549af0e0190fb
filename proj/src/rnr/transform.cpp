#include <cmath>
#include <string>

#include "efgsolve/core/errors.hpp"
#include "efgsolve/rnr/rnr.hpp"

namespace efg {

namespace {

constexpr ActionId kRestrictedCopy = 0;

class RnrGame final : public Game {
 public:
  RnrGame(GamePtr base, const RestrictionSpec& spec, Player restricted)
      : base_(std::move(base)), sigma_fix_(spec.sigma_fix), p_(spec.p), restricted_(restricted) {}

  std::string name() const override { return "rnr(" + base_->name() + ")"; }

  std::size_t num_chance_outcomes() const override {
    return std::max<std::size_t>(2, base_->num_chance_outcomes());
  }

  bool is_terminal(const History& h) const override {
    return !h.empty() && base_->is_terminal(inner(h));
  }

  Player current_player(const History& h) const override {
    if (h.empty()) return Player::kChance;
    const Player p = base_->current_player(inner(h));
    return forced(h, p) ? Player::kChance : p;
  }

  std::size_t num_actions(const History& h) const override {
    return h.empty() ? 2 : base_->num_actions(inner(h));
  }

  std::vector<double> chance_probs(const History& h) const override {
    if (h.empty()) return {p_, 1.0 - p_};
    const History base_h = inner(h);
    const Player p = base_->current_player(base_h);
    if (!forced(h, p)) return base_->chance_probs(base_h);
    const auto key = base_->infoset_key(base_h, p);
    const auto* probs = sigma_fix_.find(key);
    if (!probs) {
      throw IncompleteModelError("fixed strategy has no entry for player " + to_string(p) +
                                 " key " + key.hex());
    }
    if (probs->size() != base_->num_actions(base_h)) {
      throw GameMismatchError("fixed strategy entry " + key.hex() + " has the wrong length");
    }
    // Stored vectors sum to one within 1e-9; the tree wants tighter sums.
    std::vector<double> out = *probs;
    double total = 0.0;
    for (double x : out) total += x;
    for (double& x : out) x /= total;
    return out;
  }

  double utility(const History& z, Player p) const override { return base_->utility(inner(z), p); }

  InfoSetKey infoset_key(const History& h, Player p) const override {
    return base_->infoset_key(inner(h), p);
  }

  double payoff_scale() const override { return base_->payoff_scale(); }

  std::string action_label(const History& h, ActionId a) const override {
    if (h.empty()) return a == kRestrictedCopy ? "restricted" : "unrestricted";
    return base_->action_label(inner(h), a);
  }

 private:
  static History inner(const History& h) {
    return History(std::vector<ActionId>(h.actions().begin() + 1, h.actions().end()));
  }

  bool forced(const History& h, Player p) const {
    return h[0] == kRestrictedCopy && p == restricted_;
  }

  GamePtr base_;
  BehaviorStrategy sigma_fix_;
  double p_;
  Player restricted_;
};

}  // namespace

void RestrictionSpec::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("p must lie in [0, 1], got " + std::to_string(p));
  }
}

TabularPolicy fixed_policy(const GameTree& tree, const BehaviorStrategy& sigma_fix,
                           Player restricted) {
  check_strategy_matches(tree, sigma_fix, restricted);
  for (const auto& info : tree.infosets()) {
    if (info.key.owner == restricted && !sigma_fix.contains(info.key)) {
      throw IncompleteModelError("fixed strategy has no entry for player " +
                                 to_string(restricted) + " key " + info.key.hex());
    }
  }
  return TabularPolicy::from_strategy(tree, sigma_fix, restricted);
}

GamePtr transform_rnr_game(GamePtr game, const RestrictionSpec& spec, Player restricted) {
  if (!game) throw ParameterError("null game");
  spec.validate();
  if (spec.mode != Restriction::Mode::kRootCoin) {
    throw ParameterError("the game transformation needs root-coin mode");
  }
  return std::make_shared<RnrGame>(std::move(game), spec, restricted);
}

}  // namespace efg
