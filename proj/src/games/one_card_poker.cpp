#include <string>

#include "efgsolve/core/errors.hpp"
#include "efgsolve/games/games.hpp"

namespace efg {

namespace {

class OneCardPoker final : public Game {
 public:
  OneCardPoker(int deck_size, std::string name) : deck_(deck_size), name_(std::move(name)) {}

  std::string name() const override { return name_; }

  std::size_t num_chance_outcomes() const override {
    return static_cast<std::size_t>(deck_) * (deck_ - 1);
  }

  bool is_terminal(const History& h) const override {
    check(h);
    if (h.size() < 3) return false;
    if (h.size() == 3) return !(h[1] == kPass && h[2] == kBet);
    return true;
  }

  Player current_player(const History& h) const override {
    check_live(h);
    if (h.empty()) return Player::kChance;
    return h.size() == 2 ? Player::kTwo : Player::kOne;
  }

  std::size_t num_actions(const History& h) const override {
    check_live(h);
    return h.empty() ? num_chance_outcomes() : 2;
  }

  std::vector<double> chance_probs(const History& h) const override {
    check_live(h);
    if (!h.empty()) throw InvalidHistoryError("not a chance node: " + h.to_string());
    const auto n = num_chance_outcomes();
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
  }

  double utility(const History& z, Player p) const override {
    if (!is_terminal(z)) throw InvalidHistoryError("utility of non-terminal " + z.to_string());
    const auto [c1, c2] = deal(z[0]);
    const double showdown = c1 > c2 ? 1.0 : -1.0;
    double u1 = 0.0;
    if (z[1] == kPass && z[2] == kPass) {
      u1 = showdown;
    } else if (z[1] == kBet && z[2] == kPass) {
      u1 = 1.0;
    } else if (z[1] == kBet && z[2] == kBet) {
      u1 = 2.0 * showdown;
    } else if (z[3] == kPass) {
      u1 = -1.0;
    } else {
      u1 = 2.0 * showdown;
    }
    return sign_of(p) * u1;
  }

  InfoSetKey infoset_key(const History& h, Player p) const override {
    check(h);
    if (h.empty() || p == Player::kChance) {
      throw InvalidHistoryError("no infoset for player before the deal");
    }
    const auto [c1, c2] = deal(h[0]);
    KeyBuilder key;
    key.put(static_cast<std::uint32_t>(p == Player::kOne ? c1 : c2));
    for (std::size_t i = 1; i < h.size(); ++i) key.put(h[i]);
    return key.build(p);
  }

  double payoff_scale() const override { return 2.0; }

  std::string action_label(const History& h, ActionId a) const override {
    if (h.empty()) {
      const auto [c1, c2] = deal(a);
      return std::to_string(c1) + "|" + std::to_string(c2);
    }
    return a == kPass ? "pass" : "bet";
  }

 private:
  std::pair<int, int> deal(ActionId d) const {
    const int c1 = static_cast<int>(d) / (deck_ - 1);
    const int r = static_cast<int>(d) % (deck_ - 1);
    return {c1, r < c1 ? r : r + 1};
  }

  void check(const History& h) const {
    if (h.size() > 4) throw InvalidHistoryError("history too long: " + h.to_string());
    if (!h.empty() && h[0] >= num_chance_outcomes()) {
      throw InvalidHistoryError("illegal deal in " + h.to_string());
    }
    for (std::size_t i = 1; i < h.size(); ++i) {
      if (h[i] > kBet) throw InvalidHistoryError("illegal bet action in " + h.to_string());
      const bool ended = i >= 3 && !(h[1] == kPass && h[2] == kBet);
      if (ended) throw InvalidHistoryError("action after terminal in " + h.to_string());
    }
  }

  void check_live(const History& h) const {
    if (is_terminal(h)) throw InvalidHistoryError("terminal history " + h.to_string());
  }

  int deck_;
  std::string name_;
};

}  // namespace

GamePtr make_ocp(int deck_size) {
  if (deck_size < 2) throw ParameterError("OCP deck size must be >= 2");
  return std::make_shared<OneCardPoker>(deck_size, "ocp:" + std::to_string(deck_size));
}

GamePtr make_kuhn() { return std::make_shared<OneCardPoker>(3, "kuhn"); }

}  // namespace efg
