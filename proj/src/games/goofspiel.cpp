#include <algorithm>
#include <string>
#include <vector>

#include "efgsolve/core/errors.hpp"
#include "efgsolve/games/games.hpp"

namespace efg {

namespace {

enum RoundResult : std::uint32_t { kPlayerOneWins = 0, kPlayerTwoWins = 1, kTie = 2 };

// Replayed state of a Goofspiel history. Cards run 1..N.
struct GoofState {
  std::vector<std::vector<int>> hands;  // sorted remaining cards per player
  std::vector<int> bids[2];             // bid cards per player, in order
  int points[2] = {0, 0};
};

class Goofspiel final : public Game {
 public:
  explicit Goofspiel(int n) : n_(n) {}

  std::string name() const override { return "goof:" + std::to_string(n_); }

  std::size_t num_chance_outcomes() const override { return 0; }

  bool is_terminal(const History& h) const override {
    replay(h);
    return h.size() == 2 * static_cast<std::size_t>(n_);
  }

  Player current_player(const History& h) const override {
    check_live(h);
    return h.size() % 2 == 0 ? Player::kOne : Player::kTwo;
  }

  std::size_t num_actions(const History& h) const override {
    check_live(h);
    return static_cast<std::size_t>(n_) - h.size() / 2;
  }

  std::vector<double> chance_probs(const History& h) const override {
    throw InvalidHistoryError("Goofspiel has no chance nodes: " + h.to_string());
  }

  double utility(const History& z, Player p) const override {
    if (!is_terminal(z)) throw InvalidHistoryError("utility of non-terminal " + z.to_string());
    const GoofState s = replay(z);
    const double u1 = s.points[0] > s.points[1] ? 1.0 : (s.points[0] < s.points[1] ? -1.0 : 0.0);
    return sign_of(p) * u1;
  }

  InfoSetKey infoset_key(const History& h, Player p) const override {
    if (p == Player::kChance) throw InvalidHistoryError("chance has no infoset");
    const GoofState s = replay(h);
    const int me = index_of(p);
    const std::size_t rounds = h.size() / 2;
    KeyBuilder key;
    for (std::size_t r = 0; r < rounds; ++r) {
      key.put(static_cast<std::uint32_t>(s.bids[me][r]));
      key.put(result(s.bids[0][r], s.bids[1][r]));
    }
    // Player one's own bid of the round in progress, never player two's view of it.
    if (p == Player::kOne && h.size() % 2 == 1) {
      key.put(static_cast<std::uint32_t>(s.bids[0][rounds]));
    }
    return key.build(p);
  }

  double payoff_scale() const override { return 1.0; }

  std::string action_label(const History& h, ActionId a) const override {
    const GoofState s = replay(h);
    const auto& hand = s.hands[h.size() % 2];
    return a < hand.size() ? "bid" + std::to_string(hand[a]) : std::to_string(a);
  }

 private:
  static std::uint32_t result(int bid_one, int bid_two) {
    if (bid_one > bid_two) return kPlayerOneWins;
    if (bid_one < bid_two) return kPlayerTwoWins;
    return kTie;
  }

  GoofState replay(const History& h) const {
    if (h.size() > 2 * static_cast<std::size_t>(n_)) {
      throw InvalidHistoryError("history too long: " + h.to_string());
    }
    GoofState s;
    s.hands.assign(2, std::vector<int>(n_));
    for (auto& hand : s.hands) {
      for (int c = 0; c < n_; ++c) hand[c] = c + 1;
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
      auto& hand = s.hands[i % 2];
      if (h[i] >= hand.size()) throw InvalidHistoryError("illegal bid in " + h.to_string());
      s.bids[i % 2].push_back(hand[h[i]]);
      hand.erase(hand.begin() + h[i]);
      if (i % 2 == 1) {
        const std::size_t round = i / 2;
        const int prize = n_ - static_cast<int>(round);
        switch (result(s.bids[0][round], s.bids[1][round])) {
          case kPlayerOneWins: s.points[0] += prize; break;
          case kPlayerTwoWins: s.points[1] += prize; break;
          default: break;  // tied prizes are discarded
        }
      }
    }
    return s;
  }

  void check_live(const History& h) const {
    if (is_terminal(h)) throw InvalidHistoryError("terminal history " + h.to_string());
  }

  int n_;
};

}  // namespace

GamePtr make_goofspiel(int hand_size) {
  if (hand_size < 2) throw ParameterError("Goofspiel hand size must be >= 2");
  return std::make_shared<Goofspiel>(hand_size);
}

}  // namespace efg
