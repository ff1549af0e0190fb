#include <string>
#include <vector>

#include "efgsolve/core/errors.hpp"
#include "efgsolve/games/games.hpp"

namespace efg {

namespace {

constexpr int kMaxQuantity = 2;

struct BluffState {
  int die[2] = {0, 0};       // faces 1..N
  std::vector<int> bids;     // bid ids in order
  bool called = false;
};

class Bluff final : public Game {
 public:
  explicit Bluff(int faces) : faces_(faces), num_bids_(kMaxQuantity * faces) {}

  std::string name() const override { return "bluff:" + std::to_string(faces_); }

  std::size_t num_chance_outcomes() const override {
    return static_cast<std::size_t>(faces_) * faces_;
  }

  bool is_terminal(const History& h) const override { return replay(h).called; }

  Player current_player(const History& h) const override {
    const BluffState s = live(h);
    if (h.empty()) return Player::kChance;
    return s.bids.size() % 2 == 0 ? Player::kOne : Player::kTwo;
  }

  std::size_t num_actions(const History& h) const override {
    const BluffState s = live(h);
    if (h.empty()) return num_chance_outcomes();
    return actions_after(s.bids.empty() ? -1 : s.bids.back());
  }

  std::vector<double> chance_probs(const History& h) const override {
    live(h);
    if (!h.empty()) throw InvalidHistoryError("not a chance node: " + h.to_string());
    const auto n = num_chance_outcomes();
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
  }

  double utility(const History& z, Player p) const override {
    const BluffState s = replay(z);
    if (!s.called) throw InvalidHistoryError("utility of non-terminal " + z.to_string());
    const int bid = s.bids.back();
    const bool holds =
        bluff_bid_holds(bid / faces_ + 1, bid % faces_ + 1, s.die[0], s.die[1], faces_);
    // The caller moves right after the last bid, so the bidder is the other player.
    const Player caller = s.bids.size() % 2 == 0 ? Player::kOne : Player::kTwo;
    const double caller_payoff = holds ? -1.0 : 1.0;
    return caller == p ? caller_payoff : -caller_payoff;
  }

  InfoSetKey infoset_key(const History& h, Player p) const override {
    if (h.empty() || p == Player::kChance) throw InvalidHistoryError("no infoset before the roll");
    const BluffState s = replay(h);
    KeyBuilder key;
    key.put(static_cast<std::uint32_t>(s.die[index_of(p)]));
    for (int b : s.bids) key.put(static_cast<std::uint32_t>(b));
    return key.build(p);
  }

  double payoff_scale() const override { return 1.0; }

  std::string action_label(const History& h, ActionId a) const override {
    if (h.empty()) {
      return std::to_string(a / faces_ + 1) + "," + std::to_string(a % faces_ + 1);
    }
    const BluffState s = replay(h);
    const int current = s.bids.empty() ? -1 : s.bids.back();
    const int bid = current + 1 + static_cast<int>(a);
    if (bid >= num_bids_) return "call";
    return std::to_string(bid / faces_ + 1) + "x" + std::to_string(bid % faces_ + 1);
  }

 private:
  std::size_t actions_after(int current_bid) const {
    const int higher = num_bids_ - 1 - current_bid;
    return static_cast<std::size_t>(higher + (current_bid >= 0 ? 1 : 0));
  }

  BluffState replay(const History& h) const {
    BluffState s;
    if (h.empty()) return s;
    if (h[0] >= num_chance_outcomes()) throw InvalidHistoryError("illegal roll in " + h.to_string());
    s.die[0] = static_cast<int>(h[0]) / faces_ + 1;
    s.die[1] = static_cast<int>(h[0]) % faces_ + 1;
    for (std::size_t i = 1; i < h.size(); ++i) {
      if (s.called) throw InvalidHistoryError("action after call in " + h.to_string());
      const int current = s.bids.empty() ? -1 : s.bids.back();
      if (h[i] >= actions_after(current)) {
        throw InvalidHistoryError("illegal action in " + h.to_string());
      }
      const int bid = current + 1 + static_cast<int>(h[i]);
      if (bid >= num_bids_) {
        s.called = true;
      } else {
        s.bids.push_back(bid);
      }
    }
    return s;
  }

  BluffState live(const History& h) const {
    BluffState s = replay(h);
    if (s.called) throw InvalidHistoryError("terminal history " + h.to_string());
    return s;
  }

  int faces_;
  int num_bids_;
};

}  // namespace

int bluff_bid_id(int quantity, int face, int faces) {
  if (quantity < 1 || quantity > kMaxQuantity || face < 1 || face > faces) {
    throw ParameterError("bid out of range");
  }
  return (quantity - 1) * faces + (face - 1);
}

bool bluff_bid_holds(int quantity, int face, int die_one, int die_two, int faces) {
  auto counts = [&](int die) { return die == face || (face != faces && die == faces); };
  const int matching = (counts(die_one) ? 1 : 0) + (counts(die_two) ? 1 : 0);
  return matching >= quantity;
}

GamePtr make_bluff(int faces) {
  if (faces < 2) throw ParameterError("Bluff needs at least 2 die faces");
  return std::make_shared<Bluff>(faces);
}

}  // namespace efg
