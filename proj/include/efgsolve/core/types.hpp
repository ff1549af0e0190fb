#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace efg {

enum class Player : std::uint8_t { kOne = 0, kTwo = 1, kChance = 2 };

inline constexpr std::array<Player, 2> kPlayers{Player::kOne, Player::kTwo};

constexpr int index_of(Player p) { return static_cast<int>(p); }

constexpr Player opponent(Player p) {
  return p == Player::kOne ? Player::kTwo : Player::kOne;
}

// +1 for player one, -1 for player two; converts player-one utilities.
constexpr double sign_of(Player p) { return p == Player::kOne ? 1.0 : -1.0; }

// Players are numbered 1 and 2 in files and on the command line.
int player_number(Player p);
Player player_from_number(int number);
std::string to_string(Player p);

// Index of an action (or chance outcome) local to one decision point.
using ActionId = std::uint32_t;

// Sequence of actions from the root; chance outcomes are actions too.
class History {
 public:
  History() = default;
  History(std::initializer_list<ActionId> actions) : actions_(actions) {}
  explicit History(std::vector<ActionId> actions) : actions_(std::move(actions)) {}

  std::size_t size() const { return actions_.size(); }
  bool empty() const { return actions_.empty(); }
  ActionId operator[](std::size_t i) const { return actions_[i]; }
  ActionId back() const { return actions_.back(); }
  const std::vector<ActionId>& actions() const { return actions_; }

  void push(ActionId a) { actions_.push_back(a); }
  void pop() { actions_.pop_back(); }
  History child(ActionId a) const;
  History prefix(std::size_t length) const;

  // True when this history is a (non-strict) prefix of `other`.
  bool is_prefix_of(const History& other) const;

  auto operator<=>(const History&) const = default;

  std::string to_string() const;

 private:
  std::vector<ActionId> actions_;
};

// What one player has observed along a history. Two histories share a key
// for a player exactly when that player cannot tell them apart.
struct InfoSetKey {
  Player owner = Player::kOne;
  std::string observation;  // raw bytes, see KeyBuilder

  auto operator<=>(const InfoSetKey&) const = default;

  std::string hex() const;
  static InfoSetKey from_hex(Player owner, std::string_view hex);
};

struct InfoSetKeyHash {
  std::size_t operator()(const InfoSetKey& key) const noexcept;
};

// Deterministic byte serialization of observations. Values are written as
// LEB128 varints so small games get one byte per observation.
class KeyBuilder {
 public:
  KeyBuilder& put(std::uint32_t value);
  InfoSetKey build(Player owner) const { return InfoSetKey{owner, bytes_}; }

 private:
  std::string bytes_;
};

std::vector<std::uint32_t> decode_observation(std::string_view bytes);

}  // namespace efg
