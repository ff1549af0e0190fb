#include "efgsolve/core/types.hpp"

#include <algorithm>
#include <functional>

#include "efgsolve/core/errors.hpp"

namespace efg {

int player_number(Player p) {
  if (p == Player::kChance) throw ParameterError("chance has no player number");
  return index_of(p) + 1;
}

Player player_from_number(int number) {
  if (number == 1) return Player::kOne;
  if (number == 2) return Player::kTwo;
  throw ParameterError("player must be 1 or 2, got " + std::to_string(number));
}

std::string to_string(Player p) {
  switch (p) {
    case Player::kOne:
      return "1";
    case Player::kTwo:
      return "2";
    case Player::kChance:
      return "chance";
  }
  return "?";
}

History History::child(ActionId a) const {
  History h = *this;
  h.push(a);
  return h;
}

History History::prefix(std::size_t length) const {
  length = std::min(length, actions_.size());
  return History(std::vector<ActionId>(actions_.begin(), actions_.begin() + length));
}

bool History::is_prefix_of(const History& other) const {
  if (size() > other.size()) return false;
  return std::equal(actions_.begin(), actions_.end(), other.actions_.begin());
}

std::string History::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(actions_[i]);
  }
  return out + ")";
}

std::string InfoSetKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(observation.size() * 2);
  for (unsigned char c : observation) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

InfoSetKey InfoSetKey::from_hex(Player owner, std::string_view hex) {
  if (hex.size() % 2 != 0) throw ValidationError("odd-length infoset key hex");
  InfoSetKey key{owner, {}};
  key.observation.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = hex_value(hex[i]);
    int lo = hex_value(hex[i + 1]);
    if (hi < 0 || lo < 0) throw ValidationError("bad hex digit in infoset key");
    key.observation.push_back(static_cast<char>(hi * 16 + lo));
  }
  return key;
}

std::size_t InfoSetKeyHash::operator()(const InfoSetKey& key) const noexcept {
  std::size_t h = std::hash<std::string>{}(key.observation);
  return h ^ (static_cast<std::size_t>(key.owner) * 0x9e3779b97f4a7c15ULL);
}

KeyBuilder& KeyBuilder::put(std::uint32_t value) {
  do {
    std::uint8_t byte = value & 0x7f;
    value >>= 7;
    if (value != 0) byte |= 0x80;
    bytes_.push_back(static_cast<char>(byte));
  } while (value != 0);
  return *this;
}

std::vector<std::uint32_t> decode_observation(std::string_view bytes) {
  std::vector<std::uint32_t> out;
  std::uint32_t value = 0;
  int shift = 0;
  for (unsigned char c : bytes) {
    value |= static_cast<std::uint32_t>(c & 0x7f) << shift;
    if (c & 0x80) {
      shift += 7;
    } else {
      out.push_back(value);
      value = 0;
      shift = 0;
    }
  }
  if (shift != 0) throw ValidationError("truncated observation varint");
  return out;
}

}  // namespace efg
