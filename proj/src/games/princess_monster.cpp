#include <string>
#include <tuple>
#include <vector>

#include "efgsolve/core/errors.hpp"
#include "efgsolve/games/games.hpp"

namespace efg {

namespace {

struct PamState {
  int cell[2] = {0, 0};  // monster, evader
  int half_moves = 0;
  bool captured = false;
  std::vector<std::uint32_t> moves[2];
};

class PrincessMonster final : public Game {
 public:
  PrincessMonster(int rows, int cols, int horizon)
      : rows_(rows), cols_(cols), horizon_(horizon), cells_(rows * cols) {}

  std::string name() const override {
    return "pam:" + std::to_string(rows_) + "x" + std::to_string(cols_) + "x" +
           std::to_string(horizon_);
  }

  std::size_t num_chance_outcomes() const override {
    return static_cast<std::size_t>(cells_) * (cells_ - 1);
  }

  bool is_terminal(const History& h) const override {
    if (h.empty()) return false;
    const PamState s = replay(h);
    return s.captured || s.half_moves == horizon_;
  }

  Player current_player(const History& h) const override {
    const PamState s = live(h);
    if (h.empty()) return Player::kChance;
    return s.half_moves % 2 == 0 ? Player::kOne : Player::kTwo;
  }

  std::size_t num_actions(const History& h) const override {
    const PamState s = live(h);
    if (h.empty()) return num_chance_outcomes();
    return neighbors(s.cell[s.half_moves % 2]).size();
  }

  std::vector<double> chance_probs(const History& h) const override {
    live(h);
    if (!h.empty()) throw InvalidHistoryError("not a chance node: " + h.to_string());
    const auto n = num_chance_outcomes();
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
  }

  double utility(const History& z, Player p) const override {
    if (!is_terminal(z)) throw InvalidHistoryError("utility of non-terminal " + z.to_string());
    const PamState s = replay(z);
    const double evader = s.captured ? s.half_moves - 1 : horizon_;
    return p == Player::kTwo ? evader : -evader;
  }

  InfoSetKey infoset_key(const History& h, Player p) const override {
    if (h.empty() || p == Player::kChance) throw InvalidHistoryError("no infoset before the start");
    const PamState s = replay(h);
    const auto [monster, evader] = starts(h[0]);
    KeyBuilder key;
    key.put(static_cast<std::uint32_t>(p == Player::kOne ? monster : evader));
    for (auto m : s.moves[index_of(p)]) key.put(m);
    return key.build(p);
  }

  double payoff_scale() const override { return horizon_; }

  std::string action_label(const History& h, ActionId a) const override {
    if (h.empty()) {
      const auto [monster, evader] = starts(a);
      return "M" + std::to_string(monster) + ",E" + std::to_string(evader);
    }
    const PamState s = replay(h);
    const auto dirs = directions(s.cell[s.half_moves % 2]);
    static const char* kNames[] = {"up", "down", "left", "right"};
    return a < dirs.size() ? kNames[dirs[a]] : std::to_string(a);
  }

 private:
  std::pair<int, int> starts(ActionId d) const {
    const int monster = static_cast<int>(d) / (cells_ - 1);
    const int r = static_cast<int>(d) % (cells_ - 1);
    return {monster, r < monster ? r : r + 1};
  }

  // Legal directions from a cell, in the order up, down, left, right.
  std::vector<int> directions(int cell) const {
    const int r = cell / cols_;
    const int c = cell % cols_;
    std::vector<int> out;
    if (r > 0) out.push_back(0);
    if (r + 1 < rows_) out.push_back(1);
    if (c > 0) out.push_back(2);
    if (c + 1 < cols_) out.push_back(3);
    return out;
  }

  std::vector<int> neighbors(int cell) const {
    static constexpr int kDeltaRow[] = {-1, 1, 0, 0};
    static constexpr int kDeltaCol[] = {0, 0, -1, 1};
    std::vector<int> out;
    for (int d : directions(cell)) {
      out.push_back((cell / cols_ + kDeltaRow[d]) * cols_ + cell % cols_ + kDeltaCol[d]);
    }
    return out;
  }

  PamState replay(const History& h) const {
    PamState s;
    if (h.empty()) return s;
    if (h[0] >= num_chance_outcomes()) {
      throw InvalidHistoryError("illegal start in " + h.to_string());
    }
    std::tie(s.cell[0], s.cell[1]) = starts(h[0]);
    for (std::size_t i = 1; i < h.size(); ++i) {
      if (s.captured || s.half_moves == horizon_) {
        throw InvalidHistoryError("move after the end in " + h.to_string());
      }
      const int mover = s.half_moves % 2;
      const auto next = neighbors(s.cell[mover]);
      if (h[i] >= next.size()) throw InvalidHistoryError("illegal move in " + h.to_string());
      s.cell[mover] = next[h[i]];
      s.moves[mover].push_back(h[i]);
      ++s.half_moves;
      s.captured = s.cell[0] == s.cell[1];
    }
    return s;
  }

  PamState live(const History& h) const {
    if (is_terminal(h)) throw InvalidHistoryError("terminal history " + h.to_string());
    return replay(h);
  }

  int rows_;
  int cols_;
  int horizon_;
  int cells_;
};

}  // namespace

GamePtr make_pam(int rows, int cols, int horizon) {
  if (rows < 1 || cols < 1 || rows * cols < 2) throw ParameterError("PAM needs at least 2 cells");
  if (horizon < 1) throw ParameterError("PAM horizon must be >= 1");
  return std::make_shared<PrincessMonster>(rows, cols, horizon);
}

}  // namespace efg
