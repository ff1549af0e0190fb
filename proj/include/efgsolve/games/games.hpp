#pragma once

#include <string>
#include <string_view>

#include "efgsolve/core/game.hpp"

namespace efg {

// One-card poker with an N-card deck: ante 1, one more chip to bet, actions
// (pass, bet). Player one acts, player two responds, and after (pass, bet)
// player one acts once more. Cards are 0..N-1, higher wins.
GamePtr make_ocp(int deck_size);

// OCP(3) under the name "kuhn"; cards 0, 1, 2 are J, Q, K.
GamePtr make_kuhn();

// Goofspiel with hands 1..N and point stack N, N-1, ..., 1. Bids are
// simultaneous: player two's key never contains player one's pending bid.
// Both players observe only win/lose/tie per round; tied point cards are
// discarded. Utility is +1/-1/0 by total points.
GamePtr make_goofspiel(int hand_size);

// Bluff(1,1,N): one private N-sided die each, bids (quantity 1..2, face 1..N)
// ordered lexicographically, face N is wild. The caller wins 1 if the
// outstanding bid is false and loses 1 otherwise.
GamePtr make_bluff(int faces);

// Princess and Monster on an R x C grid with horizon H half-moves. Player one
// is the monster and moves first; player two is the evader. Nobody observes
// the other. Capture ends the game; the evader earns the number of half-moves
// completed before capture, or H.
GamePtr make_pam(int rows, int cols, int horizon);

// Kuhn action indices.
inline constexpr ActionId kPass = 0;
inline constexpr ActionId kBet = 1;

// Bid and call action layout for Bluff: at a decision the legal actions are
// the bids strictly above the outstanding one in increasing order, followed
// by "call" when a bid is outstanding.
int bluff_bid_id(int quantity, int face, int faces);
bool bluff_bid_holds(int quantity, int face, int die_one, int die_two, int faces);

struct GameParams {
  enum class Kind { kKuhn, kOcp, kGoofspiel, kBluff, kPam };
  Kind kind = Kind::kKuhn;
  int size = 3;  // deck size, hand size or die faces
  int rows = 0;
  int cols = 0;
  int horizon = 0;

  bool operator==(const GameParams&) const = default;
};

// Parses `kuhn`, `ocp:N`, `goof:N`, `bluff:N` or `pam:RxCxH`; throws
// ParameterError on malformed strings or out-of-range parameters.
GameParams parse_game_params(std::string_view spec);
std::string to_string(const GameParams& params);
GamePtr make_game(const GameParams& params);
GamePtr make_game(std::string_view spec);

// True for Kuhn and OCP(3), the games the Kuhn metrics apply to.
bool is_kuhn_like(const GameParams& params);

}  // namespace efg
