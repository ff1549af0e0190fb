#pragma once

#include "efgsolve/core/strategy.hpp"

namespace efg {

// Behavior parameters of a Kuhn profile, all as probabilities of betting or
// calling: alpha (P1 bets J), beta (P1 calls with Q), gamma (P1 bets K),
// eta (P2 calls with Q), xi (P2 bets J after a pass).
struct KuhnParameters {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double eta = 0.0;
  double xi = 0.0;
};

// Missing infosets read as uniform. Throws GameMismatchError when the profile
// holds a key that is not a Kuhn infoset.
KuhnParameters kuhn_parameters(const StrategyProfile& profile);

// Squared distance to the equilibrium family: gamma is taken from the profile
// and (alpha, beta) are compared with (gamma/3, (1+gamma)/3), (eta, xi) with
// (1/3, 1/3); the four squared differences are summed.
double kuhn_squared_error(const StrategyProfile& profile);

// Total probability placed on the seven dominated Kuhn actions, in [0, 7].
double dominated_error(const StrategyProfile& profile);

}  // namespace efg
