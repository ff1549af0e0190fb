#pragma once

#include <span>

#include "efgsolve/core/errors.hpp"

namespace efg {

// Writes the positive parts of `regrets` normalized to sum to one into `out`,
// or the uniform distribution when no regret is positive.
inline void regret_matching(std::span<const double> regrets, std::span<double> out) {
  if (regrets.empty()) throw ParameterError("regret matching needs at least one action");
  double positive = 0.0;
  for (double r : regrets) positive += r > 0.0 ? r : 0.0;
  const auto n = static_cast<double>(regrets.size());
  for (std::size_t a = 0; a < regrets.size(); ++a) {
    out[a] = positive > 0.0 ? (regrets[a] > 0.0 ? regrets[a] / positive : 0.0) : 1.0 / n;
  }
}

}  // namespace efg
