#include "efgsolve/core/random.hpp"

#include "efgsolve/core/errors.hpp"

namespace efg {

double ScriptedStream::next() {
  if (pos_ >= values_.size()) throw Error("scripted uniform stream exhausted");
  return values_[pos_++];
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_id) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream_id + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t sample_index(std::span<const double> probs, double u) {
  double cumulative = 0.0;
  std::size_t last_positive = probs.size();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    last_positive = i;
    cumulative += probs[i];
    if (u < cumulative) return i;
  }
  if (last_positive == probs.size()) throw Error("cannot sample from an all-zero distribution");
  return last_positive;
}

}  // namespace efg
