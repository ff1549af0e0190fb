#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace efg {

// Source of uniform doubles in [0, 1). Every sampler in the library draws
// through this interface, so a scripted source can force any path.
class UniformSource {
 public:
  virtual ~UniformSource() = default;
  virtual double next() = 0;
};

// mt19937_64 with a 53-bit mantissa conversion; the sequence is fixed by the
// C++ standard, so seeds reproduce bit-for-bit across platforms.
class SeededStream final : public UniformSource {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(seed) {}
  double next() override { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Replays a fixed list of uniforms; throws once exhausted.
class ScriptedStream final : public UniformSource {
 public:
  explicit ScriptedStream(std::vector<double> values) : values_(std::move(values)) {}
  double next() override;
  std::size_t consumed() const { return pos_; }

 private:
  std::vector<double> values_;
  std::size_t pos_ = 0;
};

// Stream splitting: independent runs derived from one user seed use
// derive_seed(seed, stream_id), a splitmix64 mix of the pair.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_id);

// Inverse-CDF draw. Never returns an index with zero probability.
std::size_t sample_index(std::span<const double> probs, double u);

}  // namespace efg
