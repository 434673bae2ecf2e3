#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace effnum {

/// One SplitMix64 step: advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Seed of independent stream `stream` under master seed `seed`:
///   state = seed + (stream + 1) * 0x9E3779B97F4A7C15, result = splitmix64(state).
/// Stream ids in use: 0 measurement sampling, 1..7 the axiom checks in
/// battery order, 0x100 + k the k-th standalone gen_counting_vector call,
/// 0x200 + r the r-th Anderson disorder realization.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Portable random source: std::mt19937_64 (bit-exact by the standard) with
/// hand-written conversions, since the standard distributions are not
/// reproducible across library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), unbiased by rejection. n must be positive.
  std::size_t below(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace effnum
