#include "effnum/rng.hpp"

#include <limits>

#include "effnum/error.hpp"

namespace effnum {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  // splitmix64 adds the golden-ratio increment once more before mixing.
  std::uint64_t state = seed + stream * 0x9E3779B97F4A7C15ULL;
  return splitmix64(state);
}

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "Rng::below needs a positive bound");
  const std::uint64_t range = n;
  // Largest multiple of `range` representable; draws above it are rejected.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % range);
}

}  // namespace effnum
