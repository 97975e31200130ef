#pragma once

#include <cstdint>
#include <random>

namespace fashion {

// All randomness in the library flows through Rng so that a run is a pure
// function of its seed on every platform. std::mt19937_64 has a standardized
// output sequence; the helpers below avoid std::uniform_*_distribution, whose
// draw sequences differ between standard library implementations.

/// splitmix64 finalizer (Vigna). Stateless 64-bit mixing.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Child seed for a named stream. Tags keep the graph / types / actions /
/// dynamics streams of one run decorrelated, and sweep runs decorrelated
/// from each other: derive_seed(derive_seed(master, tag), index).
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
  return mix64(base ^ mix64(stream));
}

namespace stream {
inline constexpr std::uint64_t graph = 1;
inline constexpr std::uint64_t types = 2;
inline constexpr std::uint64_t actions = 3;
inline constexpr std::uint64_t dynamics = 4;
inline constexpr std::uint64_t sweep = 5;
}  // namespace stream

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound). Unbiased via rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    // reject the incomplete top interval of the 2^64 range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// True with probability prob. prob=0 never fires, prob=1 always.
  bool bernoulli(double prob) { return next_unit() < prob; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fashion
