#pragma once

#include <cstdint>
#include <random>

namespace slaumzi {

// Operation tags keep the substreams of different stochastic operations disjoint
// even when they share a master seed.
enum class StreamTag : std::uint64_t {
  kPhaseJump = 0x11,
  kLangevin = 0x12,
  kWhiteNoise = 0x21,
  kC0 = 0x22,
  kApd = 0x23,
  kExcessNoise = 0x24,
  kSynthetic = 0x31,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Rng = std::mt19937_64;

// Generator for substream `index` of operation `tag` under master `seed`.
// Identical arguments always yield an identical stream.
inline Rng substream(std::uint64_t seed, StreamTag tag, std::uint64_t index = 0) {
  const std::uint64_t h =
      splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(tag) ^ splitmix64(index)));
  return Rng(h);
}

// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

// Uniform integer on [0, n) by multiply-shift.
inline std::uint64_t uniform_below(Rng& g, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(g()) * n) >> 64);
}

}  // namespace slaumzi
