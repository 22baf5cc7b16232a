#pragma once

// Pinned pseudo-random source for reproducible simulations.
//
// Generator: xoshiro256** 1.0 (Blackman & Vigna, public domain reference
// implementation), seeded by expanding a 64-bit seed through four successive
// SplitMix64 outputs. SplitMix64 expansion never yields an all-zero state.
//
// The simulation's draw discipline is documented in world.hpp; golden-sequence
// tests pin both this generator and that discipline, so any change to either
// is a breaking change.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bridgeworld {

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) noexcept {
    std::uint64_t x = seed;
    for (auto& word : state_) word = split_mix64(x);
  }

  // Next raw 64-bit output; advances the state exactly once.
  std::uint64_t next_u64() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Maps a raw output to [0, 1) using its top 53 bits.
  static constexpr double unit_from_bits(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
  }

  // Uniform real in [lo, hi); consumes one draw.
  double uniform_real(double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("uniform_real: requires lo < hi");
    return lo + (hi - lo) * unit_from_bits(next_u64());
  }

  // True with probability p; consumes one draw.
  bool bernoulli(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("bernoulli: p outside [0,1]");
    return uniform_real(0.0, 1.0) < p;
  }

  // Uniform index in [0, n) by Lemire multiply-shift reduction on one draw
  // (rejection-free, so exactly one draw per call).
  std::size_t choose(std::size_t n) {
    if (n == 0) throw std::invalid_argument("choose: requires n >= 1");
    const auto x = static_cast<unsigned __int128>(next_u64());
    return static_cast<std::size_t>((x * n) >> 64);
  }

  // Fisher-Yates permutation of [0, n), swapping positions n-1 down to 1 with
  // one choose() each; n == 1 consumes no draws.
  std::vector<std::size_t> shuffle(std::size_t n) {
    if (n == 0) throw std::invalid_argument("shuffle: requires n >= 1");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n - 1; i >= 1; --i) {
      const std::size_t j = choose(i + 1);
      std::swap(perm[i], perm[j]);
    }
    return perm;
  }

  friend bool operator==(const RngStream&, const RngStream&) = default;

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  static constexpr std::uint64_t split_mix64(std::uint64_t& x) noexcept {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_[4];
};

}  // namespace bridgeworld
