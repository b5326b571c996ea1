#pragma once

// Seeded sampling of random jets.
//
// Generator: xoshiro256** (Blackman & Vigna), state seeded by four successive
// outputs of splitmix64(seed). Uniform doubles use the top 53 bits:
// (next() >> 11) * 2^-53, mapped affinely to [lo, hi).
//
// A random jet draws 20 values in the order x⁰..x³, u⁰..u³, u̇⁰..u̇³, ü⁰..ü³,
// u⃛⁰..u⃛³, each uniform in [-2, 2). The whole draw is repeated until
// u·u >= 0.25 and u⁰ > 0; levels above the requested order are then zeroed
// (they are still drawn, so the stream does not depend on the order).

#include <array>
#include <cstdint>

#include "zitterlab/jet.hpp"
#include "zitterlab/minkowski.hpp"

namespace zitterlab {

class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  std::uint64_t next() {
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

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> state_{};
};

inline constexpr double kJetComponentBound = 2.0;
inline constexpr double kMinTimelikeNormSq = 0.25;

inline JetPoint sample_jet(Xoshiro256ss& rng, int order = 4) {
  JetPoint p;
  do {
    for (int k = 0; k <= 4; ++k) {
      for (std::size_t i = 0; i < 4; ++i) p.level(k)[i] = rng.uniform(-kJetComponentBound, kJetComponentBound);
    }
  } while (!(dot4(p.u, p.u) >= kMinTimelikeNormSq && p.u[0] > 0.0));
  p.order = order;
  for (int k = order + 1; k <= 4; ++k) p.level(k) = {};
  return p;
}

}  // namespace zitterlab
