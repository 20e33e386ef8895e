#pragma once

#include <cmath>
#include <cstdint>

namespace laas {

// Deterministic generators with pinned algorithms so sequences are
// reproducible bit for bit across platforms and library versions:
//
//   * SplitMix64 (Steele/Lea/Vigna) expands a 64-bit seed into generator
//     state; increment 0x9E3779B97F4A7C15, mix constants 0xBF58476D1CE4E5B9
//     and 0x94D049BB133111EB with shifts 30/27/31.
//   * xoshiro256++ 1.0 (Blackman/Vigna) produces the uniform stream.
//   * Uniform doubles take the top 53 bits: ((word >> 11) + 1) * 2^-53,
//     which lies in (0, 1].
//   * Gaussian draws use the Box-Muller transform on consecutive uniform
//     pairs; both values of each pair are consumed in order.

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    SplitMix64 mixer(seed);
    for (auto& word : state_) word = mixer.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in (0, 1].
  double uniform() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

// Standard-normal draws via Box-Muller; the pair's second value is buffered.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = rng_.uniform();
    const double u2 = rng_.uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  Xoshiro256pp rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace laas
