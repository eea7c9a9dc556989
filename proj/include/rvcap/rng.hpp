#pragma once

#include <cmath>
#include <cstdint>

namespace rvcap {

// Deterministic random source used by all simulators.
//
// The bit stream is SplitMix64 (Steele, Lea & Flood's mixing constants): the
// state advances by a fixed increment and the output is a bijective mix of the
// counter, so any 64-bit seed gives an independent, reproducible stream and
// distinct seeds can safely drive parallel Monte Carlo runs. Normals come from
// the trigonometric Box-Muller transform. No standard-library distributions
// are involved, so output is identical across platforms for a given seed.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0,1) with 53 random bits.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

private:
  std::uint64_t state_;
};

class NormalRng {
public:
  explicit NormalRng(std::uint64_t seed) : bits_(seed) {}

  // Standard normal draw; Box-Muller emits pairs, the spare is cached.
  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = bits_.next_uniform();
    double u2 = bits_.next_uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;  // log(0) guard
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 6.283185307179586476925286766559 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  double uniform() { return bits_.next_uniform(); }

private:
  SplitMix64 bits_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace rvcap
