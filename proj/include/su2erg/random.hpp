#pragma once

#include <cstdint>
#include <random>

namespace su2erg {

// The single random stream used throughout the library.
//
// Engine: std::mt19937_64, whose output sequence is fixed by the C++
// standard, so a seed reproduces the same draws on every conforming
// implementation. Conversions to doubles and bounded integers are done here
// rather than through <random> distributions, whose algorithms are
// implementation-defined.
//
// Independent streams (chains, reference samples) are derived from a master
// seed and a stream counter with SplitMix64, never by sharing an Rng.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  // Stream `stream` of master seed `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform on {0, ..., n-1}; n > 0. Unbiased (rejection on the top range).
  std::uint64_t below(std::uint64_t n);

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used for seed derivation.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace su2erg
