#pragma once

#include <cstdint>

namespace sheafex {

/**
 * Counter-based generator: the i-th draw is a SplitMix64 finalizer applied to
 * seed and i, so any draw can be recomputed from (seed, counter) alone.
 */
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t counter = 0) : seed_(seed), counter_(counter) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next() { return mix(seed_ ^ mix(counter_++ + 0x9e3779b97f4a7c15ULL)); }

  // Uniform in [0, bound); bound > 0. Rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  bool coin() { return (next() >> 63) != 0; }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Independent stream derived from this one.
  CounterRng fork(std::uint64_t stream) const { return CounterRng(mix(seed_ + 0x632be59bd9b4e019ULL * (stream + 1))); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace sheafex
