#pragma once

#include <cstdint>

namespace gotas {

/// SplitMix64: the fixed generator behind every randomized audit. Chosen for
/// a one-word state that makes seeds fully portable across machines.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// True with probability p, via a 53-bit draw so that p = 0 and p = 1 are
  /// exact.
  bool bernoulli(double p) {
    return static_cast<double>(next() >> 11) < p * 9007199254740992.0;
  }

  /// Uniform value in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace gotas
