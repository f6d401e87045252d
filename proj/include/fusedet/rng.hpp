#ifndef FUSEDET_RNG_HPP
#define FUSEDET_RNG_HPP

#include <cstdint>

namespace fusedet {

/// SplitMix64 (Steele/Lea/Vigna). Chosen because the algorithm is tiny and
/// fully pinned down, so simulation streams reproduce bit-for-bit on any
/// platform or language.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), using the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

 private:
  std::uint64_t state_;
};

}  // namespace fusedet

#endif  // FUSEDET_RNG_HPP
