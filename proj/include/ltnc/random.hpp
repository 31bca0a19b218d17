#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace ltnc {

/// Deterministic 64-bit generator (splitmix64). Used instead of <random>
/// engines so that every stream is reproducible independently of the
/// standard-library implementation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double next_in(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  /// Uniform integer in [0, bound). Modulo bias is far below anything the
  /// desk-scale bounds used here can resolve.
  std::uint64_t next_below(std::uint64_t bound) {
    return next_u64() % bound;
  }

  /// Standard normal via Box-Muller; consumes draws in a fixed pattern.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = next_double();
    } while (u1 <= 0.0);
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    spare_ = r * std::sin(two_pi * u2);
    have_spare_ = true;
    return r * std::cos(two_pi * u2);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Derives a stream seed from a base seed plus up to two stream indices
/// (class pair, permutation index, trial number, ...). Derivation depends
/// only on the arguments, never on data content.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b = 0) {
  SplitMix64 h(seed);
  std::uint64_t x = h.next_u64() ^ (a + 0x9e3779b97f4a7c15ULL);
  SplitMix64 h2(x);
  x = h2.next_u64() ^ (b + 0xc2b2ae3d27d4eb4fULL);
  return SplitMix64(x).next_u64();
}

/// In-place Fisher-Yates shuffle driven by SplitMix64.
template <typename T>
void shuffle(std::vector<T>& values, SplitMix64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace ltnc
