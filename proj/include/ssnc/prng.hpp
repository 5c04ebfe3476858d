#ifndef SSNC_PRNG_HPP
#define SSNC_PRNG_HPP

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace ssnc {

/**
 * SplitMix64 (Steele, Lea, Flood). Fixed here so that instance streams are
 * reproducible across platforms and languages; test vectors live in
 * tests/golden/splitmix64_vectors.txt.
 */
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    state_ += kGamma;
    return mix(state_);
  }

  /// i-th output (0-based) of the stream seeded with `seed`, without stepping.
  static constexpr result_type nth(std::uint64_t seed, std::uint64_t i) noexcept {
    return mix(seed + (i + 1) * kGamma);
  }

  /// Uniform in [0, 1) with 53 bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, n), n > 0, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t n) noexcept {
    const std::uint64_t limit = max() - max() % n;
    std::uint64_t x;
    do x = (*this)();
    while (x >= limit);
    return x % n;
  }

  /// Fair coin from the top bit.
  bool coin() noexcept { return ((*this)() >> 63) != 0; }

 private:
  static constexpr result_type mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

/// Fisher-Yates with SplitMix64::below, so the permutation does not depend on
/// the standard library's distribution implementation.
template <typename T>
void portable_shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace ssnc

#endif  // SSNC_PRNG_HPP
