#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace elimtree {

// std::mt19937_64 is fully specified by the standard, the distributions are
// not; these helpers keep seeded runs identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <typename Int>
  Int range(Int lo, Int hi) {  // inclusive
    return static_cast<Int>(lo + static_cast<Int>(below(static_cast<std::uint64_t>(hi - lo) + 1)));
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace elimtree
