#pragma once

// Seeded random streams with a platform-stable consumption order.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard distributions are implementation-defined, so every
// transform from raw 64-bit words to the values the generators need lives
// here and consumes exactly the number of words documented on each helper.

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace homnet {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

// One word. Uniform on [0, 1) with 53 bits of resolution.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// One word per attempt; rejection keeps the result unbiased.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

// One word. p <= 0 never fires, p >= 1 always fires.
inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

// Fisher-Yates from the back; size-1 calls to uniform_index.
template <typename T>
void shuffle(Rng& rng, std::span<T> items) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_index(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace homnet
