#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace qdecomp {

// The library's only random engine. std::mt19937_64 is fully specified by the
// standard, so its raw stream is identical on every conforming platform. The
// distributions below are written out by hand because the std:: ones are
// implementation-defined.
using Rng = std::mt19937_64;

inline constexpr const char* kRngName = "mt19937_64/v1";

// splitmix64 finaliser; used to derive independent sub-seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix_seed(seed ^ mix_seed(stream + 0x5851f42d4c957f2dULL));
}

// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, bound) by rejection.
inline std::size_t uniform_index(Rng& rng, std::size_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t b = bound;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % b);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % b);
}

inline bool coin_flip(Rng& rng) { return (rng() >> 63) != 0; }

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = uniform_index(rng, i);
    std::swap(v[i - 1], v[j]);
  }
}

template <class T>
const T& pick(std::span<const T> v, Rng& rng) {
  return v[uniform_index(rng, v.size())];
}

}  // namespace qdecomp
