#pragma once

#include <cstdint>
#include <random>

namespace repc {

// Seed plumbing. Every randomized component (schedulers, attack noise,
// graph generators, sweep repeats) draws from its own engine seeded by a
// value derived from the run seed plus fixed tags, so results never depend
// on evaluation order and repeated queries for the same round are
// idempotent.

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = base;
  splitmix64_next(s);
  s ^= a;
  splitmix64_next(s);
  s ^= b;
  splitmix64_next(s);
  s ^= c;
  return splitmix64_next(s);
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

// Substream tags.
inline constexpr std::uint64_t kStreamScheduler = 0x5343484544ull;
inline constexpr std::uint64_t kStreamAttack = 0x41545441434bull;
inline constexpr std::uint64_t kStreamSweep = 0x5357454550ull;

}  // namespace repc
