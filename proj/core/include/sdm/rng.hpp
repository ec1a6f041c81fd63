#pragma once

#include <cstdint>
#include <random>

#include "sdm/types.hpp"

namespace sdm {

// Deterministic draws on top of mt19937_64. std::uniform_*_distribution is
// implementation-defined, so the mappings live here and are part of every
// seeded output's byte-stability contract.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [lo, hi] inclusive; modulo bias is irrelevant for these ranges.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Vec3 uniform_unit_vector() {
    while (true) {
      Vec3 v(uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0));
      double n = v.norm();
      if (n > 1e-6 && n <= 1.0) return v / n;
    }
  }

 private:
  std::mt19937_64 gen_;
};

// SplitMix64 step; stateless value-noise / seed-derivation helper.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline double hash_to_unit(std::uint64_t x) {
  return static_cast<double>(splitmix64(x) >> 11) * 0x1.0p-53;
}

}  // namespace sdm
