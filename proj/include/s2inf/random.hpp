#pragma once

#include <cstdint>
#include <random>

#include "s2inf/perm.hpp"

namespace s2inf {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2c0ffee0d00dULL;

/// Seeded generator whose output is identical on every platform: the engine
/// is the standardized mt19937_64 and bounded draws use plain rejection
/// sampling rather than the implementation-defined std distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);

private:
  std::mt19937_64 engine_;
};

/// Uniformly random element of S(2^level) (Fisher-Yates).
CubePermutation random_permutation(unsigned level, Rng &rng);

} // namespace s2inf
