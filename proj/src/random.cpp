#include "s2inf/random.hpp"

#include <numeric>

#include "s2inf/error.hpp"

namespace s2inf {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0)
    throw PreconditionError("Rng::below: bound must be positive");
  auto const limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

CubePermutation random_permutation(unsigned level, Rng &rng) {
  std::vector<std::uint32_t> images(std::size_t{1} << level);
  std::iota(images.begin(), images.end(), 0u);
  for (std::size_t i = images.size(); i > 1; --i)
    std::swap(images[i - 1], images[rng.below(i)]);
  return {level, std::move(images)};
}

} // namespace s2inf
