#include "doctest.h"
#include "s2inf/error.hpp"
#include "s2inf/product_form.hpp"
#include "s2inf/random.hpp"

using namespace s2inf;

namespace {

ProductFormPermutation random_product(Rng &rng, unsigned head_level, unsigned block_level,
                                      unsigned blocks, unsigned tail_count) {
  std::vector<BlockPermutation> tails;
  for (unsigned t = 0; t < tail_count; ++t) {
    std::vector<CubePermutation> b;
    for (unsigned i = 0; i < blocks; ++i)
      b.push_back(random_permutation(block_level, rng));
    tails.emplace_back(block_level, std::move(b));
  }
  std::vector<std::uint32_t> tail_of(std::size_t{1} << head_level);
  for (auto &t : tail_of)
    t = static_cast<std::uint32_t>(rng.below(tail_count));
  return {random_permutation(head_level, rng), std::move(tails), std::move(tail_of)};
}

} // namespace

TEST_CASE("structural invariants agree with the dense table") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    auto const p = random_product(rng, 2, 1 + rng.below(2), 1 + rng.below(3), 1 + rng.below(3));
    auto const dense = p.densify();
    CHECK(p.cycle_type() == cycle_type(dense));
    CHECK(p.fixed_fraction() == fixed_fraction(dense));
    for (std::uint64_t x = 0; x < dense.size(); ++x)
      CHECK(p(x) == dense(x));
  }
}

TEST_CASE("composition and inverse match dense arithmetic") {
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    auto const p = random_product(rng, 2, 2, 2, 2);
    auto const q = random_product(rng, 2, 2, 2, 3);
    CHECK(compose(p, q).densify() == compose(p.densify(), q.densify()));
    CHECK(inverse(p).densify() == inverse(p.densify()));
  }
}

TEST_CASE("fixed profile") {
  auto const head = CubePermutation::parse("level=1: ()");
  BlockPermutation const t(1, {CubePermutation::parse("level=1: (0 1)"),
                               CubePermutation::identity(1)});
  ProductFormPermutation const p(head, {BlockPermutation::identity(1, 2), t}, {0, 1});
  auto const profile = p.fixed_profile();
  CHECK(profile[0].is_one());
  CHECK(profile[1].is_zero());
  CHECK(p.fixed_fraction() == Dyadic(mpz_class(1), 1));
}

TEST_CASE("shape errors") {
  BlockPermutation const a = BlockPermutation::identity(1, 2);
  BlockPermutation const b = BlockPermutation::identity(2, 2);
  CHECK_THROWS_AS(compose(a, b), LevelMismatch);
  Limits tight;
  tight.max_product_level = 3;
  CHECK_THROWS_AS(ProductFormPermutation(CubePermutation::identity(2), {b}, {0, 0, 0, 0}, tight),
                  CapExceeded);
}
