#include <numeric>

#include "doctest.h"
#include "s2inf/error.hpp"
#include "s2inf/gns.hpp"
#include "s2inf/random.hpp"

using namespace s2inf;

TEST_CASE("the cyclic vector has unit norm at every level") {
  for (unsigned n = 0; n <= 4; ++n) {
    auto const xi = xi_vector(n);
    CHECK(inner(xi, xi).is_one());
    auto const lifted = lift_function(xi);
    CHECK(lifted.level == n + 1);
    CHECK(inner(lifted, lifted).is_one());
    CHECK(lifted.values == xi_vector(n + 1).values);
  }
}

TEST_CASE("lifting preserves inner products") {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    WeightedFunction f{2, std::vector<long>(16)}, g{2, std::vector<long>(16)};
    for (auto &v : f.values)
      v = static_cast<long>(rng.below(9)) - 4;
    for (auto &v : g.values)
      v = static_cast<long>(rng.below(9)) - 4;
    CHECK(inner(lift_function(f), lift_function(g)) == inner(f, g));
  }
}

TEST_CASE("the representation is a homomorphism") {
  auto const all = all_permutations(2);
  for (auto const &p : all)
    for (std::size_t i = 0; i < all.size(); i += 5)
      CHECK(rep_matrix(compose(p, all[i])) == rep_matrix(p) * rep_matrix(all[i]));
}

TEST_CASE("matrix order is the lcm of cycle lengths") {
  for (auto const &p : all_permutations(2)) {
    std::uint64_t order = 1;
    auto const ct = cycle_type(p);
    for (auto const &[len, mult] : ct.counts())
      order = std::lcm(order, len);
    CHECK(rep_matrix(p).order() == order);
  }
  CHECK(rep_matrix(CubePermutation::identity(2)).is_identity());
}

TEST_CASE("matrix coefficients equal fixed fractions and are stable under lifting") {
  Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto const s = random_permutation(3, rng);
    CHECK(matrix_character(s) == fixed_fraction(s));
    CHECK(matrix_character(embed_head(s, 5)) == matrix_character(s));
  }
}

TEST_CASE("tensor characters") {
  auto const s = CubePermutation::parse("level=2: (0 1)");
  CHECK(tensor_character(s, 2, TensorMode::explicit_build) == Dyadic(mpz_class(1), 2));
  CHECK(tensor_character(s, 3, TensorMode::product) == Dyadic(mpz_class(1), 3));
  CHECK(tensor_character(s, 2) == Dyadic(mpz_class(1), 2));
  Limits tight;
  tight.max_tensor_dimension = 16;
  CHECK_THROWS_AS(tensor_character(s, 2, TensorMode::explicit_build, tight), CapExceeded);
  // Automatic mode falls back to the product when the build is too large.
  CHECK(tensor_character(s, 2, TensorMode::automatic, tight) == Dyadic(mpz_class(1), 2));
}

TEST_CASE("stabilization scans are constant") {
  auto const a = NiceSet::parse("k=2:1101");
  auto const g1 = CubePermutation::parse("level=2: (0 1 2)");
  auto const g2 = CubePermutation::parse("level=2: (1 3)");
  for (char const *alpha : {"1", "2", "1.5"}) {
    auto const values = stabilization_scan(AlphaParam::parse(alpha), g1, g2, a, {3, 4, 5, 6});
    CHECK(values.size() == 4);
    CHECK(is_constant(values));
  }
  CHECK_THROWS_AS(stabilization_scan(AlphaParam::parse("1"), g1, g2, a, {2}), PreconditionError);
}

TEST_CASE("projection identities") {
  auto const a = NiceSet::parse("k=2:1110");
  auto const b = NiceSet::parse("k=3:10101010");
  auto const c = NiceSet::parse("k=1:10");
  auto const d = NiceSet::parse("k=2:0110");
  for (char const *alpha : {"1", "2", "3", "inf", "0.5"}) {
    auto const report = projection_identity_checks(AlphaParam::parse(alpha), a, b, c, d);
    CHECK(report.checks.size() == 8);
    for (auto const &check : report.checks) {
      INFO(alpha, " ", check.name, ": ", check.lhs, " vs ", check.rhs);
      CHECK(check.passed);
    }
  }
}
