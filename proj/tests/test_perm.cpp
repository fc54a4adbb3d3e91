#include <numeric>
#include <set>

#include "doctest.h"
#include "s2inf/error.hpp"
#include "s2inf/perm.hpp"
#include "s2inf/random.hpp"

using namespace s2inf;

namespace {

int sign_by_inversions(CubePermutation const &p) {
  int s = 1;
  for (std::uint64_t i = 0; i < p.size(); ++i)
    for (std::uint64_t j = i + 1; j < p.size(); ++j)
      if (p(i) > p(j))
        s = -s;
  return s;
}

bool conjugate_by_search(CubePermutation const &p, CubePermutation const &q,
                         std::vector<CubePermutation> const &group) {
  for (auto const &g : group)
    if (conjugate(p, g) == q)
      return true;
  return false;
}

} // namespace

TEST_CASE("composition applies the right factor first") {
  auto const p = CubePermutation::transposition(2, 0, 1);
  auto const q = CubePermutation::transposition(2, 1, 2);
  auto const pq = compose(p, q);
  for (std::uint64_t x = 0; x < 4; ++x)
    CHECK(pq(x) == p(q(x)));
  CHECK(compose(pq, inverse(pq)).is_identity());
}

TEST_CASE("S(2^2) has 24 distinct elements with correct signs") {
  auto const all = all_permutations(2);
  CHECK(all.size() == 24);
  std::set<std::vector<std::uint32_t>> seen;
  int even = 0;
  for (auto const &p : all) {
    seen.insert(p.images());
    CHECK(p.sign() == sign_by_inversions(p));
    even += p.sign() == 1;
  }
  CHECK(seen.size() == 24);
  CHECK(even == 12);
}

TEST_CASE("cycle type is the conjugacy invariant") {
  auto const all = all_permutations(2);
  for (auto const &p : all)
    for (auto const &q : all)
      CHECK(are_conjugate(p, q) == conjugate_by_search(p, q, all));
}

TEST_CASE("cycle types") {
  auto const p = CubePermutation::parse("level=3: (0 1 2)(3 4)");
  auto const ct = cycle_type(p);
  CHECK(ct.degree() == 8);
  CHECK(ct.cycle_count() == 5);
  CHECK(ct.fixed_points() == 3);
  CHECK(ct.to_string() == "{3,2,1,1,1}");
  CHECK(ct.scaled(2).fixed_points() == 6);
  CHECK_FALSE(ct.only_even_and_fixed());
  CHECK(cycle_type(CubePermutation::parse("level=2: (0 1)(2 3)")).only_involutive());
}

TEST_CASE("parsing and printing") {
  auto const p = CubePermutation::parse("level=2: 1 0 2 3");
  CHECK(p == CubePermutation::transposition(2, 0, 1));
  CHECK(p.to_cycle_string() == "level=2: (0 1)");
  CHECK(CubePermutation::parse(p.to_table_string()) == p);
  CHECK(CubePermutation::parse(p.to_cycle_string()) == p);
  CHECK(CubePermutation::parse("identity(3)").is_identity());
  CHECK(CubePermutation::parse("identity(3)").to_cycle_string() == "level=3: ()");
  CHECK(CubePermutation::parse("e").level() == 0);
  CHECK(CubePermutation::parse("odometer(2)")(3) == 0);
  CHECK_THROWS_AS(CubePermutation::parse("level=2: 1 1 2 3"), ParseError);
  CHECK_THROWS_AS(CubePermutation::parse("level=2: 1 0 2"), ParseError);
  CHECK_THROWS_AS(CubePermutation::parse("level=2: (0 4)"), ParseError);
  CHECK_THROWS_AS(CubePermutation::parse("(0 1)"), ParseError);
}

TEST_CASE("head and tail embeddings") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto const s = random_permutation(2, rng);
    auto const t = random_permutation(2, rng);
    auto const head = embed_head(s, 4);
    auto const tail = embed_tail(t, 2);
    for (std::uint64_t x = 0; x < 16; ++x) {
      CHECK(head(x) == (s(x & 3u) | (x & 12u)));
      CHECK(tail(x) == ((x & 3u) | (t(x >> 2) << 2)));
    }
    // Head and tail pieces commute.
    CHECK(compose(head, tail) == compose(tail, head));
    CHECK(fixed_fraction(head) == fixed_fraction(s));
    CHECK(cycle_type(head) == cycle_type(s).scaled(4));
  }
  CHECK_THROWS_AS(embed_head(odometer(3), 2), LevelMismatch);
}

TEST_CASE("flip permutations") {
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    std::vector<bool> mask(4);
    for (unsigned i = 0; i < 4; ++i)
      mask[i] = (bits >> i) & 1u;
    NiceSet const a(2, mask);
    for (unsigned m = 3; m <= 5; ++m) {
      auto const f = flip_perm(a, m);
      CHECK(compose(f, f).is_identity());
      CHECK(fixed_nice_set(f) == a);
      CHECK(fixed_fraction(f) == measure(a));
      for (std::uint64_t x = 0; x < f.size(); ++x)
        CHECK(f(x) == (a.contains(x & 3u) ? x : x ^ (std::uint64_t{1} << (m - 1))));
    }
  }
  CHECK_THROWS_AS(flip_perm(NiceSet::full(2), 2), PreconditionError);
}

TEST_CASE("uniform distance") {
  auto const p = CubePermutation::transposition(3, 0, 5);
  CHECK(uniform_distance(p, CubePermutation::identity(3)) == Dyadic::fraction(2, 3));
  CHECK(uniform_distance(p, p).is_zero());
}

TEST_CASE("random permutations are reproducible and cover S(2^2)") {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i)
    CHECK(random_permutation(3, a) == random_permutation(3, b));
  Rng rng(1);
  std::set<std::vector<std::uint32_t>> seen;
  for (int i = 0; i < 2000; ++i)
    seen.insert(random_permutation(2, rng).images());
  CHECK(seen.size() == 24);
  for (int i = 0; i < 1000; ++i)
    CHECK(rng.below(7) < 7);
}
