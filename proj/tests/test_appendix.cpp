#include "doctest.h"
#include "s2inf/appendix.hpp"
#include "s2inf/error.hpp"
#include "s2inf/random.hpp"

using namespace s2inf;

namespace {

bool lengths_ok(std::vector<unsigned> const &lengths, unsigned k) {
  for (auto len : lengths)
    if (len != 1 && len != k)
      return false;
  return true;
}

bool quotient_even(std::vector<unsigned> const &lengths) {
  for (auto len : lengths)
    if (len != 1 && len % 2)
      return false;
  return true;
}

unsigned fixed_count(std::vector<unsigned> const &images) {
  unsigned n = 0;
  for (unsigned i = 0; i < images.size(); ++i)
    n += images[i] == i;
  return n;
}

// The expected member s_a from its defining case formula.
std::uint64_t case_formula(CubePermutation const &s, SiFamily const &family, std::size_t member,
                           std::uint64_t point) {
  auto const n = s.level();
  auto const m = family.tail_level;
  std::uint64_t const x = point & ((std::uint64_t{1} << n) - 1);
  std::uint64_t y = point >> n;
  if (s(x) == x)
    return point;
  auto const cycles = s.cycles();
  std::uint64_t ord = 0;
  for (auto const &c : cycles)
    for (auto v : c)
      if (v == x)
        ord = c.size();
  auto const &g = family.generators.at(static_cast<unsigned>(ord));
  std::uint64_t out = 0;
  for (unsigned i = 0; i < family.blocks; ++i) {
    auto const block = (y >> (i * m)) & ((std::uint64_t{1} << m) - 1);
    auto const &gen = family.labels[member][i] == '1' ? g.g1 : g.g2;
    out |= gen(block) << (i * m);
  }
  return s(x) | (out << n);
}

} // namespace

TEST_CASE("lemma pairs") {
  for (unsigned k : {5u, 7u, 9u, 11u})
    for (unsigned l : {2 * k - 4, 2 * k - 2}) {
      auto const p = lemma_g1(k, l);
      CHECK(p.degree == l);
      CHECK(lengths_ok(CyclePair::cycle_lengths(p.g1), k));
      CHECK(lengths_ok(CyclePair::cycle_lengths(p.g2), k));
      CHECK(quotient_even(CyclePair::cycle_lengths(p.quotient())));
    }
  CHECK(CyclePair::cycle_string(lemma_g1(5, 8).g2) == "(4,8,7,6,5)");
  CHECK_THROWS_AS(lemma_g1(4, 4), PreconditionError);
  CHECK_THROWS_AS(lemma_g1(5, 7), PreconditionError);
}

TEST_CASE("the short lemma block leaves two fixed points in the quotient") {
  for (unsigned k : {5u, 7u, 9u}) {
    CHECK(fixed_count(lemma_g1(k, 2 * k - 4).quotient()) == 2);
    CHECK(fixed_count(lemma_g1(k, 2 * k - 2).quotient()) == 0);
  }
  CHECK(CyclePair::cycle_lengths(lemma_g1(5, 6).quotient()) ==
        std::vector<unsigned>{2, 2, 1, 1});
}

TEST_CASE("power-of-two decompositions") {
  for (unsigned k = 5; k <= 11; k += 2)
    for (unsigned m = k; m <= 14; ++m) {
      auto const d = decompose_power_of_two(k, m);
      REQUIRE(d);
      CHECK(d->short_blocks * (2 * k - 4) + d->long_blocks * (2 * k - 2) ==
            (std::uint64_t{1} << m));
    }
  auto const d55 = decompose_power_of_two(5, 5);
  CHECK(d55->short_blocks == 4);
  CHECK(d55->long_blocks == 1);
}

TEST_CASE("generator pairs") {
  CHECK(generator_threshold(1) == 0);
  CHECK(generator_threshold(2) == 2);
  CHECK(generator_threshold(3) == 2);
  CHECK(generator_threshold(6) == 2);
  CHECK(generator_threshold(7) == 7);
  for (unsigned k = 1; k <= 9; ++k) {
    auto const g = mk_generators(k, generator_threshold(k));
    for (auto const *p : {&g.g1, &g.g2}) {
      auto const ct = cycle_type(*p);
      for (auto const &[len, mult] : ct.counts())
        CHECK(k % len == 0);
    }
    CHECK(cycle_type(compose(g.g1, inverse(g.g2))).only_even_and_fixed());
  }
  // k = 3: (1,2,3) and (4,3,2) in 1-based points.
  auto const g3 = mk_generators(3, 2);
  CHECK(g3.g1 == CubePermutation::parse("level=2: (0 1 2)"));
  CHECK(g3.g2 == CubePermutation::parse("level=2: (3 2 1)"));
  CHECK(cycle_type(compose(g3.g1, inverse(g3.g2))).to_string() == "{2,2}");
  CHECK_THROWS_AS(mk_generators(5, 4), PreconditionError);
}

TEST_CASE("families for small permutations satisfy every property") {
  Rng rng(99);
  std::vector<CubePermutation> const sources{
      CubePermutation::transposition(1, 0, 1), odometer(2), random_permutation(2, rng),
      CubePermutation::parse("level=2: (0 1 2)"), CubePermutation::identity(2)};
  for (auto const &s : sources)
    for (unsigned r = 1; r <= 2; ++r) {
      auto const family = construct_si(s, r);
      CHECK(family.members.size() == (std::size_t{1} << r));
      auto const v = verify_si_properties(s, family.members);
      INFO(s.to_cycle_string(), " r=", r);
      CHECK(v.passed());
      CHECK(v.pairs_checked == family.members.size() * (family.members.size() - 1) / 2);
      for (std::size_t i = 0; i < family.members.size(); ++i) {
        auto const dense = family.members[i].densify();
        CHECK(are_conjugate(dense, embed_head(s, dense.level())));
        for (std::uint64_t p = 0; p < dense.size(); ++p)
          CHECK(dense(p) == case_formula(s, family, i, p));
      }
    }
}

TEST_CASE("odd cycles of length five break the fixed-set property") {
  // A 5-cycle needs m = 5, and 32 = 6 * 4 + 8 * 1 uses four short blocks.
  auto const s = CubePermutation::parse("level=3: (0 1 2 3 4)");
  auto const family = construct_si(s, 1);
  REQUIRE(family.generators.at(5).blocks);
  CHECK(family.generators.at(5).blocks->short_blocks == 4);
  auto const v = verify_si_properties(s, family.members);
  CHECK_FALSE(v.passed());
  CHECK_FALSE(v.fixed_sets);
  CHECK(v.conjugacy);
  CHECK(v.even_quotients);
  REQUIRE_FALSE(v.failures.empty());
  CHECK(v.failures.front().property == "quotient_fixed_set");

  // Independent check on the dense quotient: 8 of the 32 fiber points over
  // each moved head point are fixed, while s fixes none of them.
  auto const q = compose(family.members[0].densify(), inverse(family.members[1].densify()));
  CHECK(fixed_fraction(q) == fixed_fraction(s) + Dyadic(mpz_class(5), 3) * Dyadic(mpz_class(1), 2));
}

TEST_CASE("construction report") {
  auto const family = construct_si(odometer(2), 1);
  auto const j = family.to_json();
  CHECK(j["r"] == 1);
  CHECK(j["m"] == 2);
  CHECK(j["members"].size() == 2);
  CHECK(j["labels"][1] == "2");
  auto const v = verify_si_properties(odometer(2), family.members).to_json();
  CHECK(v["passed"] == true);
}
