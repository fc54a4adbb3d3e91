#include "doctest.h"
#include "s2inf/cube.hpp"
#include "s2inf/error.hpp"
#include "s2inf/perm.hpp"

using namespace s2inf;

namespace {

std::vector<bool> mask_from(unsigned level, std::uint64_t bits) {
  std::vector<bool> m(std::size_t{1} << level);
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = (bits >> i) & 1u;
  return m;
}

// Membership at a fixed high level, the oracle for set operations.
std::vector<bool> members_at(NiceSet const &a, unsigned level) {
  std::vector<bool> out(std::size_t{1} << level);
  for (std::size_t x = 0; x < out.size(); ++x)
    out[x] = a.contains_word(x);
  return out;
}

} // namespace

TEST_CASE("binary words use little-endian coordinates") {
  BinaryWord const w(3, 0b110);
  CHECK(w.bit(1) == 0);
  CHECK(w.bit(2) == 1);
  CHECK(w.bit(3) == 1);
  CHECK(BinaryWord::from_bits(w.bits()) == w);
}

TEST_CASE("nice set measure counts members") {
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    NiceSet const a(3, mask_from(3, bits));
    CHECK(measure(a) == Dyadic::fraction(static_cast<std::uint64_t>(__builtin_popcountll(bits)), 3));
    CHECK(measure(a.lift(5)) == measure(a));
    CHECK(a.canonical() == a);
    CHECK(a.canonical().level() <= 3);
    CHECK(measure(a.complement()) == Dyadic(1) - measure(a));
  }
}

TEST_CASE("intersection and union agree with pointwise membership") {
  for (std::uint64_t p = 0; p < 16; p += 3)
    for (std::uint64_t q = 0; q < 256; q += 7) {
      NiceSet const a(2, mask_from(2, p)), b(3, mask_from(3, q));
      auto const ma = members_at(a, 5), mb = members_at(b, 5);
      auto const mi = members_at(nice_intersect(a, b), 5);
      auto const mu = members_at(nice_union(a, b), 5);
      for (std::size_t x = 0; x < ma.size(); ++x) {
        CHECK(mi[x] == (ma[x] && mb[x]));
        CHECK(mu[x] == (ma[x] || mb[x]));
      }
    }
}

TEST_CASE("product sets place the first factor on the head") {
  auto const c = NiceSet::parse("k=1:01");
  auto const d = NiceSet::parse("k=2:1001");
  auto const cd = nice_product(c, d);
  CHECK(cd.level() == 3);
  for (std::uint64_t x = 0; x < 8; ++x)
    CHECK(cd.contains(x) == (c.contains(x & 1u) && d.contains(x >> 1)));
  CHECK(measure(cd) == measure(c) * measure(d));
}

TEST_CASE("nice set text formats") {
  auto const a = NiceSet::parse("k=2:1010");
  CHECK(a.contains(0));
  CHECK_FALSE(a.contains(1));
  CHECK(a == NiceSet::coordinate_equals(1, 0));
  CHECK(NiceSet::parse("k=3:0x1f") == NiceSet::from_indices(3, {0, 1, 2, 3, 4}));
  CHECK(NiceSet::parse(a.to_string()) == a);
  CHECK(NiceSet::empty() == NiceSet::empty(3));
  CHECK(NiceSet::full(0) == NiceSet::full(4));
  CHECK_THROWS_AS(NiceSet::parse("k=2:101"), ParseError);
  CHECK_THROWS_AS(NiceSet::parse("2:1010"), ParseError);
}

TEST_CASE("images of nice sets") {
  auto const a = NiceSet::from_indices(2, {0, 3});
  auto const g = CubePermutation::from_cycles(2, {{0, 1, 2}});
  CHECK(a.image(g) == NiceSet::from_indices(2, {1, 3}));
  CHECK(a.image(embed_head(g, 4)) == NiceSet::from_indices(2, {1, 3}));
}

TEST_CASE("level caps are enforced") {
  Limits small;
  small.max_dense_level = 4;
  CHECK_THROWS_AS(NiceSet::full(0).lift(5, small), CapExceeded);
  CHECK_THROWS_AS(odometer(5, small), CapExceeded);
}

TEST_CASE("the odometer is a single cycle adding one with carry") {
  for (unsigned n = 1; n <= 6; ++n) {
    auto const t = odometer(n);
    auto const ct = cycle_type(t);
    CHECK(ct.counts().size() == 1);
    CHECK(ct.counts().begin()->first == (std::uint64_t{1} << n));
    for (std::uint64_t x = 0; x < t.size(); ++x)
      CHECK(t(x) == (x + 1) % t.size());
  }
}
