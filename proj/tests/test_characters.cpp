#include "doctest.h"
#include "s2inf/characters.hpp"
#include "s2inf/error.hpp"
#include "s2inf/obstruction.hpp"
#include "s2inf/random.hpp"

using namespace s2inf;

namespace {

AlphaParam A(char const *text) { return AlphaParam::parse(text); }

} // namespace

TEST_CASE("character values on examples") {
  auto const t = CubePermutation::parse("level=2: 1 0 2 3");
  CHECK(to_string(char_eval(A("1"), t)) == "1/2");
  CHECK(to_string(char_eval(A("2"), t)) == "1/4");
  CHECK(to_string(char_eval(A("inf"), CubePermutation::parse("identity(3)"))) == "1");
  CHECK(to_string(char_eval(A("inf"), t)) == "0");
  for (auto const &s : all_permutations(2))
    CHECK(to_string(char_eval(A("0"), s)) == "1");
  auto const real = char_eval(A("1.5"), t);
  REQUIRE(std::holds_alternative<RealInterval>(real));
  CHECK(std::get<RealInterval>(real).midpoint() == doctest::Approx(0.35355339059327373));
}

TEST_CASE("power of measure conventions") {
  CHECK(std::get<Dyadic>(power_of_measure(A("0"), Dyadic(0))).is_one());
  CHECK(std::get<Dyadic>(power_of_measure(A("inf"), Dyadic(1))).is_one());
  CHECK(std::get<Dyadic>(power_of_measure(A("inf"), Dyadic::fraction(7, 3))).is_zero());
  CHECK(std::get<RealInterval>(power_of_measure(A("1.5"), Dyadic(0))).sign() == Sign::zero);
}

TEST_CASE("characters are class functions and multiplicative") {
  auto const all = all_permutations(2);
  for (char const *alpha : {"0", "1", "2", "inf", "1.5"})
    for (std::size_t i = 0; i < all.size(); i += 3)
      for (auto const &g : all) {
        CHECK(centrality_check(A(alpha), all[i], g));
        CHECK(multiplicativity_check(A(alpha), all[i], g));
      }
  // Inputs at different levels are lifted.
  CHECK(centrality_check(A("2"), odometer(1), odometer(3)));
}

TEST_CASE("fixed-set projection identity") {
  auto const s = CubePermutation::parse("level=2: (2 3)");
  auto const a = NiceSet::from_indices(2, {0, 1});
  for (char const *alpha : {"1", "2", "3", "1.5"})
    CHECK(fixproj_identity_check(A(alpha), s, a, 3));
  CHECK_THROWS_AS(fixproj_identity_check(A("1"), s, NiceSet::from_indices(2, {2}), 3),
                  PreconditionError);
}

TEST_CASE("gram matrices") {
  auto const e = gram_matrix(A("1"), {CubePermutation::parse("e")});
  CHECK(e.verdict == GramVerdict::psd);
  CHECK(e.matrix == std::vector<std::vector<std::string>>{{"1"}});

  auto const all = all_permutations(2);
  for (char const *alpha : {"0", "1", "2", "3", "inf"}) {
    auto const r = gram_matrix(A(alpha), all);
    CHECK(r.verdict == GramVerdict::psd);
    CHECK(r.method == "exact");
  }

  // The sign vector pairs with the Gram matrix to |G| C_alpha(4) / 4^alpha.
  auto const r = gram_matrix(A("1.5"), all, WitnessMode::signs);
  CHECK(r.verdict == GramVerdict::not_psd);
  CHECK(r.method == "interval-witness");
  auto const c4 = c_alpha(A("1.5"), 4);
  CHECK(c4.sign == Sign::negative);
  CHECK(c4.enclosure->midpoint() * 24 / 8 == doctest::Approx(-2.9116882454314217));

  auto const floating = gram_matrix(A("1.5"), all);
  CHECK(floating.verdict != GramVerdict::psd);

  CHECK_THROWS_AS(gram_matrix(A("1"), {odometer(1), odometer(2)}), LevelMismatch);
  auto const j = r.to_json();
  CHECK(j["verdict"] == "not_psd");
  CHECK(j["elements"].size() == 24);
}

TEST_CASE("gram of random subsets for integer alpha") {
  Rng rng(5);
  std::vector<CubePermutation> elements;
  for (int i = 0; i < 12; ++i)
    elements.push_back(random_permutation(3, rng));
  for (char const *alpha : {"1", "2", "3"})
    CHECK(gram_matrix(A(alpha), elements).verdict == GramVerdict::psd);
}
