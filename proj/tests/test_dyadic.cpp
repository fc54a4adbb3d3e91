#include "doctest.h"
#include "s2inf/dyadic.hpp"
#include "s2inf/error.hpp"

using namespace s2inf;

TEST_CASE("dyadic values are kept canonical") {
  Dyadic const d(mpz_class(12), 5); // 12/32 = 3/8
  CHECK(d.numerator() == 3);
  CHECK(d.exponent() == 3);
  CHECK(Dyadic(mpz_class(0), 7).exponent() == 0);
  CHECK(Dyadic::fraction(2, 2) == Dyadic(mpz_class(1), 1));
  CHECK(Dyadic::fraction(4, 2).is_one());
}

TEST_CASE("dyadic arithmetic matches rational arithmetic") {
  for (long a = -9; a <= 9; ++a)
    for (unsigned ea = 0; ea < 4; ++ea)
      for (long b = -5; b <= 5; ++b)
        for (unsigned eb = 0; eb < 4; ++eb) {
          Dyadic const x(mpz_class(a), ea), y(mpz_class(b), eb);
          mpq_class qx(a, 1u << ea), qy(b, 1u << eb);
          qx.canonicalize();
          qy.canonicalize();
          CHECK((x + y).to_mpq() == mpq_class(qx + qy));
          CHECK((x - y).to_mpq() == mpq_class(qx - qy));
          CHECK((x * y).to_mpq() == mpq_class(qx * qy));
          CHECK(((x < y) == (qx < qy)));
        }
}

TEST_CASE("dyadic powers") {
  CHECK(pow(Dyadic(mpz_class(3), 2), 3) == Dyadic(mpz_class(27), 6));
  CHECK(pow(Dyadic(mpz_class(0), 0), 0).is_one());
}

TEST_CASE("dyadic text round trip") {
  CHECK(Dyadic(mpz_class(1), 1).to_string() == "1/2");
  CHECK(Dyadic(mpz_class(-3), 3).to_string() == "-3/8");
  CHECK(Dyadic(5).to_string() == "5");
  CHECK(Dyadic::parse("3/8") == Dyadic(mpz_class(3), 3));
  CHECK(Dyadic::parse("6/2^4") == Dyadic(mpz_class(3), 3));
  CHECK(Dyadic::parse("-7") == Dyadic(-7));
  CHECK_THROWS_AS(Dyadic::parse("1/3"), ParseError);
  CHECK_THROWS_AS(Dyadic::parse("x"), ParseError);
}
