#include <cmath>
#include <cstdlib>
#include <functional>

#include "doctest.h"
#include "s2inf/error.hpp"
#include "s2inf/obstruction.hpp"

using namespace s2inf;

namespace {

// Counts set partitions of {0..n-1} into m blocks by restricted growth
// strings.
long long partitions_by_enumeration(unsigned n, unsigned m) {
  long long count = 0;
  std::vector<unsigned> a(n, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned used) {
    if (i == n) {
      count += used == m;
      return;
    }
    for (unsigned b = 0; b <= used && b < m; ++b)
      rec(i + 1, std::max(used, b + 1));
  };
  if (n == 0)
    return m == 0;
  rec(0, 0);
  return count;
}

// Floating evaluation of the alternating sum.
double c_alpha_double(double alpha, unsigned m) {
  double total = 0;
  for (unsigned j = 0; j <= m; ++j) {
    double const weight = (j % 2 == 0) ? -(static_cast<double>(j) - 1) : static_cast<double>(j) - 1;
    total += binomial(m, j).get_d() * weight * std::pow(m - j, alpha);
  }
  return total;
}

} // namespace

TEST_CASE("signed derangement counts") {
  for (unsigned k = 1; k <= 9; ++k)
    CHECK(signed_derangement_bruteforce(k) == signed_derangement_closed_form(k));
  CHECK(signed_derangement_closed_form(1) == 0);
  CHECK(signed_derangement_closed_form(2) == -1);
  CHECK(signed_derangement_sum(4) == -3);
}

TEST_CASE("Stirling numbers match partition enumeration") {
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned m = 0; m <= 8; ++m)
      CHECK(stirling2(n, m) == static_cast<long>(partitions_by_enumeration(n, m)));
  CHECK(stirling2(30, 7) == stirling2_recurrence(30, 7));
}

TEST_CASE("integer obstruction values") {
  CHECK(c_alpha_integer(2, 2) == 4);
  CHECK(c_alpha_integer(3, 2) == 8);
  std::vector<long> const row{1, 8, 24, 24, 0, 0, 0, 0};
  for (unsigned m = 1; m <= 8; ++m)
    CHECK(c_alpha_integer(3, m) == row[m - 1]);
  auto const r = c_alpha(AlphaParam::parse("3"), 5);
  CHECK(r.exact);
  CHECK(r.sign == Sign::zero);
  CHECK(r.csv_row() == "3,5,0,0,zero,exact");
}

TEST_CASE("integer values agree with enumeration over S(m)") {
  // C_n(m) = m! m^n (1/m!) sum sign(s) (|Fix s|/m)^n.
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned m = 2; m <= 6; ++m) {
      auto const alt = alt_trace_bruteforce(AlphaParam::integer(n), m);
      REQUIRE(alt.exact);
      mpz_class m_pow;
      mpz_ui_pow_ui(m_pow.get_mpz_t(), m, n);
      CHECK(mpq_class(*alt.exact * factorial(m) * m_pow) == mpq_class(c_alpha_integer(n, m)));
      CHECK(alt.agrees);
      CHECK(alt.group_level == ((m & (m - 1)) == 0));
    }
}

TEST_CASE("real enclosures contain the floating value") {
  for (char const *alpha : {"0.3", "0.5", "1.5", "2.5", "3.7", "5.25"})
    for (unsigned m = 1; m <= 10; ++m) {
      auto const a = AlphaParam::parse(alpha);
      auto const r = c_alpha_real(a, m);
      REQUIRE(r.enclosure);
      double const expected = c_alpha_double(a.value().get_d(), m);
      CHECK(r.enclosure->midpoint() == doctest::Approx(expected).epsilon(1e-9).scale(1.0));
      if (r.sign != Sign::undetermined)
        CHECK((r.sign == Sign::negative) == (expected < 0));
    }
}

TEST_CASE("witness search for non-integer alpha") {
  struct Case {
    char const *alpha;
    unsigned m;
  };
  for (auto const &c : {Case{"0.3", 3}, Case{"0.5", 3}, Case{"1.5", 4}, Case{"2.5", 5},
                        Case{"3.7", 6}, Case{"5.25", 8}}) {
    auto const a = AlphaParam::parse(c.alpha);
    auto const w = noninteger_witness(a);
    CHECK(w.m == c.m);
    CHECK(w.report.sign == Sign::negative);
    CHECK(w.m <= a.floor() + 4);
    // Every earlier m was scanned and not negative.
    CHECK(w.scanned.size() == w.m - 1);
    for (std::size_t i = 0; i + 1 < w.scanned.size(); ++i)
      CHECK(w.scanned[i].sign != Sign::negative);
  }
  CHECK_THROWS_AS(noninteger_witness(AlphaParam::parse("2")), PreconditionError);
  CHECK_THROWS_AS(noninteger_witness(AlphaParam::parse("2.0")), PreconditionError);
}

TEST_CASE("sign stays undetermined when the precision cap is too low") {
  // Close to an integer the sum nearly cancels at large m.
  auto const a = AlphaParam::parse("3.0000000000000000001");
  auto const r = c_alpha_real(a, 12, 64, 64);
  CHECK(r.sign == Sign::undetermined);
  CHECK(r.precision == 64);
  auto const refined = c_alpha_real(a, 12, 64, 4096);
  // An 80-digit evaluation gives -2.1717e-19.
  CHECK(refined.sign == Sign::negative);
  CHECK(refined.precision > 64);
}

TEST_CASE("precision cap from the environment") {
  unsetenv(kPrecisionCapEnv);
  CHECK(precision_cap_from_env() == kDefaultPrecisionCap);
  setenv(kPrecisionCapEnv, "256", 1);
  CHECK(precision_cap_from_env() == 256);
  setenv(kPrecisionCapEnv, "junk", 1);
  CHECK(precision_cap_from_env() == kDefaultPrecisionCap);
  unsetenv(kPrecisionCapEnv);
}
