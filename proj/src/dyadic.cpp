#include "s2inf/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "s2inf/error.hpp"

namespace s2inf {

Dyadic::Dyadic(mpz_class numerator, std::uint64_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  canonicalize();
}

Dyadic Dyadic::fraction(std::uint64_t count, unsigned level) {
  mpz_class p;
  mpz_set_ui(p.get_mpz_t(), 0);
  // count may exceed unsigned long on exotic platforms; go through the string
  // path only when needed.
  if constexpr (sizeof(unsigned long) >= sizeof(std::uint64_t)) {
    mpz_set_ui(p.get_mpz_t(), static_cast<unsigned long>(count));
  } else {
    p = mpz_class(std::to_string(count));
  }
  return {std::move(p), level};
}

void Dyadic::canonicalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0)
    return;
  auto const tz = mpz_scan1(num_.get_mpz_t(), 0);
  auto const shift = std::min<std::uint64_t>(tz, exp_);
  if (shift > 0) {
    mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
    exp_ -= shift;
  }
}

mpq_class Dyadic::to_mpq() const {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, exp_);
  mpq_class q(num_, den);
  q.canonicalize();
  return q;
}

double Dyadic::to_double() const {
  return std::ldexp(num_.get_d(), -static_cast<int>(exp_));
}

Dyadic operator+(Dyadic const &a, Dyadic const &b) {
  auto const e = std::max(a.exp_, b.exp_);
  mpz_class x, y;
  mpz_mul_2exp(x.get_mpz_t(), a.num_.get_mpz_t(), e - a.exp_);
  mpz_mul_2exp(y.get_mpz_t(), b.num_.get_mpz_t(), e - b.exp_);
  return {x + y, e};
}

Dyadic operator*(Dyadic const &a, Dyadic const &b) {
  return {a.num_ * b.num_, a.exp_ + b.exp_};
}

std::strong_ordering operator<=>(Dyadic const &a, Dyadic const &b) {
  auto const e = std::max(a.exp_, b.exp_);
  mpz_class x, y;
  mpz_mul_2exp(x.get_mpz_t(), a.num_.get_mpz_t(), e - a.exp_);
  mpz_mul_2exp(y.get_mpz_t(), b.num_.get_mpz_t(), e - b.exp_);
  auto const c = cmp(x, y);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Dyadic pow(Dyadic const &base, std::uint64_t power) {
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), base.numerator().get_mpz_t(), power);
  return {std::move(p), base.exponent() * power};
}

std::string Dyadic::to_string() const {
  if (exp_ == 0)
    return num_.get_str();
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, exp_);
  return num_.get_str() + "/" + den.get_str();
}

Dyadic Dyadic::parse(std::string_view text) {
  std::string const s(text);
  auto const slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Dyadic(mpz_class(s), 0);
    mpz_class const p(s.substr(0, slash));
    auto const den = s.substr(slash + 1);
    if (den.rfind("2^", 0) == 0)
      return Dyadic(p, std::stoull(den.substr(2)));
    mpz_class const d(den);
    if (d <= 0 || mpz_popcount(d.get_mpz_t()) != 1)
      throw ParseError("denominator is not a power of two: " + s);
    return Dyadic(p, mpz_scan1(d.get_mpz_t(), 0));
  } catch (std::invalid_argument const &) {
    throw ParseError("not a dyadic rational: " + s);
  }
}

std::ostream &operator<<(std::ostream &os, Dyadic const &d) {
  return os << d.to_string();
}

} // namespace s2inf
