#include "s2inf/alpha.hpp"

#include <algorithm>
#include <cctype>

#include "s2inf/error.hpp"

namespace s2inf {

AlphaParam AlphaParam::integer(std::uint64_t value) {
  mpz_class z;
  mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(value));
  return {Kind::integer, mpq_class(z)};
}

AlphaParam AlphaParam::infinity() { return {Kind::infinity, mpq_class(0)}; }

AlphaParam AlphaParam::real(mpq_class value) {
  value.canonicalize();
  if (sgn(value) < 0)
    throw PreconditionError("alpha must be non-negative");
  return {Kind::real, std::move(value)};
}

AlphaParam AlphaParam::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "inf" || s == "infinity" || s == "oo")
    return infinity();
  if (s.empty())
    throw ParseError("empty alpha");
  auto const is_digits = [](std::string const &t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (is_digits(s))
    return {Kind::integer, mpq_class(mpz_class(s))};
  if (auto const slash = s.find('/'); slash != std::string::npos) {
    auto const p = s.substr(0, slash);
    auto const q = s.substr(slash + 1);
    if (!is_digits(p) || !is_digits(q) || mpz_class(q) == 0)
      throw ParseError("bad rational alpha: " + std::string(text));
    return real(mpq_class(mpz_class(p), mpz_class(q)));
  }
  if (auto const dot = s.find('.'); dot != std::string::npos) {
    auto const ip = s.substr(0, dot);
    auto const fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !is_digits(ip)) || (!fp.empty() && !is_digits(fp)))
      throw ParseError("bad decimal alpha: " + std::string(text));
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    mpz_class const num(ip.empty() ? mpz_class(0) : mpz_class(ip));
    mpz_class const frac(fp.empty() ? mpz_class(0) : mpz_class(fp));
    return real(mpq_class(num * den + frac, den));
  }
  throw ParseError("alpha must be a non-negative integer, a decimal, p/q, or inf: " +
                   std::string(text));
}

std::uint64_t AlphaParam::integer_value() const {
  if (kind_ != Kind::integer)
    throw PreconditionError("alpha is not an integer");
  return mpz_get_ui(value_.get_num_mpz_t());
}

mpq_class const &AlphaParam::value() const {
  if (kind_ == Kind::infinity)
    throw PreconditionError("alpha is infinite");
  return value_;
}

bool AlphaParam::is_classified() const {
  return kind_ != Kind::real || value_.get_den() == 1;
}

mpq_class AlphaParam::distance_to_integer() const {
  auto const &v = value();
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  mpq_class const frac = v - mpq_class(fl);
  mpq_class const other = mpq_class(1) - frac;
  return frac < other ? frac : other;
}

std::uint64_t AlphaParam::floor() const {
  auto const &v = value();
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return mpz_get_ui(fl.get_mpz_t());
}

RealInterval AlphaParam::enclosure(mpfr_prec_t precision) const {
  return RealInterval::exact(value(), precision);
}

std::string AlphaParam::to_string() const {
  switch (kind_) {
  case Kind::infinity:
    return "inf";
  case Kind::integer:
    return value_.get_num().get_str();
  case Kind::real:
    break;
  }
  // Finite decimal expansion exists iff the denominator is 2^a 5^b.
  mpz_class den = value_.get_den();
  unsigned twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1)
    return value_.get_str();
  auto const digits = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class const scaled = value_.get_num() * (scale / value_.get_den());
  auto str = scaled.get_str();
  if (digits == 0)
    return str + ".0";
  if (str.size() <= digits)
    str.insert(0, digits + 1 - str.size(), '0');
  str.insert(str.size() - digits, ".");
  return str;
}

} // namespace s2inf
