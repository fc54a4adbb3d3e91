#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace s2inf {

/// Exact rational p / 2^q, kept in canonical form (p odd, or q == 0).
class Dyadic {
public:
  Dyadic() = default;
  Dyadic(long value) : num_(value) {} // NOLINT: implicit from integers
  Dyadic(mpz_class numerator, std::uint64_t exponent);

  /// count / 2^level, the measure of `count` points of X_level.
  static Dyadic fraction(std::uint64_t count, unsigned level);

  mpz_class const &numerator() const { return num_; }
  std::uint64_t exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return exp_ == 0 && num_ == 1; }
  int sign() const { return sgn(num_); }

  mpq_class to_mpq() const;
  double to_double() const;

  Dyadic operator-() const { return {-num_, exp_}; }
  friend Dyadic operator+(Dyadic const &a, Dyadic const &b);
  friend Dyadic operator-(Dyadic const &a, Dyadic const &b) { return a + (-b); }
  friend Dyadic operator*(Dyadic const &a, Dyadic const &b);
  Dyadic &operator+=(Dyadic const &o) { return *this = *this + o; }
  Dyadic &operator*=(Dyadic const &o) { return *this = *this * o; }

  friend bool operator==(Dyadic const &a, Dyadic const &b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(Dyadic const &a, Dyadic const &b);

  /// "p" when the value is an integer, otherwise "p/D" with D = 2^q written
  /// out in decimal (e.g. "3/8").
  std::string to_string() const;
  /// Accepts "p", "p/D" with D a power of two, and "p/2^q".
  static Dyadic parse(std::string_view text);

private:
  void canonicalize();

  mpz_class num_{0};
  std::uint64_t exp_ = 0;
};

Dyadic pow(Dyadic const &base, std::uint64_t power);

std::ostream &operator<<(std::ostream &os, Dyadic const &d);

} // namespace s2inf
