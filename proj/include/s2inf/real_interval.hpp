#pragma once

// Closed intervals [lo, hi] with MPFR endpoints and outward (directed)
// rounding. Every operation returns an interval guaranteed to contain the
// exact result of the same operation on any points of the inputs.

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace s2inf {

/// Owning wrapper around mpfr_t.
class Mpfr {
public:
  explicit Mpfr(mpfr_prec_t precision);
  Mpfr(Mpfr const &other);
  Mpfr(Mpfr &&other) noexcept;
  Mpfr &operator=(Mpfr other) noexcept;
  ~Mpfr();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  friend void swap(Mpfr &a, Mpfr &b) noexcept { mpfr_swap(a.value_, b.value_); }

private:
  mpfr_t value_;
};

enum class Sign { negative, zero, positive, undetermined };

std::string to_string(Sign s);

class RealInterval {
public:
  explicit RealInterval(mpfr_prec_t precision = 128);
  /// Takes ownership of the endpoints; requires lo <= hi.
  RealInterval(Mpfr lo, Mpfr hi);

  static RealInterval exact(mpq_class const &value, mpfr_prec_t precision);
  static RealInterval exact(mpz_class const &value, mpfr_prec_t precision);
  static RealInterval from_long(long value, mpfr_prec_t precision);

  mpfr_prec_t precision() const { return lo_.precision(); }
  Mpfr const &lo() const { return lo_; }
  Mpfr const &hi() const { return hi_; }

  /// The sign is certified only when the interval excludes zero or is the
  /// single point 0.
  Sign sign() const;
  bool contains(mpq_class const &q) const;
  bool overlaps(RealInterval const &other) const;
  bool is_point() const;
  /// hi - lo, rounded up, as a double.
  double width() const;
  double midpoint() const;

  friend RealInterval operator+(RealInterval const &a, RealInterval const &b);
  friend RealInterval operator-(RealInterval const &a, RealInterval const &b);
  friend RealInterval operator*(RealInterval const &a, RealInterval const &b);
  RealInterval &operator+=(RealInterval const &o) { return *this = *this + o; }
  RealInterval scaled(mpz_class const &factor) const;
  RealInterval divided(mpz_class const &divisor) const;

  /// "[lo, hi]" with `digits` significant digits, lo rounded down and hi
  /// rounded up so the printed interval still encloses the value.
  std::string to_string(int digits = 20) const;
  std::string lo_string(int digits = 20) const;
  std::string hi_string(int digits = 20) const;

private:
  Mpfr lo_;
  Mpfr hi_;
};

/// base^exponent for an exact base >= 0 and an exponent enclosed by a
/// non-negative interval. Uses 0^e = 0 for e > 0 and 0^0 = 1.
RealInterval pow_enclosure(mpq_class const &base, RealInterval const &exponent);

} // namespace s2inf
