#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "s2inf/real_interval.hpp"

namespace s2inf {

/// The exponent of chi_alpha(s) = mu(Fix(s))^alpha: a non-negative integer,
/// infinity, or a non-negative real given exactly as a rational (decimal
/// input such as "1.5" is read exactly as 3/2).
class AlphaParam {
public:
  enum class Kind { integer, infinity, real };

  static AlphaParam integer(std::uint64_t value);
  static AlphaParam infinity();
  static AlphaParam real(mpq_class value);

  /// "inf", "3", "1.5", "3/2", "2.0". A '.' or '/' selects the real channel
  /// even when the value is integral.
  static AlphaParam parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_integer() const { return kind_ == Kind::integer; }
  bool is_infinity() const { return kind_ == Kind::infinity; }
  bool is_real() const { return kind_ == Kind::real; }

  std::uint64_t integer_value() const;
  /// Exact value for integer and real kinds.
  mpq_class const &value() const;

  /// Integer and infinite alphas (and integral reals) give genuine
  /// characters; every other real is only a candidate.
  bool is_classified() const;
  /// Distance from the value to the nearest integer (0 for integer kind).
  mpq_class distance_to_integer() const;
  /// floor(alpha) for finite alphas.
  std::uint64_t floor() const;

  RealInterval enclosure(mpfr_prec_t precision) const;

  /// Round-trips through parse(): integers as "3", infinity as "inf", reals
  /// as the decimal they were written in when finite, else "p/q".
  std::string to_string() const;

private:
  AlphaParam(Kind kind, mpq_class value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  mpq_class value_;
};

} // namespace s2inf
