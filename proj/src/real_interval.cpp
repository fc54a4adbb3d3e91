#include "s2inf/real_interval.hpp"

#include <algorithm>
#include <cstdio>

#include "s2inf/error.hpp"

namespace s2inf {

Mpfr::Mpfr(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

Mpfr::Mpfr(Mpfr const &other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr &&other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

Mpfr &Mpfr::operator=(Mpfr other) noexcept {
  swap(*this, other);
  return *this;
}

Mpfr::~Mpfr() { mpfr_clear(value_); }

std::string to_string(Sign s) {
  switch (s) {
  case Sign::negative:
    return "negative";
  case Sign::zero:
    return "zero";
  case Sign::positive:
    return "positive";
  case Sign::undetermined:
    break;
  }
  return "undetermined";
}

RealInterval::RealInterval(mpfr_prec_t precision) : lo_(precision), hi_(precision) {}

RealInterval::RealInterval(Mpfr lo, Mpfr hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (mpfr_greater_p(lo_.get(), hi_.get()))
    throw PreconditionError("RealInterval: lo > hi");
}

RealInterval RealInterval::exact(mpq_class const &value, mpfr_prec_t precision) {
  RealInterval r(precision);
  mpfr_set_q(r.lo_.get(), value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), value.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::exact(mpz_class const &value, mpfr_prec_t precision) {
  RealInterval r(precision);
  mpfr_set_z(r.lo_.get(), value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_.get(), value.get_mpz_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_long(long value, mpfr_prec_t precision) {
  return exact(mpz_class(value), precision);
}

Sign RealInterval::sign() const {
  if (mpfr_sgn(lo_.get()) > 0)
    return Sign::positive;
  if (mpfr_sgn(hi_.get()) < 0)
    return Sign::negative;
  if (mpfr_zero_p(lo_.get()) && mpfr_zero_p(hi_.get()))
    return Sign::zero;
  return Sign::undetermined;
}

bool RealInterval::contains(mpq_class const &q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool RealInterval::overlaps(RealInterval const &other) const {
  return mpfr_lessequal_p(lo_.get(), other.hi_.get()) &&
         mpfr_lessequal_p(other.lo_.get(), hi_.get());
}

bool RealInterval::is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()) != 0; }

double RealInterval::width() const {
  Mpfr w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return mpfr_get_d(w.get(), MPFR_RNDU);
}

double RealInterval::midpoint() const {
  Mpfr m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return mpfr_get_d(m.get(), MPFR_RNDN);
}

RealInterval operator+(RealInterval const &a, RealInterval const &b) {
  RealInterval r(std::max(a.precision(), b.precision()));
  mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

RealInterval operator-(RealInterval const &a, RealInterval const &b) {
  RealInterval r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return r;
}

RealInterval operator*(RealInterval const &a, RealInterval const &b) {
  auto const prec = std::max(a.precision(), b.precision());
  RealInterval r(prec);
  Mpfr t(prec);
  bool first = true;
  for (auto const *x : {&a.lo_, &a.hi_}) {
    for (auto const *y : {&b.lo_, &b.hi_}) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lo_.get()))
        mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.hi_.get()))
        mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

RealInterval RealInterval::scaled(mpz_class const &factor) const {
  RealInterval r(precision());
  if (sgn(factor) >= 0) {
    mpfr_mul_z(r.lo_.get(), lo_.get(), factor.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(r.hi_.get(), hi_.get(), factor.get_mpz_t(), MPFR_RNDU);
  } else {
    mpfr_mul_z(r.lo_.get(), hi_.get(), factor.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(r.hi_.get(), lo_.get(), factor.get_mpz_t(), MPFR_RNDU);
  }
  return r;
}

RealInterval RealInterval::divided(mpz_class const &divisor) const {
  if (sgn(divisor) <= 0)
    throw PreconditionError("RealInterval::divided: divisor must be positive");
  RealInterval r(precision());
  mpfr_div_z(r.lo_.get(), lo_.get(), divisor.get_mpz_t(), MPFR_RNDD);
  mpfr_div_z(r.hi_.get(), hi_.get(), divisor.get_mpz_t(), MPFR_RNDU);
  return r;
}

std::string RealInterval::lo_string(int digits) const {
  char *buf = nullptr;
  mpfr_asprintf(&buf, "%.*RDg", digits, lo_.get());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string RealInterval::hi_string(int digits) const {
  char *buf = nullptr;
  mpfr_asprintf(&buf, "%.*RUg", digits, hi_.get());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string RealInterval::to_string(int digits) const {
  return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

RealInterval pow_enclosure(mpq_class const &base, RealInterval const &exponent) {
  auto const prec = exponent.precision();
  if (sgn(base) < 0)
    throw PreconditionError("pow_enclosure: base must be non-negative");
  if (mpfr_sgn(exponent.lo().get()) < 0)
    throw PreconditionError("pow_enclosure: exponent must be non-negative");
  if (sgn(base) == 0) {
    if (mpfr_sgn(exponent.lo().get()) > 0)
      return RealInterval::from_long(0, prec);
    if (mpfr_zero_p(exponent.hi().get()))
      return RealInterval::from_long(1, prec);
    Mpfr lo(prec), hi(prec);
    mpfr_set_ui(hi.get(), 1, MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
  }
  if (base == 1)
    return RealInterval::from_long(1, prec);

  auto const b = RealInterval::exact(base, prec);
  Mpfr lo(prec), hi(prec), t(prec);
  bool first = true;
  // x^e is monotone in each argument on x > 0, e >= 0, so the extremes sit
  // at the corners of the input box.
  for (auto const *x : {&b.lo(), &b.hi()}) {
    for (auto const *e : {&exponent.lo(), &exponent.hi()}) {
      mpfr_pow(t.get(), x->get(), e->get(), MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), lo.get()))
        mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      mpfr_pow(t.get(), x->get(), e->get(), MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), hi.get()))
        mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return {std::move(lo), std::move(hi)};
}

} // namespace s2inf
