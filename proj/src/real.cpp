#include "knotcalc/real.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

#include "knotcalc/errors.hpp"

namespace knotcalc {

Real::Real(mpfr_prec_t prec_bits) { mpfr_init2(v_, prec_bits); }

Real::Real(const Real& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, o.prec());
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(Real o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

mpfr_prec_t Real::bits_for_digits(unsigned decimal_digits) {
  return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.3219281)) + 32;
}

Real Real::of_long(long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of_mpz(const mpz_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_z(r.v_, v.get_mpz_t(), rnd);
  return r;
}

Real Real::of_mpq(const mpq_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_q(r.v_, v.get_mpq_t(), rnd);
  return r;
}

Real Real::of_decimal(const std::string& text, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  if (mpfr_set_str(r.v_, text.c_str(), 10, rnd) != 0)
    throw ParseError("not a decimal number: '" + text + "'");
  return r;
}

std::string Real::str(int significant_digits) const {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", significant_digits, v_) < 0)
    throw Error("mpfr formatting failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!lo_.is_nan() && !hi_.is_nan() && lo_ > hi_) throw Error("inverted interval");
}

Interval Interval::point_long(long v, mpfr_prec_t prec) {
  return Interval(Real::of_long(v, prec), Real::of_long(v, prec));
}

Interval Interval::point_mpz(const mpz_class& v, mpfr_prec_t prec) {
  return Interval(Real::of_mpz(v, prec, MPFR_RNDD), Real::of_mpz(v, prec, MPFR_RNDU));
}

Interval Interval::point_mpq(const mpq_class& v, mpfr_prec_t prec) {
  return Interval(Real::of_mpq(v, prec, MPFR_RNDD), Real::of_mpq(v, prec, MPFR_RNDU));
}

Interval Interval::of_decimal(const std::string& text, mpfr_prec_t prec) {
  return Interval(Real::of_decimal(text, prec, MPFR_RNDD),
                  Real::of_decimal(text, prec, MPFR_RNDU));
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_.raw(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.raw(), MPFR_RNDU);
  return r;
}

Real Interval::midpoint() const {
  Real m(prec());
  mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
  mpfr_mul_2si(m.raw(), m.raw(), -1, MPFR_RNDN);
  return m;
}

Interval Interval::operator+(const Interval& o) const {
  Interval r(prec());
  mpfr_add(r.lo_.raw(), lo_.raw(), o.lo_.raw(), MPFR_RNDD);
  mpfr_add(r.hi_.raw(), hi_.raw(), o.hi_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(prec());
  mpfr_sub(r.lo_.raw(), lo_.raw(), o.hi_.raw(), MPFR_RNDD);
  mpfr_sub(r.hi_.raw(), hi_.raw(), o.lo_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  // All four endpoint products, rounded outward.
  std::array<mpfr_srcptr, 2> a{lo_.raw(), hi_.raw()};
  std::array<mpfr_srcptr, 2> b{o.lo_.raw(), o.hi_.raw()};
  Interval r(prec());
  Real t(prec());
  bool first = true;
  for (auto x : a)
    for (auto y : b) {
      mpfr_mul(t.raw(), x, y, MPFR_RNDD);
      if (first || t < r.lo_) mpfr_set(r.lo_.raw(), t.raw(), MPFR_RNDD);
      mpfr_mul(t.raw(), x, y, MPFR_RNDU);
      if (first || t > r.hi_) mpfr_set(r.hi_.raw(), t.raw(), MPFR_RNDU);
      first = false;
    }
  return r;
}

Interval Interval::operator/(const Interval& o) const {
  if (o.contains_zero())
    throw PrecisionError("interval division by a range containing zero; raise working precision");
  std::array<mpfr_srcptr, 2> a{lo_.raw(), hi_.raw()};
  std::array<mpfr_srcptr, 2> b{o.lo_.raw(), o.hi_.raw()};
  Interval r(prec());
  Real t(prec());
  bool first = true;
  for (auto x : a)
    for (auto y : b) {
      mpfr_div(t.raw(), x, y, MPFR_RNDD);
      if (first || t < r.lo_) mpfr_set(r.lo_.raw(), t.raw(), MPFR_RNDD);
      mpfr_div(t.raw(), x, y, MPFR_RNDU);
      if (first || t > r.hi_) mpfr_set(r.hi_.raw(), t.raw(), MPFR_RNDU);
      first = false;
    }
  return r;
}

Interval Interval::neg() const {
  Interval r(prec());
  mpfr_neg(r.lo_.raw(), hi_.raw(), MPFR_RNDD);
  mpfr_neg(r.hi_.raw(), lo_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (lo_.sign() < 0)
    throw PrecisionError("sqrt of an interval reaching below zero; raise working precision");
  Interval r(prec());
  mpfr_sqrt(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::sinh() const {
  Interval r(prec());
  mpfr_sinh(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
  mpfr_sinh(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::asinh() const {
  Interval r(prec());
  mpfr_asinh(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
  mpfr_asinh(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::acosh() const {
  if (mpfr_cmp_ui(lo_.raw(), 1) < 0)
    throw PrecisionError("acosh argument reaches below 1; raise working precision");
  Interval r(prec());
  mpfr_acosh(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
  mpfr_acosh(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::sin_increasing() const {
  if (lo_.sign() < 0 || mpfr_cmp_d(hi_.raw(), 1.5) > 0)
    throw DomainError("sin_increasing outside the monotone window [0, 1.5]");
  Interval r(prec());
  mpfr_sin(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
  mpfr_sin(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (lo_.sign() <= 0)
    throw PrecisionError("log of an interval reaching zero; raise working precision");
  Interval r(prec());
  mpfr_log(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
  mpfr_log(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r(prec());
  mpfr_exp(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
  mpfr_exp(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
  return r;
}

Cert certified_gt(const Interval& expr, const Interval& threshold) {
  if (expr.lo() > threshold.hi()) return Cert::True;
  if (expr.hi() <= threshold.lo()) return Cert::False;
  return Cert::Unknown;
}

}  // namespace knotcalc
