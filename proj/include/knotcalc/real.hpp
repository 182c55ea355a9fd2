#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace knotcalc {

// Value wrapper around mpfr_t. Precision is fixed at construction and
// carried per value; there is no process-global rounding state.
class Real {
 public:
  explicit Real(mpfr_prec_t prec_bits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(Real o) noexcept;
  ~Real();

  static mpfr_prec_t bits_for_digits(unsigned decimal_digits);

  static Real of_long(long v, mpfr_prec_t prec);
  static Real of_mpz(const mpz_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd);
  static Real of_mpq(const mpq_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd);
  static Real of_decimal(const std::string& text, mpfr_prec_t prec, mpfr_rnd_t rnd);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Shortest-faithful style decimal with the requested significant digits.
  std::string str(int significant_digits) const;

  int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const Real& o) const { return cmp(o) < 0; }
  bool operator<=(const Real& o) const { return cmp(o) <= 0; }
  bool operator>(const Real& o) const { return cmp(o) > 0; }
  bool operator>=(const Real& o) const { return cmp(o) >= 0; }
  bool operator==(const Real& o) const { return cmp(o) == 0; }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

// Closed interval [lo, hi] with outward-rounded arithmetic; the mechanism
// behind every certified comparison in the bound calculus.
class Interval {
 public:
  // [NaN, NaN] at the given precision.
  explicit Interval(mpfr_prec_t prec);
  Interval(Real lo, Real hi);

  static Interval point_long(long v, mpfr_prec_t prec);
  static Interval point_mpz(const mpz_class& v, mpfr_prec_t prec);
  static Interval point_mpq(const mpq_class& v, mpfr_prec_t prec);
  static Interval of_decimal(const std::string& text, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  mpfr_prec_t prec() const { return lo_.prec(); }
  Real midpoint() const;
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  // Requires o to be sign-definite (no zero inside).
  Interval operator/(const Interval& o) const;
  Interval neg() const;

  // Requires lo >= 0.
  Interval sqrt() const;
  Interval sinh() const;
  Interval asinh() const;
  // Requires lo >= 1.
  Interval acosh() const;
  // Monotone branch only: requires the interval to lie within [0, 1.5].
  Interval sin_increasing() const;
  // Requires lo > 0.
  Interval log() const;
  Interval exp() const;

  // Certified order against another interval.
  bool certainly_gt(const Interval& o) const { return lo_ > o.hi_; }
  bool certainly_lt(const Interval& o) const { return hi_ < o.lo_; }
  bool certainly_le(const Interval& o) const { return hi_ <= o.lo_; }
  bool certainly_ge(const Interval& o) const { return lo_ >= o.hi_; }

 private:
  Real lo_, hi_;
};

// Three-valued outcome of a certified strict comparison.
enum class Cert { True, False, Unknown };

// expr > threshold, certified: True when expr.lo > threshold.hi, False when
// expr.hi <= threshold.lo, Unknown otherwise.
Cert certified_gt(const Interval& expr, const Interval& threshold);

}  // namespace knotcalc
