#include "knotcalc/bounds.hpp"

#include "knotcalc/errors.hpp"

namespace knotcalc {

BoundConstants bound_constants(unsigned long n) {
  BoundConstants out;
  mpz_class p3, p27;
  mpz_ui_pow_ui(p3.get_mpz_t(), 3, n);
  mpz_ui_pow_ui(p27.get_mpz_t(), 27, n);
  out.t = 2 * p3;
  mpz_class nz(static_cast<unsigned long>(n));
  out.a_over_pi = p27 * (9 * nz * nz + 4 * nz);
  return out;
}

Interval v3_interval(mpfr_prec_t prec) {
  return Interval(Real::of_decimal("1.01494", prec, MPFR_RNDD),
                  Real::of_decimal("1.01495", prec, MPFR_RNDU));
}

Interval cgm_domain_endpoint(mpfr_prec_t prec) {
  Interval sqrt3 = Interval::point_long(3, prec).sqrt();
  Interval sqrt2 = Interval::point_long(2, prec).sqrt();
  Interval two_pi = Interval::point_long(2, prec) * Interval::pi(prec);
  return sqrt3 / two_pi * (sqrt2 - Interval::point_long(1, prec));
}

Interval cgm_sinh_sq(const Interval& l, mpfr_prec_t prec) {
  Interval four_pi = Interval::point_long(4, prec) * Interval::pi(prec);
  Interval sqrt3 = Interval::point_long(3, prec).sqrt();
  Interval c = four_pi * l / sqrt3;
  Interval one = Interval::point_long(1, prec);
  Interval half = one / Interval::point_long(2, prec);
  return (one - c).sqrt() / c - half;
}

Real cgm_tube_radius(const Interval& l, mpfr_prec_t prec) {
  if (l.lo().sign() <= 0) throw DomainError("geodesic length must be positive");
  Interval endpoint = cgm_domain_endpoint(prec);
  if (!(l.hi() < endpoint.lo()))
    throw DomainError("geodesic length not certified below the domain endpoint (sqrt(3)/2pi)(sqrt(2)-1) ~ " +
                      endpoint.lo().str(8));
  return cgm_sinh_sq(l, prec).sqrt().asinh().midpoint();
}

Real cgm_tube_radius_decimal(const std::string& l, unsigned digits) {
  mpfr_prec_t prec = Real::bits_for_digits(digits);
  return cgm_tube_radius(Interval::of_decimal(l, prec), prec);
}

Interval martin_sinh_sq(const mpz_class& q, mpfr_prec_t prec) {
  if (q < 2) throw DomainError("cone order must be at least 2");
  if (q <= 6) return Interval::point_long(0, prec);
  Interval angle = Interval::pi(prec) / Interval::point_mpz(q, prec);
  Interval s = angle.sin_increasing();
  Interval one = Interval::point_long(1, prec);
  return one / (Interval::point_long(4, prec) * s * s) - one;
}

Real martin_cone_radius(const mpz_class& q, unsigned digits) {
  mpfr_prec_t prec = Real::bits_for_digits(digits);
  if (q < 2) throw DomainError("cone order must be at least 2");
  if (q <= 6) return Real::of_long(0, prec);
  Interval angle = Interval::pi(prec) / Interval::point_mpz(q, prec);
  Interval arg = Interval::point_long(1, prec) /
                 (Interval::point_long(2, prec) * angle.sin_increasing());
  return arg.acosh().midpoint();
}

Cert geodesic_predicate(const Interval& l, unsigned long plen, mpfr_prec_t prec) {
  Interval a = Interval::point_mpz(bound_constants(plen).a_over_pi, prec);
  // pi*sinh^2 > A(plen) with the common pi divided out.
  return certified_gt(cgm_sinh_sq(l, prec), a);
}

Cert cone_predicate(const mpz_class& q, unsigned long plen, mpfr_prec_t prec) {
  if (q <= 6) return Cert::False;  // cone radius is 0 by definition there
  Interval a = Interval::point_mpz(bound_constants(plen).a_over_pi, prec);
  return certified_gt(martin_sinh_sq(q, prec), a);
}

Real critical_geodesic_length(unsigned long plen, unsigned digits) {
  mpfr_prec_t prec = Real::bits_for_digits(digits);
  Interval endpoint = cgm_domain_endpoint(prec);
  if (plen == 0) return endpoint.midpoint();

  // Bisect on [lo, hi] with the predicate true at lo, false at hi. The
  // predicate is strictly monotone (sinh^2 decreases in l).
  Real lo(prec), hi(prec);
  mpfr_set(hi.raw(), endpoint.lo().raw(), MPFR_RNDD);
  mpfr_mul_2si(lo.raw(), hi.raw(), -80, MPFR_RNDD);
  for (long guard = 0; geodesic_predicate(Interval(lo, lo), plen, prec) != Cert::True;) {
    mpfr_mul_2si(lo.raw(), lo.raw(), -64, MPFR_RNDD);
    if (++guard > 4000000)
      throw PrecisionError("no certified true point found for the geodesic predicate");
  }

  // Geometric-mean bisection: relative convergence regardless of how many
  // orders of magnitude separate l* from the endpoint.
  const long iterations = static_cast<long>(prec) + 96;
  Real mid(prec);
  for (long i = 0; i < iterations; ++i) {
    mpfr_mul(mid.raw(), lo.raw(), hi.raw(), MPFR_RNDN);
    mpfr_sqrt(mid.raw(), mid.raw(), MPFR_RNDN);
    if (mid <= lo || mid >= hi) break;
    Cert c = geodesic_predicate(Interval(mid, mid), plen, prec);
    if (c == Cert::True)
      mpfr_set(lo.raw(), mid.raw(), MPFR_RNDN);
    else  // Unknown only in the terminal window around the root
      mpfr_set(hi.raw(), mid.raw(), MPFR_RNDN);
  }

  // Bracket certificate: true at l*/2, false at min(2 l*, endpoint).
  Real half(prec), twice(prec);
  mpfr_mul_2si(half.raw(), lo.raw(), -1, MPFR_RNDN);
  mpfr_mul_2si(twice.raw(), lo.raw(), 1, MPFR_RNDN);
  if (twice >= endpoint.lo()) mpfr_set(twice.raw(), endpoint.lo().raw(), MPFR_RNDD);
  if (geodesic_predicate(Interval(half, half), plen, prec) != Cert::True)
    throw CertificateError("critical geodesic length: lower bracket not certified true");
  if (geodesic_predicate(Interval(twice, twice), plen, prec) != Cert::False)
    throw CertificateError("critical geodesic length: upper bracket not certified false");
  return lo;
}

mpz_class critical_cone_order(unsigned long plen, unsigned digits) {
  mpfr_prec_t prec = Real::bits_for_digits(digits);
  auto pred = [&](const mpz_class& q) {
    Cert c = cone_predicate(q, plen, prec);
    if (c == Cert::Unknown)
      throw PrecisionError("cone predicate undecidable at q=" + q.get_str() +
                           "; raise working precision");
    return c == Cert::True;
  };

  mpz_class lo = 6, hi = 7;  // predicate false at 6 by definition
  while (!pred(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) / 2;
    if (pred(mid))
      hi = mid;
    else
      lo = mid;
  }
  // Bracket certificate.
  if (pred(hi - 1) || !pred(hi))
    throw CertificateError("critical cone order: bracket certificate failed");
  return hi;
}

namespace {

Interval tube_r_max_interval(unsigned long plen, mpfr_prec_t prec) {
  mpz_class a = bound_constants(plen).a_over_pi;
  if (a == 0) return Interval::point_long(0, prec);
  return Interval::point_mpz(a, prec).sqrt().asinh();
}

}  // namespace

GlobalBounds global_bounds(unsigned long plen, const std::optional<std::string>& vol,
                           const std::optional<std::string>& eps, unsigned digits) {
  mpfr_prec_t prec = Real::bits_for_digits(digits);
  Interval pi = Interval::pi(prec);
  Interval plen_i = Interval::point_long(static_cast<long>(plen), prec);
  Interval vol_bound = pi * plen_i;

  GlobalBounds out{vol_bound.midpoint(), mpz_class(static_cast<unsigned long>(plen)),
                   std::nullopt, tube_r_max_interval(plen, prec).midpoint(),
                   std::nullopt, std::nullopt};

  if (vol) {
    Interval v = Interval::of_decimal(*vol, prec);
    if (v.lo().sign() <= 0) throw DomainError("volume must be positive");
    Interval ratio = vol_bound / v;
    Real fl(prec), fh(prec);
    mpfr_floor(fl.raw(), ratio.lo().raw());
    mpfr_floor(fh.raw(), ratio.hi().raw());
    if (!(fl == fh))
      throw PrecisionError("degree bound straddles an integer; raise working precision");
    mpz_class d;
    mpfr_get_z(d.get_mpz_t(), fl.raw(), MPFR_RNDN);
    out.degree_bound = d;
  }

  if (eps) {
    Interval e = Interval::of_decimal(*eps, prec);
    if (e.lo().sign() <= 0) throw DomainError("eps must be positive");
    Interval gap = e.sinh() - e;  // sinh(eps) - eps
    if (gap.lo().sign() <= 0)
      throw PrecisionError("sinh(eps) - eps cancels at working precision; raise precision");
    Interval omega = pi * gap;  // ball-volume factor
    Interval two = Interval::point_long(2, prec);
    Interval diam_thick = two * pi * e * plen_i / omega;
    Interval tube = tube_r_max_interval(plen, prec);
    Interval diam_total = diam_thick + two * (e + two * tube);
    out.diam_thick = diam_thick.midpoint();
    out.diam_total = diam_total.midpoint();
  }
  return out;
}

Cert volume_budget_check(const mpq_class& vol, unsigned long plen, mpfr_prec_t prec) {
  Interval v = Interval::point_mpq(vol, prec);
  Interval budget = Interval::pi(prec) * Interval::point_long(static_cast<long>(plen), prec);
  if (v.hi() <= budget.lo()) return Cert::True;
  if (v.lo() > budget.hi()) return Cert::False;
  return Cert::Unknown;
}

}  // namespace knotcalc
