#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "knotcalc/real.hpp"

namespace knotcalc {

// Exact closed-form bound constants: T(n) = 2*3^n and A(n)/pi = 27^n(9n^2+4n).
struct BoundConstants {
  mpz_class t;
  mpz_class a_over_pi;
};

BoundConstants bound_constants(unsigned long n);

// The volume of an ideal regular hyperbolic tetrahedron, as a certified
// enclosure of the stated 1.01494 approximation.
Interval v3_interval(mpfr_prec_t prec);

// Upper endpoint of the short-geodesic regime, (sqrt(3)/2pi)(sqrt(2)-1).
Interval cgm_domain_endpoint(mpfr_prec_t prec);

// sinh^2 of the tube radius around a geodesic of length l:
// sqrt(1 - c)/c - 1/2 with c = 4*pi*l/sqrt(3).
Interval cgm_sinh_sq(const Interval& l, mpfr_prec_t prec);

// Tube radius for geodesic length l; requires 0 < l < the domain endpoint,
// certified. r is strictly decreasing in l and diverges as l -> 0+.
Real cgm_tube_radius(const Interval& l, mpfr_prec_t prec);
Real cgm_tube_radius_decimal(const std::string& l, unsigned digits);

// Embedded-cone radius at a cone point of angle 2*pi/q:
// arccosh(1/(2 sin(pi/q))) for q >= 7, and 0 for 2 <= q <= 6 where the
// formula gives cosh(r) <= 1 and no cone is guaranteed.
Real martin_cone_radius(const mpz_class& q, unsigned digits);

// sinh^2 of the cone radius, 1/(4 sin^2(pi/q)) - 1; zero for q <= 6.
Interval martin_sinh_sq(const mpz_class& q, mpfr_prec_t prec);

// Whether pi*sinh^2(r(l)) > A(plen), certified at the given precision.
Cert geodesic_predicate(const Interval& l, unsigned long plen, mpfr_prec_t prec);

// Whether pi*sinh^2(cone radius(q)) > A(plen), certified.
Cert cone_predicate(const mpz_class& q, unsigned long plen, mpfr_prec_t prec);

// Supremum l* of lengths for which the geodesic predicate holds throughout
// (0, l*). Bisection, with the bracket l*/2 true / min(2 l*, endpoint) false
// verified for plen >= 1. plen = 0 returns the domain endpoint.
Real critical_geodesic_length(unsigned long plen, unsigned digits);

// Smallest q with the cone predicate true; bracket-certified.
mpz_class critical_cone_order(unsigned long plen, unsigned digits);

struct GlobalBounds {
  Real volume_bound;                    // pi * plen
  mpz_class volume_bound_pi_coeff;      // plen, the exact pi-coefficient
  std::optional<mpz_class> degree_bound;  // floor(pi*plen / vol)
  Real tube_r_max;                      // arcsinh sqrt(A(plen)/pi)
  std::optional<Real> diam_thick;       // 2*pi*eps*plen / (pi(sinh eps - eps))
  std::optional<Real> diam_total;       // diam_thick + 2(eps + 2 tube_r_max)
};

// vol and eps arrive as decimal strings so the enclosure is exact-outward;
// either may be absent, dropping the dependent outputs.
GlobalBounds global_bounds(unsigned long plen, const std::optional<std::string>& vol,
                           const std::optional<std::string>& eps, unsigned digits);

// vol <= pi * plen, certified outward: True only when the upper bound of vol
// is at or below the lower bound of pi*plen.
Cert volume_budget_check(const mpq_class& vol, unsigned long plen, mpfr_prec_t prec);

}  // namespace knotcalc
