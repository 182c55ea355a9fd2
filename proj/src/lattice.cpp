#include "knotcalc/lattice.hpp"

#include "knotcalc/errors.hpp"

namespace knotcalc {

bool is_primitive(const LatticeVector& v) {
  if (v.x == 0 && v.y == 0) throw DomainError("zero vector has no primitivity");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), v.x.get_mpz_t(), v.y.get_mpz_t());
  return g == 1;
}

std::pair<mpz_class, mpz_class> solve_diophantine(const mpz_class& a, const mpz_class& b) {
  mpz_class g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) throw DomainError("solve_diophantine requires coprime inputs");

  if (b == 0) return {x, 0};  // a = +-1, x = a, y pinned to 0
  // General solution x + b*t; minimize |x|, break ties toward x >= 0.
  mpz_class babs = abs(b);
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), babs.get_mpz_t());  // 0 <= r < |b|
  mpz_class lo = r - babs;                                     // -|b| <= lo < 0
  mpz_class best = (abs(r) < abs(lo) || (abs(r) == abs(lo) && r >= 0)) ? r : lo;
  mpz_class best_y = (1 - a * best) / b;
  if (a * best + b * best_y != 1) throw CertificateError("Bezout identity failed");
  return {best, best_y};
}

ExtendedLatticeElement::ExtendedLatticeElement(LatticeVector base, LatticeVector omega,
                                               mpz_class m, mpz_class k)
    : base_(std::move(base)), omega_(std::move(omega)), m_(std::move(m)), k_(std::move(k)) {
  if (m_ <= 0) throw DomainError("extended lattice denominator must be positive");
  if (!is_primitive(omega_)) throw DomainError("omega must be primitive");
  mpz_class carry, rem;
  mpz_fdiv_qr(carry.get_mpz_t(), rem.get_mpz_t(), k_.get_mpz_t(), m_.get_mpz_t());
  base_ = base_ + omega_.scaled(carry);
  k_ = rem;
}

ZetaChoice find_zeta(const LatticeVector& omega, const mpz_class& m, const mpz_class& t) {
  if (m <= 1) throw DomainError("find_zeta requires m > 1");
  if (!is_primitive(omega)) throw DomainError("find_zeta requires a primitive omega");
  const mpz_class &a = omega.x, &b = omega.y;
  auto [xs, ys] = solve_diophantine(a, b);
  mpz_class x = xs + b * t;
  mpz_class y = ys - a * t;
  LatticeVector zeta{m * y - a, -m * x - b};
  if (!is_primitive(zeta)) throw CertificateError("zeta is not primitive");
  LatticeVector s = omega + zeta;
  if (s.x % m != 0 || s.y % m != 0)
    throw CertificateError("omega + zeta is not in mZ + mZ");
  return ZetaChoice{zeta, omega, m, t};
}

mpz_class quotient_image(const LatticeVector& v, const LatticeVector& zeta) {
  if (!is_primitive(zeta)) throw DomainError("quotient requires a primitive zeta");
  return zeta.x * v.y - zeta.y * v.x;
}

mpz_class phi_zeta(const ExtendedLatticeElement& e, const ZetaChoice& z) {
  if (e.omega() != z.omega || e.m() != z.m)
    throw DomainError("extended element and zeta choice disagree on (omega, m)");
  LatticeVector shifted = z.omega + z.zeta;
  if (shifted.x % z.m != 0 || shifted.y % z.m != 0)
    throw CertificateError("omega + zeta not divisible by m");
  LatticeVector step{shifted.x / z.m, shifted.y / z.m};  // (omega+zeta)/m
  // Well-definedness: m*q(step) = q(omega) + q(zeta) = q(omega).
  if (z.m * quotient_image(step, z.zeta) != quotient_image(z.omega, z.zeta))
    throw CertificateError("phi_zeta well-definedness identity failed");
  return quotient_image(e.base(), z.zeta) + e.k() * quotient_image(step, z.zeta);
}

}  // namespace knotcalc
