#pragma once

#include <gmpxx.h>

#include <utility>

namespace knotcalc {

// Point of the rank-2 integer lattice Z^2; x is the meridian coefficient,
// y the longitude coefficient.
struct LatticeVector {
  mpz_class x, y;

  bool operator==(const LatticeVector&) const = default;
  LatticeVector operator+(const LatticeVector& o) const { return {x + o.x, y + o.y}; }
  LatticeVector operator-(const LatticeVector& o) const { return {x - o.x, y - o.y}; }
  LatticeVector scaled(const mpz_class& f) const { return {f * x, f * y}; }
};

// gcd(|x|,|y|) == 1. Rejects the zero vector.
bool is_primitive(const LatticeVector& v);

// Extended-Euclid particular solution of a*x + b*y = 1, normalized so |x| is
// minimal, with x >= 0 on ties. Requires gcd(|a|,|b|) = 1.
std::pair<mpz_class, mpz_class> solve_diophantine(const mpz_class& a, const mpz_class& b);

// Element base + k*omega/m of the extended lattice, with omega primitive,
// m > 0 and the representative normalized to 0 <= k < m (overflow carries
// into base).
class ExtendedLatticeElement {
 public:
  ExtendedLatticeElement(LatticeVector base, LatticeVector omega, mpz_class m, mpz_class k);

  const LatticeVector& base() const { return base_; }
  const LatticeVector& omega() const { return omega_; }
  const mpz_class& m() const { return m_; }
  const mpz_class& k() const { return k_; }

 private:
  LatticeVector base_, omega_;
  mpz_class m_, k_;
};

// A primitive zeta with omega + zeta in mZ + mZ, from the t-indexed family of
// Bezout solutions.
struct ZetaChoice {
  LatticeVector zeta;
  LatticeVector omega;
  mpz_class m;
  mpz_class t;
};

ZetaChoice find_zeta(const LatticeVector& omega, const mpz_class& m, const mpz_class& t);

// Image of v in P/Z*zeta identified with Z: the determinant with rows
// (zeta, v). Kernel is exactly Z*zeta; zeta itself maps to 0.
mpz_class quotient_image(const LatticeVector& v, const LatticeVector& zeta);

// The abelianized extended Dehn filling epimorphism evaluated on e, for the
// slope choice z. Requires e and z to agree on omega and m.
mpz_class phi_zeta(const ExtendedLatticeElement& e, const ZetaChoice& z);

}  // namespace knotcalc
