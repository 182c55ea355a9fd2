// Acceptance suite: one line per criterion, exit 0 only if all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "knotcalc/bounds.hpp"
#include "knotcalc/cli.hpp"
#include "knotcalc/handles.hpp"
#include "knotcalc/intmatrix.hpp"
#include "knotcalc/json_io.hpp"
#include "knotcalc/jsj.hpp"
#include "knotcalc/lattice.hpp"
#include "knotcalc/presentation.hpp"
#include "oracles.hpp"

using namespace knotcalc;

namespace {

struct Harness {
  int failures = 0;

  void criterion(int number, const std::string& name, double budget_seconds,
                 const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s  %2d. %s (%.2fs%s%s)\n", ok ? "PASS" : "FAIL", number, name.c_str(), secs,
                detail.empty() ? "" : ": ", detail.c_str());
    if (!ok) ++failures;
  }
};

bool expect(bool cond, const std::string& what, std::string& detail) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

}  // namespace

// 1. T(n) and A(n)/pi exact against an independent power oracle, n in 0..64.
static bool criterion_formulas(std::string& detail) {
  mpz_class p3 = 1, p27 = 1;
  for (unsigned long n = 0; n <= 64; ++n) {
    BoundConstants b = bound_constants(n);
    mpz_class nz(n);
    if (!expect(b.t == 2 * p3, "T(" + std::to_string(n) + ") mismatch", detail)) return false;
    if (!expect(b.a_over_pi == p27 * (9 * nz * nz + 4 * nz),
                "A(" + std::to_string(n) + ")/pi mismatch", detail))
      return false;
    p3 *= 3;
    p27 *= 27;
  }
  return true;
}

// 2. 500 random presentations: triangular output, length preserved,
// invariant factors of the abelianization unchanged.
static bool criterion_triangularize(std::string& detail) {
  std::mt19937_64 rng(0xACCE97);
  for (int iter = 0; iter < 500; ++iter) {
    Presentation p = oracles::random_presentation(rng, 6, 6, 20);
    TriangularPresentation t = triangularize(p);
    for (const Word& r : t.presentation().relators())
      if (!expect(r.length() == 2 || r.length() == 3, "relator not triangular", detail))
        return false;
    if (!expect(presentation_length(t.presentation()) == presentation_length(p),
                "length changed", detail))
      return false;
    TorsionInfo before = torsion_orders(abelianization_matrix(p));
    TorsionInfo after = torsion_orders(abelianization_matrix(t.presentation()));
    if (!expect(before.orders == after.orders && before.free_rank == after.free_rank,
                "abelianization changed", detail))
      return false;
  }
  return true;
}

// 3. 1000 random kind-constrained contribution matrices: exact kernel,
// 3^p entry bound, p+1 support bound, rational span equality.
static bool criterion_small_gen(std::string& detail) {
  std::mt19937_64 rng(0x5117A11);
  std::uniform_int_distribution<std::size_t> rd(1, 6), cd(1, 12);
  std::uniform_int_distribution<int> pattern(0, 4), sign(0, 1);
  for (int iter = 0; iter < 1000; ++iter) {
    std::size_t rows = rd(rng), cols = cd(rng);
    IntMatrix a(rows, cols);
    std::uniform_int_distribution<std::size_t> row_pick(0, rows - 1);
    auto s = [&]() { return sign(rng) ? 1 : -1; };
    for (std::size_t j = 0; j < cols; ++j) switch (pattern(rng)) {
        case 0: break;
        case 1: a.at(row_pick(rng), j) = s(); break;
        case 2: a.at(row_pick(rng), j) = 2 * s(); break;
        case 3: a.at(row_pick(rng), j) = 3 * s(); break;
        default: {
          std::size_t r1 = row_pick(rng), r2 = row_pick(rng), r3 = row_pick(rng);
          a.at(r1, j) += s();
          if (r2 != r1) a.at(r2, j) += s();
          if (r3 != r1 && r3 != r2) a.at(r3, j) += s();
        }
      }
    if (!expect(column_condition_holds(a), "generator broke the column condition", detail))
      return false;

    FundamentalSolutionSet sol = bounded_kernel_basis(a);  // A*u = 0 asserted inside
    std::size_t p = sol.pivot_rows.size();
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 3, p);
    std::vector<std::vector<mpq_class>> mine;
    for (const auto& u : sol.solutions) {
      std::size_t nonzero = 0;
      for (const mpz_class& e : u) {
        if (!expect(abs(e) <= bound, "entry above 3^p", detail)) return false;
        if (e != 0) ++nonzero;
      }
      if (!expect(nonzero <= p + 1, "support above p+1", detail)) return false;
      mine.push_back(oracles::to_mpq(u));
    }
    if (!expect(oracles::same_rational_span(mine, rational_kernel_basis(a)),
                "span mismatch with rational elimination", detail))
      return false;
  }
  return true;
}

// 4. 1000 random structurally constrained presentation matrices with t <= 6
// wide rows: max torsion order <= 2*3^t.
static bool criterion_small_tor(std::string& detail) {
  std::mt19937_64 rng(0x70301);
  std::uniform_int_distribution<std::size_t> cd(2, 9), td(0, 6), narrow_count(0, 9);
  std::uniform_int_distribution<int> sign(0, 1), mag(1, 2), wide_kind(0, 2);
  HandleComplex empty({}, {});
  for (int iter = 0; iter < 1000; ++iter) {
    std::size_t cols = cd(rng), t = td(rng);
    std::uniform_int_distribution<std::size_t> col_pick(0, cols - 1);
    auto s = [&]() { return sign(rng) ? 1 : -1; };
    std::vector<std::vector<long>> rows;
    std::size_t narrows = narrow_count(rng);
    for (std::size_t i = 0; i < narrows; ++i) {
      std::vector<long> row(cols, 0);
      row[col_pick(rng)] = mag(rng) * s();
      rows.push_back(row);
    }
    for (std::size_t i = 0; i < t; ++i) {
      std::vector<long> row(cols, 0);
      int kind = cols >= 3 ? wide_kind(rng) : wide_kind(rng) % 2;
      std::size_t c1 = col_pick(rng), c2 = col_pick(rng);
      while (c2 == c1) c2 = col_pick(rng);
      if (kind == 0) {
        row[c1] = s();
        row[c2] = s();
      } else if (kind == 1) {
        row[c1] = s();
        row[c2] = 2 * s();
      } else {
        std::size_t c3 = col_pick(rng);
        while (c3 == c1 || c3 == c2) c3 = col_pick(rng);
        row[c1] = s();
        row[c2] = s();
        row[c3] = s();
      }
      rows.push_back(row);
    }
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];

    TorsionBoundResult res = torsion_bound_check(empty, m);
    if (!expect(res.wide_rows <= t, "wide row count off", detail)) return false;
    if (!expect(res.ok, "torsion order " + res.max_order.get_str() + " above 2*3^" +
                            std::to_string(res.wide_rows),
                detail))
      return false;
  }
  return true;
}

// 5. 200 random primitive omega, m in 2..9, t in [-20,20]: zeta primitive,
// congruence, injectivity in t, m*phi(omega/m) = phi(omega).
static bool criterion_zeta(std::string& detail) {
  std::mt19937_64 rng(0x2E7A);
  std::uniform_int_distribution<long> coord(-60, 60), mdist(2, 9);
  int done = 0;
  while (done < 200) {
    LatticeVector omega{coord(rng), coord(rng)};
    if ((omega.x == 0 && omega.y == 0) || !is_primitive(omega)) continue;
    ++done;
    mpz_class m = mdist(rng);
    std::set<std::pair<std::string, std::string>> seen;
    for (long t = -20; t <= 20; ++t) {
      ZetaChoice z = find_zeta(omega, m, t);
      if (!expect(is_primitive(z.zeta), "zeta not primitive", detail)) return false;
      LatticeVector sum = omega + z.zeta;
      if (!expect(sum.x % m == 0 && sum.y % m == 0, "omega+zeta not in mZ+mZ", detail))
        return false;
      if (!expect(seen.insert({z.zeta.x.get_str(), z.zeta.y.get_str()}).second,
                  "zeta family not injective in t", detail))
        return false;
      ExtendedLatticeElement frac({0, 0}, omega, m, 1), whole(omega, omega, m, 0);
      if (!expect(m * phi_zeta(frac, z) == phi_zeta(whole, z), "phi consistency failed", detail))
        return false;
    }
  }
  return true;
}

// 6. Enumeration counts 2 and 18 at the spec bounds, brute-force equality
// through 3 vertices.
static bool criterion_enumeration(std::string& detail) {
  HyperbolicCatalog cat;
  auto forms = [&](const EnumBounds& b) {
    std::vector<std::string> out;
    for (const DecoratedTree& t : enumerate_trees(b, cat)) out.push_back(canonical_form(t));
    return out;
  };
  EnumBounds b1{1, 3, 3, 3}, b2{2, 3, 3, 3}, b3{3, 2, 2, 3};
  auto f1 = forms(b1), f2 = forms(b2), f3 = forms(b3);
  if (!expect(f1.size() == 2, "1-vertex count " + std::to_string(f1.size()) + " != 2", detail))
    return false;
  if (!expect(f2.size() == 18, "2-vertex count " + std::to_string(f2.size()) + " != 18", detail))
    return false;
  if (!expect(f1 == oracles::brute_force_tree_forms(b1, cat), "brute force mismatch at 1", detail))
    return false;
  if (!expect(f2 == oracles::brute_force_tree_forms(b2, cat), "brute force mismatch at 2", detail))
    return false;
  if (!expect(f3 == oracles::brute_force_tree_forms(b3, cat), "brute force mismatch at 3", detail))
    return false;
  return true;
}

// 7. De-satellitation: cable -> normalized torus knot over all coprime
// |p| <= 7, q <= 5; key-chain splice; outputs validate.
static bool criterion_desatellite(std::string& detail) {
  HyperbolicCatalog cat;
  for (long q = 2; q <= 5; ++q)
    for (long p = -7; p <= 7; ++p) {
      if (p == 0 || std::gcd(p < 0 ? -p : p, q) != 1) continue;
      DecoratedTree t;
      t.root = "c";
      t.nodes.push_back(TreeNode{"c", CableData{p, q}});
      t.nodes.push_back(TreeNode{"k", TorusKnotData{3, 2}});
      t.edges.push_back(TreeEdge{"c", "k", 0, 0});
      DecoratedTree r = desatellite(t, "k", cat);
      long pa = p < 0 ? -p : p;
      if (pa == 1) {
        if (!expect(r.empty(), "1/q cable should collapse to the unknot", detail)) return false;
        continue;
      }
      if (!expect(validate_tree(r, cat).empty(), "rewrite does not validate", detail))
        return false;
      const auto* tk = std::get_if<TorusKnotData>(&r.nodes.at(0).kind);
      if (!expect(tk != nullptr, "cable did not become a torus knot", detail)) return false;
      long want_p = pa > q ? p : (p < 0 ? -q : q);
      long want_q = pa > q ? q : pa;
      if (!expect(tk->p == want_p && tk->q == want_q, "torus parameters not normalized", detail))
        return false;
    }

  // Key-chain splice.
  DecoratedTree kc;
  kc.root = "k";
  kc.nodes.push_back(TreeNode{"k", KeyChainData{2}});
  kc.nodes.push_back(TreeNode{"a", TorusKnotData{3, 2}});
  kc.nodes.push_back(TreeNode{"b", TorusKnotData{5, 2}});
  kc.edges.push_back(TreeEdge{"k", "a", 0, 0});
  kc.edges.push_back(TreeEdge{"k", "b", 0, 0});
  DecoratedTree spliced = desatellite(kc, "a", cat);
  if (!expect(spliced.nodes.size() == 1 && *spliced.root == "b" &&
                  validate_tree(spliced, cat).empty(),
              "key-chain splice failed", detail))
    return false;
  return true;
}

// 8. piece_stats flags pieces > 4n-3, exactly, for n in 1..10.
static bool criterion_weidmann(std::string& detail) {
  HyperbolicCatalog cat;
  auto chain = [&](std::size_t vertices) {
    DecoratedTree t;
    t.root = "v0";
    t.nodes.push_back(TreeNode{"v0", TorusKnotData{3, 2}});
    for (std::size_t i = 1; i < vertices; ++i) {
      DecoratedTree next;
      next.root = "v" + std::to_string(i);
      next.nodes.push_back(TreeNode{*next.root, CableData{5, 3}});
      for (auto& n : t.nodes) next.nodes.push_back(n);
      for (auto& e : t.edges) next.edges.push_back(e);
      next.edges.push_back(TreeEdge{*next.root, *t.root, 0, 0});
      t = std::move(next);
    }
    return t;
  };
  for (unsigned n = 1; n <= 10; ++n) {
    std::size_t cap = 4ul * n - 3ul;
    PieceStats at_cap = piece_stats(chain(cap), cat, 0, n);
    PieceStats above = piece_stats(chain(cap + 1), cat, 0, n);
    if (!expect(at_cap.weidmann_ok, "cap wrongly flagged at n=" + std::to_string(n), detail))
      return false;
    if (!expect(!above.weidmann_ok, "cap+1 not flagged at n=" + std::to_string(n), detail))
      return false;
    if (!expect(above.weidmann_rank == n + 1, "derived rank wrong", detail)) return false;
  }
  return true;
}

// 9. Radius formulas agree with doubled-precision re-evaluation to 1e-12
// at 100 log-spaced points; endpoint behavior.
static bool criterion_radius(std::string& detail) {
  mpfr_prec_t prec = Real::bits_for_digits(50);
  double endpoint = cgm_domain_endpoint(prec).midpoint().to_double();
  for (int i = 0; i < 100; ++i) {
    double l = 1e-8 * std::pow(0.99 * endpoint / 1e-8, i / 99.0);
    char buf[64];
    snprintf(buf, sizeof buf, "%.17g", l);
    double a = cgm_tube_radius_decimal(buf, 50).to_double();
    double b = cgm_tube_radius_decimal(buf, 100).to_double();
    if (!expect(std::abs(a - b) <= 1e-12 * std::abs(b), "tube radius precision drift", detail))
      return false;
  }
  for (int i = 0; i < 100; ++i) {
    long q = static_cast<long>(7.0 * std::pow(1e6 / 7.0, i / 99.0));
    double a = martin_cone_radius(q, 50).to_double();
    double b = martin_cone_radius(q, 100).to_double();
    if (!expect(std::abs(a - b) <= 1e-12 * std::abs(b), "cone radius precision drift", detail))
      return false;
  }
  // Endpoint behavior: sinh^2 -> 0 at the CGM endpoint, cone radius 0 at 6.
  Interval at_end = cgm_sinh_sq(cgm_domain_endpoint(prec), prec);
  if (!expect(at_end.contains_zero(), "sinh^2 at the endpoint should vanish", detail))
    return false;
  double near = cgm_tube_radius_decimal("0.1141", 50).to_double();
  if (!expect(near < 0.06, "radius should collapse near the endpoint", detail)) return false;
  if (!expect(martin_cone_radius(6, 50).sign() == 0, "cone radius at q=6 should be 0", detail))
    return false;
  return true;
}

// 10. Certified brackets for the critical thresholds, plen 0..6, monotone.
static bool criterion_thresholds(std::string& detail) {
  mpfr_prec_t prec = Real::bits_for_digits(50);
  Interval endpoint = cgm_domain_endpoint(prec);
  Real prev_l = critical_geodesic_length(0, 50);
  mpz_class prev_q = critical_cone_order(0, 50);
  if (!expect(prev_q == 7, "cone order at plen 0 should be 7", detail)) return false;
  for (unsigned long n = 0; n <= 6; ++n) {
    Real l = critical_geodesic_length(n, 50);  // brackets certified inside
    if (n >= 1) {
      Real half(prec), twice(prec);
      mpfr_mul_2si(half.raw(), l.raw(), -1, MPFR_RNDN);
      mpfr_mul_2si(twice.raw(), l.raw(), 1, MPFR_RNDN);
      if (twice >= endpoint.lo()) mpfr_set(twice.raw(), endpoint.lo().raw(), MPFR_RNDD);
      if (!expect(geodesic_predicate(Interval(half, half), n, prec) == Cert::True,
                  "lower geodesic bracket", detail))
        return false;
      if (!expect(geodesic_predicate(Interval(twice, twice), n, prec) == Cert::False,
                  "upper geodesic bracket", detail))
        return false;
      if (!expect(l < prev_l, "critical length not decreasing", detail)) return false;
    } else {
      // plen 0: the predicate holds on the whole interior; at the endpoint
      // the formula value is exactly 0, certified as an enclosure of 0.
      Real half(prec);
      mpfr_mul_2si(half.raw(), l.raw(), -1, MPFR_RNDN);
      if (!expect(geodesic_predicate(Interval(half, half), 0, prec) == Cert::True,
                  "interior geodesic predicate at plen 0", detail))
        return false;
      if (!expect(cgm_sinh_sq(endpoint, prec).contains_zero(), "endpoint limit", detail))
        return false;
    }
    mpz_class q = critical_cone_order(n, 50);
    if (!expect(cone_predicate(q, n, prec) == Cert::True, "cone bracket at q*", detail))
      return false;
    if (!expect(cone_predicate(q - 1, n, prec) == Cert::False, "cone bracket at q*-1", detail))
      return false;
    if (n >= 1) {
      if (!expect(q >= prev_q, "cone order not monotone", detail)) return false;
      prev_l = l;
    }
    prev_q = q;
  }
  return true;
}

// 11. Cross-module end-to-end through the CLI: trefoil length 4, bounds
// report 4*pi and T(4) = 162, enumeration capped at T(4) has no wider cable.
static bool criterion_end_to_end(std::string& detail) {
  auto run = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    std::istringstream in;
    int code = cli::run(args, out, err, in);
    return std::pair{code, out.str()};
  };

  auto [pcode, pout] = run({"plen", "<a,b | abaBAB>"});
  if (!expect(pcode == 0, "plen exit code", detail)) return false;
  json preport = json::parse(pout);
  if (!expect(preport["outputs"]["length"] == 4, "trefoil length != 4", detail)) return false;

  auto [bcode, bout] = run({"bounds", "--plen", "4"});
  if (!expect(bcode == 0, "bounds exit code", detail)) return false;
  json breport = json::parse(bout);
  if (!expect(breport["outputs"]["volume_bound"]["pi_coefficient"] == "4",
              "volume bound should be 4*pi", detail))
    return false;
  if (!expect(breport["outputs"]["cable_q_cutoff"] == "162", "T(4) != 162", detail)) return false;

  mpz_class cap = bound_constants(4).t;
  if (!expect(cap == 162, "T(4) constant", detail)) return false;
  HyperbolicCatalog cat;
  EnumBounds bounds{2, 4, cap.get_si(), 2};
  auto trees = enumerate_trees(bounds, cat);
  if (!expect(!trees.empty(), "capped enumeration is empty", detail)) return false;
  for (const DecoratedTree& t : trees)
    for (const TreeNode& n : t.nodes)
      if (const auto* cb = std::get_if<CableData>(&n.kind))
        if (!expect(cb->q <= 162, "cable q above T(4) in capped enumeration", detail))
          return false;
  // And the piece-level check flags a wider cable against the same budget.
  DecoratedTree wide;
  wide.root = "c";
  wide.nodes.push_back(TreeNode{"c", CableData{1, 163}});
  wide.nodes.push_back(TreeNode{"k", TorusKnotData{3, 2}});
  wide.edges.push_back(TreeEdge{"c", "k", 0, 0});
  PieceStats stats = piece_stats(wide, cat, 4);
  if (!expect(!stats.cable_q_ok, "q = 163 not flagged against T(4)", detail)) return false;
  return true;
}

int main() {
  Harness h;
  h.criterion(1, "formula exactness T(n), A(n)/pi for n <= 64", 1.0, criterion_formulas);
  h.criterion(2, "triangularization on 500 random presentations", 10.0, criterion_triangularize);
  h.criterion(3, "bounded kernel harness on 1000 contribution matrices", 30.0,
              criterion_small_gen);
  h.criterion(4, "torsion cap 2*3^t on 1000 presentation matrices", 30.0, criterion_small_tor);
  h.criterion(5, "zeta family on 200 random (omega, m, t)", 5.0, criterion_zeta);
  h.criterion(6, "enumeration counts and brute-force equality", 60.0, criterion_enumeration);
  h.criterion(7, "de-satellitation rewrites over |p| <= 7, q <= 5", 5.0, criterion_desatellite);
  h.criterion(8, "Weidmann piece cap 4n-3 for n in 1..10", 1.0, criterion_weidmann);
  h.criterion(9, "radius formulas at doubled precision, 100 points", 5.0, criterion_radius);
  h.criterion(10, "certified critical-threshold brackets, plen 0..6", 10.0,
              criterion_thresholds);
  h.criterion(11, "cross-module end-to-end at the trefoil length", 5.0, criterion_end_to_end);
  if (h.failures) {
    std::printf("%d criterion(s) failed\n", h.failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
