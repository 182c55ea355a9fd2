// Test-only reference implementations, kept deliberately independent of the
// library's computation paths.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <vector>

#include "knotcalc/intmatrix.hpp"
#include "knotcalc/jsj.hpp"
#include "knotcalc/presentation.hpp"

namespace oracles {

using knotcalc::IntMatrix;

// Laplace cofactor expansion along the first row.
inline mpz_class det_cofactor(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a.at(0, 0);
  mpz_class total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a.at(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, mc = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, mc++) = a.at(r, c);
      }
    mpz_class term = a.at(0, j) * det_cofactor(minor);
    total += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return total;
}

// gcd over all k x k minors, 0 when all vanish.
inline mpz_class gcd_of_k_minors(const IntMatrix& a, std::size_t k) {
  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  std::vector<std::size_t> pick;
  auto choose = [&](auto&& self, std::size_t pool, std::size_t need, std::size_t start,
                    std::vector<std::vector<std::size_t>>& out) -> void {
    if (need == 0) {
      out.push_back(pick);
      return;
    }
    for (std::size_t i = start; i + need <= pool; ++i) {
      pick.push_back(i);
      self(self, pool, need - 1, i + 1, out);
      pick.pop_back();
    }
  };
  choose(choose, a.rows(), k, 0, row_sets);
  pick.clear();
  choose(choose, a.cols(), k, 0, col_sets);

  mpz_class g = 0;
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = a.at(rs[i], cs[j]);
      mpz_class d = det_cofactor(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

// Invariant factors via the quotient-of-minor-gcds characterization.
inline std::vector<mpz_class> invariant_factors_by_minors(const IntMatrix& a) {
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    mpz_class g = gcd_of_k_minors(a, k);
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Rational span membership: reduce v against an echelon basis of `span`.
inline bool in_rational_span(const std::vector<std::vector<mpq_class>>& span,
                             std::vector<mpq_class> v) {
  std::vector<std::vector<mpq_class>> basis;
  for (std::vector<mpq_class> row : span) {
    for (const auto& b : basis) {
      std::size_t lead = 0;
      while (lead < b.size() && b[lead] == 0) ++lead;
      if (lead < b.size() && row[lead] != 0) {
        mpq_class f = row[lead] / b[lead];
        for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * b[j];
      }
    }
    if (std::any_of(row.begin(), row.end(), [](const mpq_class& x) { return x != 0; }))
      basis.push_back(std::move(row));
  }
  for (const auto& b : basis) {
    std::size_t lead = 0;
    while (lead < b.size() && b[lead] == 0) ++lead;
    if (lead < b.size() && v[lead] != 0) {
      mpq_class f = v[lead] / b[lead];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * b[j];
    }
  }
  return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; });
}

inline std::vector<mpq_class> to_mpq(const std::vector<mpz_class>& v) {
  std::vector<mpq_class> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mpq_class(v[i]);
  return out;
}

// Mutual span containment of two rational families.
inline bool same_rational_span(const std::vector<std::vector<mpq_class>>& a,
                               const std::vector<std::vector<mpq_class>>& b) {
  for (const auto& v : a)
    if (!in_rational_span(b, v)) return false;
  for (const auto& v : b)
    if (!in_rational_span(a, v)) return false;
  return true;
}

// Random presentation with every relator freely and cyclically reduced.
inline knotcalc::Presentation random_presentation(std::mt19937_64& rng, unsigned max_gens,
                                                  unsigned max_relators, unsigned max_len) {
  std::uniform_int_distribution<unsigned> gen_count(1, max_gens);
  unsigned n = gen_count(rng);
  std::vector<knotcalc::Generator> gens;
  for (unsigned i = 0; i < n; ++i) gens.push_back({std::string(1, static_cast<char>('a' + i))});

  std::uniform_int_distribution<unsigned> rel_count(0, max_relators);
  std::uniform_int_distribution<unsigned> len_dist(2, max_len);
  std::uniform_int_distribution<std::size_t> gen_pick(0, n - 1);
  std::uniform_int_distribution<int> sign_pick(0, 1);

  std::vector<knotcalc::Word> relators;
  unsigned m = rel_count(rng);
  for (unsigned j = 0; j < m; ++j) {
    unsigned want = len_dist(rng);
    std::vector<knotcalc::Letter> w;
    while (w.size() < want) {
      knotcalc::Letter l{gen_pick(rng), sign_pick(rng) ? 1 : -1};
      if (!w.empty() && w.back().gen == l.gen && w.back().sign == -l.sign) continue;
      // keep the word cyclically reduced as it grows
      if (w.size() + 1 == want && !w.empty() && w.front().gen == l.gen &&
          w.front().sign == -l.sign)
        continue;
      w.push_back(l);
    }
    relators.push_back(knotcalc::Word(std::move(w)));
  }
  return knotcalc::Presentation(std::move(gens), std::move(relators));
}

// Exhaustive generate-and-filter tree enumeration; independent of the
// library's recursive composition.
std::vector<std::string> brute_force_tree_forms(const knotcalc::EnumBounds& bounds,
                                                const knotcalc::HyperbolicCatalog& cat);

}  // namespace oracles
