#include "knotcalc/intmatrix.hpp"

#include <algorithm>
#include <utility>

#include "knotcalc/errors.hpp"

namespace knotcalc {

namespace {
int cmp_abs(const mpz_class& a, const mpz_class& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}
}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw DomainError("entry count " + std::to_string(entries_.size()) + " does not match " +
                      std::to_string(rows_) + "x" + std::to_string(cols_));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DomainError("matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

std::vector<mpz_class> IntMatrix::mul_vector(const std::vector<mpz_class>& v) const {
  if (v.size() != cols_) throw DomainError("matrix-vector shape mismatch");
  std::vector<mpz_class> out(rows_, mpz_class(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const mpz_class& e) { return e == 0; });
}

mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant requires a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; every division below is exact.
  IntMatrix m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && m.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : mpz_class(-m.at(n - 1, n - 1));
}

IntMatrix adjugate(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("adjugate requires a square matrix");
  const std::size_t n = a.rows();
  IntMatrix adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mr, mc) = a.at(r, c);
          ++mc;
        }
        ++mr;
      }
      mpz_class cof = determinant(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      adj.at(j, i) = cof;  // adj = transpose of the cofactor matrix
    }
  }
  mpz_class det = determinant(a);
  IntMatrix prod = a.mul(adj);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (prod.at(i, j) != (i == j ? det : mpz_class(0)))
        throw CertificateError("adjugate identity A*adj(A) = det(A)*I failed");
  return adj;
}

namespace {

// Row/column operations with transform tracking for SNF.
struct SnfWork {
  IntMatrix m, left, right;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
    for (std::size_t j = 0; j < left.cols(); ++j) std::swap(left.at(a, j), left.at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
    for (std::size_t i = 0; i < right.rows(); ++i) std::swap(right.at(i, a), right.at(i, b));
  }
  // row[a] += f * row[b]
  void add_row(std::size_t a, std::size_t b, const mpz_class& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) += f * m.at(b, j);
    for (std::size_t j = 0; j < left.cols(); ++j) left.at(a, j) += f * left.at(b, j);
  }
  // col[a] += f * col[b]
  void add_col(std::size_t a, std::size_t b, const mpz_class& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) += f * m.at(i, b);
    for (std::size_t i = 0; i < right.rows(); ++i) right.at(i, a) += f * right.at(i, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
    for (std::size_t j = 0; j < left.cols(); ++j) left.at(a, j) = -left.at(a, j);
  }
};

// Clears row k and column k around the pivot at (k,k); afterwards the pivot
// divides every entry of the trailing submatrix.
void reduce_pivot(SnfWork& w, std::size_t k) {
  const std::size_t nr = w.m.rows(), nc = w.m.cols();
  for (;;) {
    // Move the least nonzero magnitude in the trailing block to (k,k).
    std::size_t bi = k, bj = k;
    bool found = false;
    for (std::size_t i = k; i < nr; ++i)
      for (std::size_t j = k; j < nc; ++j) {
        if (w.m.at(i, j) == 0) continue;
        if (!found || cmp_abs(w.m.at(i, j), w.m.at(bi, bj)) < 0) {
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return;  // trailing block is zero
    w.swap_rows(k, bi);
    w.swap_cols(k, bj);

    bool dirty = false;
    for (std::size_t i = k + 1; i < nr; ++i) {
      if (w.m.at(i, k) == 0) continue;
      mpz_class q = w.m.at(i, k) / w.m.at(k, k);  // truncated quotient
      if (q != 0) w.add_row(i, k, mpz_class(-q));
      if (w.m.at(i, k) != 0) dirty = true;  // remainder survives; pivot will shrink
    }
    for (std::size_t j = k + 1; j < nc; ++j) {
      if (w.m.at(k, j) == 0) continue;
      mpz_class q = w.m.at(k, j) / w.m.at(k, k);
      if (q != 0) w.add_col(j, k, mpz_class(-q));
      if (w.m.at(k, j) != 0) dirty = true;
    }
    if (dirty) continue;

    // Pivot row/col clean; enforce divisibility into the trailing block.
    bool divides_all = true;
    for (std::size_t i = k + 1; i < nr && divides_all; ++i)
      for (std::size_t j = k + 1; j < nc && divides_all; ++j)
        if (w.m.at(i, j) % w.m.at(k, k) != 0) {
          w.add_row(k, i, mpz_class(1));
          divides_all = false;
        }
    if (divides_all) {
      if (w.m.at(k, k) < 0) w.negate_row(k);
      return;
    }
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SnfWork w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  const std::size_t steps = std::min(a.rows(), a.cols());
  for (std::size_t k = 0; k < steps; ++k) reduce_pivot(w, k);

  SmithForm out;
  for (std::size_t k = 0; k < steps; ++k) {
    if (w.m.at(k, k) == 0) break;
    out.d.push_back(w.m.at(k, k));
  }
  out.left = std::move(w.left);
  out.right = std::move(w.right);

  // Certify: left*A*right = diag(d), chain divisibility, |det| = 1.
  IntMatrix check = out.left.mul(a).mul(out.right);
  for (std::size_t i = 0; i < check.rows(); ++i)
    for (std::size_t j = 0; j < check.cols(); ++j) {
      mpz_class want = (i == j && i < out.d.size()) ? out.d[i] : mpz_class(0);
      if (check.at(i, j) != want) throw CertificateError("SNF: left*A*right is not diagonal(d)");
    }
  for (std::size_t i = 0; i + 1 < out.d.size(); ++i)
    if (out.d[i + 1] % out.d[i] != 0)
      throw CertificateError("SNF: invariant factor divisibility chain failed");
  mpz_class dl = determinant(out.left), dr = determinant(out.right);
  if ((dl != 1 && dl != -1) || (dr != 1 && dr != -1))
    throw CertificateError("SNF: transform matrices are not unimodular");
  return out;
}

TorsionInfo torsion_orders(const IntMatrix& a) {
  SmithForm snf = smith_normal_form(a);
  TorsionInfo info;
  info.rank = snf.d.size();
  info.free_rank = a.cols() - snf.d.size();
  info.max_order = 1;
  for (const mpz_class& d : snf.d)
    if (d > 1) {
      info.orders.push_back(d);
      info.max_order = d;
    }
  return info;
}

namespace {

// Incremental rational row-echelon state for greedy independence tests.
class EchelonBasis {
 public:
  // Reduces v against the basis; returns false when v is dependent,
  // otherwise absorbs it.
  bool absorb(std::vector<mpq_class> v) {
    for (const auto& b : basis_) {
      std::size_t lead = lead_of(b);
      if (v[lead] != 0) {
        mpq_class f = v[lead] / b[lead];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * b[j];
      }
    }
    if (std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; })) return false;
    basis_.push_back(std::move(v));
    return true;
  }

 private:
  static std::size_t lead_of(const std::vector<mpq_class>& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) return j;
    return v.size();
  }
  std::vector<std::vector<mpq_class>> basis_;
};

std::vector<mpq_class> to_rational(const IntMatrix& a, std::size_t row) {
  std::vector<mpq_class> v(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) v[j] = mpq_class(a.at(row, j));
  return v;
}

}  // namespace

std::size_t rational_rank(const IntMatrix& a) {
  EchelonBasis basis;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (basis.absorb(to_rational(a, i))) ++rank;
  return rank;
}

bool column_condition_holds(const IntMatrix& a) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    int nonzero = 0;
    mpz_class abs_sum = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a.at(i, j) == 0) continue;
      ++nonzero;
      abs_sum += abs(a.at(i, j));
    }
    if (nonzero > 3 || abs_sum > 3) return false;
  }
  return true;
}

FundamentalSolutionSet bounded_kernel_basis(const IntMatrix& a) {
  FundamentalSolutionSet out;
  const std::size_t q = a.cols();

  // Maximal independent row set: first rows, in order, that increase rank.
  {
    EchelonBasis rows;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (rows.absorb(to_rational(a, i))) out.pivot_rows.push_back(i);
  }
  const std::size_t p = out.pivot_rows.size();
  IntMatrix a1(p, q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) a1.at(i, j) = a.at(out.pivot_rows[i], j);

  // Lexicographically first independent columns become P.
  {
    EchelonBasis cols;
    for (std::size_t j = 0; j < q && out.pivot_columns.size() < p; ++j) {
      std::vector<mpq_class> col(p);
      for (std::size_t i = 0; i < p; ++i) col[i] = mpq_class(a1.at(i, j));
      if (cols.absorb(std::move(col))) out.pivot_columns.push_back(j);
    }
  }
  if (out.pivot_columns.size() != p)
    throw CertificateError("kernel basis: independent rows admit no independent column set");

  std::vector<bool> is_pivot(q, false);
  for (std::size_t j : out.pivot_columns) is_pivot[j] = true;
  std::vector<std::size_t> free_columns;
  for (std::size_t j = 0; j < q; ++j)
    if (!is_pivot[j]) free_columns.push_back(j);

  IntMatrix pm(p, p), qm(p, free_columns.size());
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) pm.at(i, j) = a1.at(i, out.pivot_columns[j]);
    for (std::size_t j = 0; j < free_columns.size(); ++j) qm.at(i, j) = a1.at(i, free_columns[j]);
  }
  out.det_p = determinant(pm);
  IntMatrix neg_adj_q = adjugate(pm).mul(qm);
  for (std::size_t i = 0; i < neg_adj_q.rows(); ++i)
    for (std::size_t j = 0; j < neg_adj_q.cols(); ++j) neg_adj_q.at(i, j) = -neg_adj_q.at(i, j);

  for (std::size_t n = 0; n < free_columns.size(); ++n) {
    std::vector<mpz_class> u(q, mpz_class(0));
    for (std::size_t i = 0; i < p; ++i) u[out.pivot_columns[i]] = neg_adj_q.at(i, n);
    u[free_columns[n]] = out.det_p;
    for (const mpz_class& r : a.mul_vector(u))
      if (r != 0) throw CertificateError("kernel basis: A*u != 0");
    out.solutions.push_back(std::move(u));
  }

  if (column_condition_holds(a)) {
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 3, static_cast<unsigned long>(p));
    for (const auto& u : out.solutions) {
      std::size_t nonzero = 0;
      for (const mpz_class& e : u) {
        if (e != 0) ++nonzero;
        if (cmp_abs(e, bound) > 0)
          throw CertificateError("kernel basis: entry bound 3^p violated");
      }
      if (nonzero > p + 1)
        throw CertificateError("kernel basis: more than p+1 nonzero entries");
    }
  }
  return out;
}

std::vector<std::vector<mpq_class>> rational_kernel_basis(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  // Reduced row echelon form over Q.
  std::vector<std::vector<mpq_class>> m(rows);
  for (std::size_t i = 0; i < rows; ++i) m[i] = to_rational(a, i);

  std::vector<std::size_t> pivot_col_of_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[r], m[pr]);
    mpq_class inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col_of_row) is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<mpq_class> v(cols, mpq_class(0));
    v[fc] = 1;
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) v[pivot_col_of_row[i]] = -m[i][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace knotcalc
