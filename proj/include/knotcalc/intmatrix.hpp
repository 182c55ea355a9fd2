#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace knotcalc {

// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, mpz_class(0)) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<mpz_class>& entries() const { return entries_; }

  const mpz_class& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  mpz_class& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  bool operator==(const IntMatrix& other) const = default;

  IntMatrix transpose() const;
  IntMatrix mul(const IntMatrix& rhs) const;
  std::vector<mpz_class> mul_vector(const std::vector<mpz_class>& v) const;
  bool is_zero() const;

 private:
  std::size_t rows_, cols_;
  std::vector<mpz_class> entries_;
};

// Smith normal form: left * A * right = diag(d) padded with zeros, where
// left and right are unimodular and d(i) | d(i+1). `d` holds the nonzero
// invariant factors only, so d.size() equals the rank of A.
struct SmithForm {
  std::vector<mpz_class> d;
  IntMatrix left;
  IntMatrix right;
};

struct TorsionInfo {
  std::vector<mpz_class> orders;  // invariant factors > 1, divisibility order
  mpz_class max_order;            // 1 when torsion-free
  std::size_t rank;               // rank of the relation matrix
  std::size_t free_rank;          // cols - rank
};

// Integral kernel basis assembled from an adjugate as in the bounded
// fundamental-solution construction. Column indices refer to the original
// column order of the input matrix.
struct FundamentalSolutionSet {
  std::vector<std::vector<mpz_class>> solutions;
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_columns;
  mpz_class det_p;
};

// Exact determinant by fraction-free elimination. det of the 0x0 matrix is 1.
mpz_class determinant(const IntMatrix& a);

// Adjugate P* with A*P* = P**A = det(A)*I, asserted internally.
IntMatrix adjugate(const IntMatrix& a);

SmithForm smith_normal_form(const IntMatrix& a);

// Torsion of the cokernel Z^cols / rowspan(A).
TorsionInfo torsion_orders(const IntMatrix& a);

// Rank over Q, by exact rational elimination.
std::size_t rational_rank(const IntMatrix& a);

// Kernel basis with entries bounded by 3^p whenever every column of A has at
// most 3 nonzero entries with absolute values summing to at most 3 (p = rank).
// Pivot rows are the first rows that increase the rank, pivot columns the
// lexicographically first independent column set of that row selection.
FundamentalSolutionSet bounded_kernel_basis(const IntMatrix& a);

// Exact rational kernel basis; the independent cross-check for the above.
std::vector<std::vector<mpq_class>> rational_kernel_basis(const IntMatrix& a);

// True when every column has at most 3 nonzero entries and their absolute
// values sum to at most 3.
bool column_condition_holds(const IntMatrix& a);

}  // namespace knotcalc
