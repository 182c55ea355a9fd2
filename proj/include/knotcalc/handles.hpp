#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "knotcalc/intmatrix.hpp"

namespace knotcalc {

enum class HandleKind { ZeroHandle, OneHandle, MonkeyHandle, IsolatedDisk };

std::string handle_kind_name(HandleKind k);
HandleKind handle_kind_from_name(const std::string& name);

struct HandleCell {
  std::string id;
  HandleKind kind;
  mpq_class area;  // pull-back area, in units of pi
};

// Abstract intersection complex: cells, fiber classes of the I-bundle
// quotient, and the integer contribution of each cell to each fiber class.
class HandleComplex {
 public:
  HandleComplex(std::vector<HandleCell> cells, std::vector<std::string> fiber_classes);

  void set_contribution(const std::string& cell_id, const std::string& fiber, long value);
  long contribution(std::size_t cell_index, std::size_t fiber_index) const;

  const std::vector<HandleCell>& cells() const { return cells_; }
  const std::vector<std::string>& fiber_classes() const { return fiber_classes_; }
  std::size_t cell_index(const std::string& id) const;
  std::size_t fiber_index(const std::string& name) const;

 private:
  std::vector<HandleCell> cells_;
  std::vector<std::string> fiber_classes_;
  std::map<std::pair<std::size_t, std::size_t>, long> contributions_;
};

struct Diagnostic {
  std::string subject;
  std::string message;
};

// Kind-wise contribution rules: zero-handles contribute 0 or +-1 on a single
// fiber class, one-handles 0 or +-2, monkey-handles have absolute values
// summing to at most 3, isolated disks contribute nothing.
std::vector<Diagnostic> validate_handle_complex(const HandleComplex& h);

// Fiber classes as rows, cells as columns.
IntMatrix contribution_matrix(const HandleComplex& h);

// Relative 2-cycle as cell coefficients; the defining condition is that the
// contribution-weighted sum vanishes on every fiber class.
struct RelativeCycle {
  std::map<std::string, mpz_class> coefficients;

  RelativeCycle operator+(const RelativeCycle& o) const;
};

// Generating set of the rational cycle space: isolated disks and zero-column
// cells as singletons, the rest from the bounded kernel basis of the matrix
// restricted to nonzero columns. Coefficients are bounded by 3^rank.
std::vector<RelativeCycle> bounded_cycle_generators(const HandleComplex& h);

struct TorsionBoundResult {
  mpz_class max_order;
  std::size_t wide_rows;
  mpz_class bound;  // 2 * 3^wide_rows
  bool ok;
};

// Torsion of the relative H_1 presented by `presentation_rows` against the
// 2*3^t cap, t = number of rows with more than one nonzero entry. Wide rows
// must have absolute values summing to at most 3; rows with a single nonzero
// entry must carry +-1 or +-2.
TorsionBoundResult torsion_bound_check(const HandleComplex& h, const IntMatrix& presentation_rows);

// Sum over cells of |coefficient| * area, in units of pi.
mpq_class weighted_area(const RelativeCycle& c, const HandleComplex& h);

}  // namespace knotcalc
