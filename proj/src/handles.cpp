#include "knotcalc/handles.hpp"

#include <set>

#include "knotcalc/errors.hpp"

namespace knotcalc {

std::string handle_kind_name(HandleKind k) {
  switch (k) {
    case HandleKind::ZeroHandle: return "zero-handle";
    case HandleKind::OneHandle: return "one-handle";
    case HandleKind::MonkeyHandle: return "monkey-handle";
    case HandleKind::IsolatedDisk: return "isolated-disk";
  }
  throw DomainError("unreachable handle kind");
}

HandleKind handle_kind_from_name(const std::string& name) {
  if (name == "zero-handle") return HandleKind::ZeroHandle;
  if (name == "one-handle") return HandleKind::OneHandle;
  if (name == "monkey-handle") return HandleKind::MonkeyHandle;
  if (name == "isolated-disk") return HandleKind::IsolatedDisk;
  throw ParseError("unknown handle kind '" + name + "'");
}

HandleComplex::HandleComplex(std::vector<HandleCell> cells, std::vector<std::string> fiber_classes)
    : cells_(std::move(cells)), fiber_classes_(std::move(fiber_classes)) {
  std::set<std::string> seen;
  for (const HandleCell& c : cells_) {
    if (c.area < 0) throw DomainError("negative area on cell '" + c.id + "'");
    if (!seen.insert(c.id).second) throw DomainError("duplicate cell id '" + c.id + "'");
  }
  seen.clear();
  for (const std::string& f : fiber_classes_)
    if (!seen.insert(f).second) throw DomainError("duplicate fiber class '" + f + "'");
}

std::size_t HandleComplex::cell_index(const std::string& id) const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].id == id) return i;
  throw DomainError("unknown cell id '" + id + "'");
}

std::size_t HandleComplex::fiber_index(const std::string& name) const {
  for (std::size_t i = 0; i < fiber_classes_.size(); ++i)
    if (fiber_classes_[i] == name) return i;
  throw DomainError("unknown fiber class '" + name + "'");
}

void HandleComplex::set_contribution(const std::string& cell_id, const std::string& fiber,
                                     long value) {
  contributions_[{cell_index(cell_id), fiber_index(fiber)}] = value;
}

long HandleComplex::contribution(std::size_t cell_index, std::size_t fiber_index) const {
  auto it = contributions_.find({cell_index, fiber_index});
  return it == contributions_.end() ? 0 : it->second;
}

std::vector<Diagnostic> validate_handle_complex(const HandleComplex& h) {
  std::vector<Diagnostic> out;
  for (std::size_t ci = 0; ci < h.cells().size(); ++ci) {
    const HandleCell& cell = h.cells()[ci];
    long nonzero = 0, abs_sum = 0, single = 0;
    for (std::size_t fi = 0; fi < h.fiber_classes().size(); ++fi) {
      long v = h.contribution(ci, fi);
      if (v == 0) continue;
      ++nonzero;
      abs_sum += v < 0 ? -v : v;
      single = v;
    }
    switch (cell.kind) {
      case HandleKind::ZeroHandle:
        if (nonzero > 1 || (nonzero == 1 && single != 1 && single != -1))
          out.push_back({cell.id, "zero-handle must contribute 0 or +-1 on one fiber class"});
        break;
      case HandleKind::OneHandle:
        if (nonzero > 1 || (nonzero == 1 && single != 2 && single != -2))
          out.push_back({cell.id, "one-handle must contribute 0 or +-2 on one fiber class"});
        break;
      case HandleKind::MonkeyHandle:
        if (abs_sum > 3)
          out.push_back({cell.id, "monkey-handle contributions exceed absolute-value sum 3"});
        break;
      case HandleKind::IsolatedDisk:
        if (nonzero > 0) out.push_back({cell.id, "isolated disk must contribute nothing"});
        break;
    }
  }
  return out;
}

namespace {

void require_valid(const HandleComplex& h) {
  std::vector<Diagnostic> d = validate_handle_complex(h);
  if (!d.empty())
    throw DomainError("invalid handle complex: " + d.front().subject + ": " + d.front().message);
}

}  // namespace

IntMatrix contribution_matrix(const HandleComplex& h) {
  require_valid(h);
  IntMatrix m(h.fiber_classes().size(), h.cells().size());
  for (std::size_t fi = 0; fi < h.fiber_classes().size(); ++fi)
    for (std::size_t ci = 0; ci < h.cells().size(); ++ci) m.at(fi, ci) = h.contribution(ci, fi);
  return m;
}

RelativeCycle RelativeCycle::operator+(const RelativeCycle& o) const {
  RelativeCycle out = *this;
  for (const auto& [id, c] : o.coefficients) {
    out.coefficients[id] += c;
    if (out.coefficients[id] == 0) out.coefficients.erase(id);
  }
  return out;
}

std::vector<RelativeCycle> bounded_cycle_generators(const HandleComplex& h) {
  require_valid(h);
  IntMatrix a = contribution_matrix(h);
  const std::size_t cells = h.cells().size();

  std::vector<RelativeCycle> out;
  std::vector<std::size_t> active;  // columns with a nonzero contribution
  for (std::size_t ci = 0; ci < cells; ++ci) {
    bool zero_column = true;
    for (std::size_t fi = 0; fi < a.rows(); ++fi)
      if (a.at(fi, ci) != 0) {
        zero_column = false;
        break;
      }
    if (zero_column) {
      // Isolated disks and inert cells are cycles on their own.
      RelativeCycle c;
      c.coefficients[h.cells()[ci].id] = 1;
      out.push_back(std::move(c));
    } else {
      active.push_back(ci);
    }
  }

  IntMatrix restricted(a.rows(), active.size());
  for (std::size_t fi = 0; fi < a.rows(); ++fi)
    for (std::size_t j = 0; j < active.size(); ++j) restricted.at(fi, j) = a.at(fi, active[j]);

  FundamentalSolutionSet basis = bounded_kernel_basis(restricted);
  for (const auto& u : basis.solutions) {
    RelativeCycle c;
    for (std::size_t j = 0; j < active.size(); ++j)
      if (u[j] != 0) c.coefficients[h.cells()[active[j]].id] = u[j];
    out.push_back(std::move(c));
  }

  // Cycle condition against the full matrix, for every generator.
  for (const RelativeCycle& c : out) {
    std::vector<mpz_class> v(cells, mpz_class(0));
    for (const auto& [id, coef] : c.coefficients) v[h.cell_index(id)] = coef;
    for (const mpz_class& r : a.mul_vector(v))
      if (r != 0) throw CertificateError("cycle generator violates the cycle condition");
  }
  return out;
}

TorsionBoundResult torsion_bound_check(const HandleComplex& h,
                                       const IntMatrix& presentation_rows) {
  require_valid(h);
  std::size_t wide = 0;
  for (std::size_t i = 0; i < presentation_rows.rows(); ++i) {
    std::size_t nonzero = 0;
    mpz_class abs_sum = 0, single = 0;
    for (std::size_t j = 0; j < presentation_rows.cols(); ++j) {
      const mpz_class& v = presentation_rows.at(i, j);
      if (v == 0) continue;
      ++nonzero;
      abs_sum += abs(v);
      single = v;
    }
    if (nonzero > 1) {
      if (abs_sum > 3)
        throw DomainError("row " + std::to_string(i) +
                          ": wide rows must have absolute values summing to at most 3");
      ++wide;
    } else if (nonzero == 1) {
      mpz_class a = abs(single);
      if (a != 1 && a != 2)
        throw DomainError("row " + std::to_string(i) +
                          ": single-entry rows must carry +-1 or +-2");
    }
  }

  TorsionBoundResult out;
  out.wide_rows = wide;
  mpz_ui_pow_ui(out.bound.get_mpz_t(), 3, static_cast<unsigned long>(wide));
  out.bound *= 2;
  out.max_order = torsion_orders(presentation_rows).max_order;
  out.ok = out.max_order <= out.bound;
  return out;
}

mpq_class weighted_area(const RelativeCycle& c, const HandleComplex& h) {
  mpq_class total = 0;
  for (const auto& [id, coef] : c.coefficients)
    total += mpq_class(abs(coef)) * h.cells()[h.cell_index(id)].area;
  return total;
}

}  // namespace knotcalc
