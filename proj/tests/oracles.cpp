#include "oracles.hpp"

#include <map>
#include <numeric>
#include <set>
#include <string>

namespace oracles {

namespace {

using namespace knotcalc;

// All parent vectors on n vertices with parent[i] < i; every rooted tree
// shape appears (possibly repeatedly, which the canonical-form set absorbs).
void all_parent_vectors(std::size_t n, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> parents(n, 0);
  auto rec = [&](auto&& self, std::size_t at) -> void {
    if (at == n) {
      out.push_back(parents);
      return;
    }
    for (std::size_t p = 0; p < at; ++p) {
      parents[at] = p;
      self(self, at + 1);
    }
  };
  if (n >= 1) rec(rec, 1);
}

std::vector<NodeKind> kind_pool(const EnumBounds& b, const HyperbolicCatalog& cat) {
  std::vector<NodeKind> out;
  for (long q = 2; q <= b.max_q; ++q)
    for (long pa = 1; pa <= b.max_abs_p; ++pa) {
      if (std::gcd(pa, q) != 1) continue;
      if (pa > q) {
        out.push_back(TorusKnotData{pa, q});
        out.push_back(TorusKnotData{-pa, q});
      }
      out.push_back(CableData{pa, q});
      out.push_back(CableData{-pa, q});
    }
  for (unsigned long r = 2; r <= b.max_r; ++r) out.push_back(KeyChainData{r});
  for (const CatalogEntry& e : cat.entries())
    for (unsigned mu = 0; mu < e.meridian_choices; ++mu)
      out.push_back(HyperbolicData{e.catalog_id, mu, {}});
  return out;
}

struct Assignment {
  const std::vector<std::vector<std::size_t>>* parents;
  std::vector<NodeKind> kinds;
};

// Slot/longitude decoration choices for one hyperbolic vertex: every
// bijection children -> slots and every longitude tuple.
void decorate_hyperbolic(const DecoratedTree& base, std::size_t vertex,
                         const std::vector<std::size_t>& child_edges, const CatalogEntry& entry,
                         std::vector<DecoratedTree>& out) {
  std::vector<unsigned> slots(entry.boundary_count - 1);
  for (unsigned i = 0; i < slots.size(); ++i) slots[i] = i + 1;
  std::sort(slots.begin(), slots.end());
  do {
    std::vector<unsigned> lons(child_edges.size(), 0);
    for (;;) {
      DecoratedTree t = base;
      for (std::size_t i = 0; i < child_edges.size(); ++i) {
        t.edges[child_edges[i]].slot = slots[i];
        t.edges[child_edges[i]].longitude = lons[i];
      }
      out.push_back(std::move(t));
      std::size_t j = 0;
      while (j < lons.size() && ++lons[j] == entry.longitude_choices_per_boundary) {
        lons[j] = 0;
        ++j;
      }
      if (j == lons.size()) break;
    }
  } while (std::next_permutation(slots.begin(), slots.end()));
  (void)vertex;
}

}  // namespace

std::vector<std::string> brute_force_tree_forms(const EnumBounds& bounds,
                                                const HyperbolicCatalog& cat) {
  std::set<std::string> forms;
  std::vector<NodeKind> pool = kind_pool(bounds, cat);
  if (pool.empty()) return {};

  for (std::size_t n = 1; n <= bounds.max_vertices; ++n) {
    std::vector<std::vector<std::size_t>> shapes;
    all_parent_vectors(n, shapes);

    for (const auto& parents : shapes) {
      // Assign every kind tuple.
      std::vector<std::size_t> choice(n, 0);
      for (;;) {
        DecoratedTree t;
        t.root = "v0";
        for (std::size_t i = 0; i < n; ++i)
          t.nodes.push_back(TreeNode{"v" + std::to_string(i), pool[choice[i]]});
        for (std::size_t i = 1; i < n; ++i)
          t.edges.push_back(
              TreeEdge{"v" + std::to_string(parents[i]), "v" + std::to_string(i), 0, 0});

        // Expand hyperbolic slot/longitude decorations vertex by vertex.
        std::vector<DecoratedTree> variants{t};
        for (std::size_t i = 0; i < n; ++i) {
          const auto* h = std::get_if<HyperbolicData>(&pool[choice[i]]);
          if (!h) continue;
          const CatalogEntry* entry = cat.find(h->catalog_id);
          std::vector<std::size_t> child_edges;
          for (std::size_t ei = 0; ei < t.edges.size(); ++ei)
            if (t.edges[ei].parent == "v" + std::to_string(i)) child_edges.push_back(ei);
          if (child_edges.size() != entry->boundary_count - 1) {
            variants.clear();  // arity can never match; skip this assignment
            break;
          }
          std::vector<DecoratedTree> next;
          for (const DecoratedTree& v : variants)
            decorate_hyperbolic(v, i, child_edges, *entry, next);
          variants = std::move(next);
        }

        for (const DecoratedTree& v : variants)
          if (validate_tree(v, cat).empty()) forms.insert(canonical_form(v));

        std::size_t j = 0;
        while (j < n && ++choice[j] == pool.size()) {
          choice[j] = 0;
          ++j;
        }
        if (j == n) break;
      }
    }
  }
  return std::vector<std::string>(forms.begin(), forms.end());
}

}  // namespace oracles
