#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "knotcalc/handles.hpp"  // Diagnostic
#include "knotcalc/real.hpp"

namespace knotcalc {

// The four vertex families admissible in the rooted JSJ tree of a knot
// complement. Torus-knot parameters are normalized with |p| > q >= 2 and the
// sign carried by p; the (p,q) <-> (q,p) symmetry is resolved that way.
struct KeyChainData {
  unsigned long r;  // > 1 unlink components, one child each
  bool operator==(const KeyChainData&) const = default;
};

struct TorusKnotData {
  long p;  // |p| > q, coprime to q, sign = chirality
  long q;  // >= 2
  bool operator==(const TorusKnotData&) const = default;
};

struct CableData {
  long p;  // != 0, coprime to q
  long q;  // > 1, the winding of the pattern
  bool operator==(const CableData&) const = default;
};

// A child boundary already Dehn-filled along its longitude; kept so that
// de-satellitation leaves an inspectable trace on hyperbolic vertices.
struct FilledSlot {
  unsigned slot;
  unsigned longitude;
  bool operator==(const FilledSlot&) const = default;
};

struct HyperbolicData {
  std::string catalog_id;
  unsigned meridian_choice = 0;
  std::vector<FilledSlot> filled;
  bool operator==(const HyperbolicData&) const = default;
};

using NodeKind = std::variant<KeyChainData, TorusKnotData, CableData, HyperbolicData>;

struct TreeNode {
  std::string id;
  NodeKind kind;
  bool operator==(const TreeNode&) const = default;
};

// For hyperbolic parents, `slot` is the catalog boundary-component index in
// [1, boundary_count) and `longitude` the child-longitude choice; both are 0
// on Seifert fibered parents.
struct TreeEdge {
  std::string parent;
  std::string child;
  unsigned slot = 0;
  unsigned longitude = 0;
  bool operator==(const TreeEdge&) const = default;
};

// Rooted tree of decorated vertices; the complete code of a knot complement.
// The empty tree stands for the unknot complement.
struct DecoratedTree {
  std::optional<std::string> root;
  std::vector<TreeNode> nodes;
  std::vector<TreeEdge> edges;

  bool empty() const { return !root.has_value(); }
  const TreeNode& node(const std::string& id) const;
  std::vector<const TreeEdge*> children_of(const std::string& id) const;
  const TreeEdge* parent_edge_of(const std::string& id) const;
};

struct CatalogEntry {
  std::string catalog_id;
  unsigned boundary_count = 1;
  std::string volume;  // exact decimal, as given
  unsigned meridian_choices = 1;
  unsigned longitude_choices_per_boundary = 1;
};

class HyperbolicCatalog {
 public:
  HyperbolicCatalog() = default;
  explicit HyperbolicCatalog(std::vector<CatalogEntry> entries);
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(const std::string& id) const;

 private:
  std::vector<CatalogEntry> entries_;
};

std::vector<Diagnostic> validate_tree(const DecoratedTree& t, const HyperbolicCatalog& cat);

// Deterministic encoding, equal exactly for trees isomorphic under the
// key-chain child multiset symmetry. Requires a valid tree.
std::string canonical_form(const DecoratedTree& t);

struct EnumBounds {
  std::size_t max_vertices = 0;
  long max_abs_p = 0;
  long max_q = 0;
  unsigned long max_r = 0;

  // Vertex cap 4n-3 from a group rank n.
  static EnumBounds from_rank(unsigned n, long max_abs_p, long max_q, unsigned long max_r);
};

// All valid decorated trees within the bounds, once per canonical form, in
// canonical-form lexicographic order.
std::vector<DecoratedTree> enumerate_trees(const EnumBounds& bounds,
                                           const HyperbolicCatalog& cat);

// Removes the subtree hanging below `child_id` and rewrites its parent:
// Cable(p,q) becomes the normalized TorusKnot(p,q) (the unknot collapses
// further), KeyChain(r) drops to KeyChain(r-1) with the 2-key-chain spliced
// away, hyperbolic vertices record the slot as filled.
DecoratedTree desatellite(const DecoratedTree& t, const std::string& child_id,
                          const HyperbolicCatalog& cat);

// Attaches `subtree` under `parent_id` (hyperbolic parents need the target
// slot and longitude choice). Node ids must stay distinct.
DecoratedTree graft(const DecoratedTree& t, const std::string& parent_id,
                    const DecoratedTree& subtree, const HyperbolicCatalog& cat,
                    unsigned slot = 0, unsigned longitude = 0);

// Product of the cable winding q over the path from `node_id` up to the
// root; key-chain and hyperbolic edges contribute 1.
mpz_class winding_divisibility(const DecoratedTree& t, const std::string& node_id);

struct PieceStats {
  std::size_t pieces = 0;
  unsigned weidmann_rank = 1;  // smallest n with pieces <= 4n-3
  bool weidmann_ok = true;
  mpq_class volume_sum;  // exact sum of catalog volumes
  Cert volume_ok = Cert::True;
  bool cable_q_ok = true;
  mpz_class cable_q_cap;  // T(plen)
};

// Piece count against the 4n-3 cap, hyperbolic volume against pi*plen, and
// cable windings against T(plen). When `rank` is absent the smallest
// admissible rank is derived and reported.
PieceStats piece_stats(const DecoratedTree& t, const HyperbolicCatalog& cat, unsigned long plen,
                       std::optional<unsigned> rank = std::nullopt, unsigned digits = 50);

}  // namespace knotcalc
