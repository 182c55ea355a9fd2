#include "knotcalc/jsj.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "knotcalc/bounds.hpp"
#include "knotcalc/errors.hpp"
#include "knotcalc/rational.hpp"

namespace knotcalc {

const TreeNode& DecoratedTree::node(const std::string& id) const {
  for (const TreeNode& n : nodes)
    if (n.id == id) return n;
  throw DomainError("unknown node id '" + id + "'");
}

std::vector<const TreeEdge*> DecoratedTree::children_of(const std::string& id) const {
  std::vector<const TreeEdge*> out;
  for (const TreeEdge& e : edges)
    if (e.parent == id) out.push_back(&e);
  return out;
}

const TreeEdge* DecoratedTree::parent_edge_of(const std::string& id) const {
  for (const TreeEdge& e : edges)
    if (e.child == id) return &e;
  return nullptr;
}

HyperbolicCatalog::HyperbolicCatalog(std::vector<CatalogEntry> entries)
    : entries_(std::move(entries)) {
  std::set<std::string> seen;
  for (const CatalogEntry& e : entries_) {
    if (!seen.insert(e.catalog_id).second)
      throw DomainError("duplicate catalog id '" + e.catalog_id + "'");
    if (e.boundary_count < 1) throw DomainError("catalog entry needs at least one boundary");
    if (e.meridian_choices < 1 || e.meridian_choices > 3)
      throw DomainError("meridian choices must lie in 1..3");
    if (e.longitude_choices_per_boundary < 1)
      throw DomainError("longitude choices must be at least 1");
    if (parse_rational(e.volume) <= 0)
      throw DomainError("catalog volume must be positive");
  }
}

const CatalogEntry* HyperbolicCatalog::find(const std::string& id) const {
  for (const CatalogEntry& e : entries_)
    if (e.catalog_id == id) return &e;
  return nullptr;
}

namespace {

long gcd_abs(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

std::size_t expected_children(const NodeKind& kind, const HyperbolicCatalog& cat) {
  if (const auto* kc = std::get_if<KeyChainData>(&kind)) return kc->r;
  if (std::get_if<TorusKnotData>(&kind)) return 0;
  if (std::get_if<CableData>(&kind)) return 1;
  const auto& h = std::get<HyperbolicData>(kind);
  const CatalogEntry* e = cat.find(h.catalog_id);
  if (!e) throw DomainError("unresolved catalog id '" + h.catalog_id + "'");
  std::size_t taken = h.filled.size();
  std::size_t open = e->boundary_count - 1;
  return taken >= open ? 0 : open - taken;
}

}  // namespace

std::vector<Diagnostic> validate_tree(const DecoratedTree& t, const HyperbolicCatalog& cat) {
  std::vector<Diagnostic> out;
  if (t.empty()) {
    if (!t.nodes.empty() || !t.edges.empty())
      out.push_back({"tree", "empty tree must have no nodes or edges"});
    return out;
  }

  std::set<std::string> ids;
  for (const TreeNode& n : t.nodes)
    if (!ids.insert(n.id).second) out.push_back({n.id, "duplicate node id"});
  if (!ids.count(*t.root)) {
    out.push_back({*t.root, "root is not a node"});
    return out;
  }

  // Parent uniqueness and referential integrity.
  std::map<std::string, std::size_t> parent_count;
  for (const TreeEdge& e : t.edges) {
    if (!ids.count(e.parent)) out.push_back({e.parent, "edge from unknown node"});
    if (!ids.count(e.child)) out.push_back({e.child, "edge to unknown node"});
    if (ids.count(e.child) && ++parent_count[e.child] > 1)
      out.push_back({e.child, "node has more than one parent"});
  }
  if (parent_count.count(*t.root)) out.push_back({*t.root, "root has a parent"});
  if (!out.empty()) return out;

  // Reachability: connected single-rooted acyclic structure.
  std::set<std::string> reached{*t.root};
  std::vector<std::string> frontier{*t.root};
  while (!frontier.empty()) {
    std::string id = frontier.back();
    frontier.pop_back();
    for (const TreeEdge* e : t.children_of(id))
      if (reached.insert(e->child).second) frontier.push_back(e->child);
  }
  if (reached.size() != t.nodes.size()) {
    out.push_back({"tree", "not connected: some nodes unreachable from the root"});
    return out;
  }

  for (const TreeNode& n : t.nodes) {
    auto children = t.children_of(n.id);
    if (const auto* kc = std::get_if<KeyChainData>(&n.kind)) {
      if (kc->r < 2) out.push_back({n.id, "key-chain requires r > 1"});
      for (const TreeEdge* e : children)
        if (std::holds_alternative<KeyChainData>(t.node(e->child).kind))
          out.push_back({e->child, "key-chain vertex has a key-chain child"});
    } else if (const auto* tk = std::get_if<TorusKnotData>(&n.kind)) {
      long pa = tk->p < 0 ? -tk->p : tk->p;
      if (tk->q < 2 || pa <= tk->q || gcd_abs(tk->p, tk->q) != 1)
        out.push_back({n.id, "torus knot requires coprime |p| > q >= 2"});
    } else if (const auto* cb = std::get_if<CableData>(&n.kind)) {
      if (cb->p == 0 || cb->q <= 1 || gcd_abs(cb->p, cb->q) != 1)
        out.push_back({n.id, "cable requires p != 0, q > 1, gcd(|p|,q) = 1"});
    } else {
      const auto& h = std::get<HyperbolicData>(n.kind);
      const CatalogEntry* entry = cat.find(h.catalog_id);
      if (!entry) {
        out.push_back({n.id, "unresolved catalog id '" + h.catalog_id + "'"});
        continue;
      }
      if (h.meridian_choice >= entry->meridian_choices)
        out.push_back({n.id, "meridian choice out of range"});
      std::set<unsigned> slots;
      for (const FilledSlot& f : h.filled) {
        if (f.slot < 1 || f.slot >= entry->boundary_count)
          out.push_back({n.id, "filled slot out of range"});
        else if (!slots.insert(f.slot).second)
          out.push_back({n.id, "filled slot repeated"});
        if (f.longitude >= entry->longitude_choices_per_boundary)
          out.push_back({n.id, "filled longitude choice out of range"});
      }
      for (const TreeEdge* e : children) {
        if (e->slot < 1 || e->slot >= entry->boundary_count)
          out.push_back({e->child, "child slot out of range"});
        else if (!slots.insert(e->slot).second)
          out.push_back({e->child, "child slot already taken"});
        if (e->longitude >= entry->longitude_choices_per_boundary)
          out.push_back({e->child, "longitude choice out of range"});
      }
    }

    std::size_t want;
    try {
      want = expected_children(n.kind, cat);
    } catch (const DomainError&) {
      continue;  // already diagnosed above
    }
    if (children.size() != want) {
      const char* what = std::holds_alternative<KeyChainData>(n.kind)    ? "key-chain"
                         : std::holds_alternative<TorusKnotData>(n.kind) ? "torus knot"
                         : std::holds_alternative<CableData>(n.kind)     ? "cable"
                                                                         : "hyperbolic node";
      out.push_back({n.id, std::string(what) + " requires exactly " + std::to_string(want) +
                               " children, has " + std::to_string(children.size())});
    }
  }
  return out;
}

namespace {

void require_valid_tree(const DecoratedTree& t, const HyperbolicCatalog& cat) {
  std::vector<Diagnostic> d = validate_tree(t, cat);
  if (!d.empty()) throw DomainError("invalid tree: " + d.front().subject + ": " + d.front().message);
}

std::string encode(const DecoratedTree& t, const std::string& id) {
  const TreeNode& n = t.node(id);
  auto children = t.children_of(id);
  if (const auto* kc = std::get_if<KeyChainData>(&n.kind)) {
    std::vector<std::string> encs;
    for (const TreeEdge* e : children) encs.push_back(encode(t, e->child));
    std::sort(encs.begin(), encs.end());
    std::string out = "K(" + std::to_string(kc->r) + "){";
    for (std::size_t i = 0; i < encs.size(); ++i) out += (i ? "," : "") + encs[i];
    return out + "}";
  }
  if (const auto* tk = std::get_if<TorusKnotData>(&n.kind))
    return "T(" + std::to_string(tk->p) + "," + std::to_string(tk->q) + ")";
  if (const auto* cb = std::get_if<CableData>(&n.kind))
    return "C(" + std::to_string(cb->p) + "," + std::to_string(cb->q) + ")[" +
           encode(t, children.at(0)->child) + "]";
  const auto& h = std::get<HyperbolicData>(n.kind);
  std::vector<FilledSlot> filled = h.filled;
  std::sort(filled.begin(), filled.end(),
            [](const FilledSlot& a, const FilledSlot& b) { return a.slot < b.slot; });
  std::string out = "H(" + h.catalog_id + ";mu=" + std::to_string(h.meridian_choice);
  for (const FilledSlot& f : filled)
    out += ";f" + std::to_string(f.slot) + ":" + std::to_string(f.longitude);
  out += ")[";
  std::sort(children.begin(), children.end(),
            [](const TreeEdge* a, const TreeEdge* b) { return a->slot < b->slot; });
  for (std::size_t i = 0; i < children.size(); ++i)
    out += (i ? "," : "") + std::to_string(children[i]->slot) + ":" +
           std::to_string(children[i]->longitude) + ":" + encode(t, children[i]->child);
  return out + "]";
}

}  // namespace

std::string canonical_form(const DecoratedTree& t) {
  if (t.empty()) return "unknot";
  return encode(t, *t.root);
}

EnumBounds EnumBounds::from_rank(unsigned n, long max_abs_p, long max_q, unsigned long max_r) {
  if (n < 1) throw DomainError("rank must be at least 1");
  return EnumBounds{static_cast<std::size_t>(4ul * n - 3ul), max_abs_p, max_q, max_r};
}

namespace {

// Enumeration works on an un-identified recursive form first; materialized
// trees get breadth-first ids at the end.
struct Proto {
  NodeKind kind;
  std::vector<Proto> children;
  std::vector<unsigned> slots;       // parallel to children (hyperbolic only)
  std::vector<unsigned> longitudes;  // parallel to children (hyperbolic only)
};

void materialize(const Proto& p, DecoratedTree& t, const std::string& parent,
                 unsigned slot, unsigned longitude, std::size_t& counter) {
  std::string id = "n" + std::to_string(counter++);
  t.nodes.push_back(TreeNode{id, p.kind});
  if (parent.empty())
    t.root = id;
  else
    t.edges.push_back(TreeEdge{parent, id, slot, longitude});
  for (std::size_t i = 0; i < p.children.size(); ++i)
    materialize(p.children[i], t, id, p.slots.empty() ? 0 : p.slots[i],
                p.longitudes.empty() ? 0 : p.longitudes[i], counter);
}

DecoratedTree materialize(const Proto& p) {
  DecoratedTree t;
  std::size_t counter = 0;
  materialize(p, t, "", 0, 0, counter);
  return t;
}

struct Enumerator {
  const EnumBounds& bounds;
  const HyperbolicCatalog& cat;
  // memo[size] = all protos with exactly `size` vertices (key-chain roots
  // included; callers filter).
  std::map<std::size_t, std::vector<Proto>> memo;

  std::vector<std::pair<long, long>> torus_params() const {
    std::vector<std::pair<long, long>> out;
    for (long q = 2; q <= bounds.max_q; ++q)
      for (long pa = q + 1; pa <= bounds.max_abs_p; ++pa)
        if (std::gcd(pa, q) == 1) {
          out.push_back({pa, q});
          out.push_back({-pa, q});
        }
    return out;
  }

  std::vector<std::pair<long, long>> cable_params() const {
    std::vector<std::pair<long, long>> out;
    for (long q = 2; q <= bounds.max_q; ++q)
      for (long pa = 1; pa <= bounds.max_abs_p; ++pa)
        if (std::gcd(pa, q) == 1) {
          out.push_back({pa, q});
          out.push_back({-pa, q});
        }
    return out;
  }

  // Ordered size compositions of `total` into `parts` summands >= 1.
  static void compositions(std::size_t total, std::size_t parts,
                           std::vector<std::size_t>& acc,
                           std::vector<std::vector<std::size_t>>& out) {
    if (parts == 1) {
      acc.push_back(total);
      out.push_back(acc);
      acc.pop_back();
      return;
    }
    for (std::size_t first = 1; first + (parts - 1) <= total; ++first) {
      acc.push_back(first);
      compositions(total - first, parts - 1, acc, out);
      acc.pop_back();
    }
  }

  const std::vector<Proto>& all_of_size(std::size_t n) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<Proto> out;

    if (n == 1) {
      for (auto [p, q] : torus_params()) out.push_back(Proto{TorusKnotData{p, q}, {}, {}, {}});
      for (const CatalogEntry& e : cat.entries())
        if (e.boundary_count == 1)
          for (unsigned mu = 0; mu < e.meridian_choices; ++mu)
            out.push_back(Proto{HyperbolicData{e.catalog_id, mu, {}}, {}, {}, {}});
    } else {
      // Cable roots.
      for (auto [p, q] : cable_params())
        for (const Proto& child : all_of_size(n - 1)) {
          out.push_back(Proto{CableData{p, q}, {child}, {0}, {0}});
        }

      // Key-chain roots: unordered multisets of non-key-chain subtrees.
      for (unsigned long r = 2; r <= bounds.max_r && r <= n - 1; ++r) {
        std::vector<const Proto*> pool;
        std::vector<std::size_t> pool_sizes;
        for (std::size_t s = 1; s + (r - 1) <= n - 1; ++s)
          for (const Proto& cand : all_of_size(s))
            if (!std::holds_alternative<KeyChainData>(cand.kind)) {
              pool.push_back(&cand);
              pool_sizes.push_back(s);
            }
        std::vector<const Proto*> pick;
        multiset_pick(pool, pool_sizes, 0, r, n - 1, pick, out);
      }

      // Hyperbolic roots: children in fixed slot order.
      for (const CatalogEntry& e : cat.entries()) {
        if (e.boundary_count < 2) continue;
        std::size_t r = e.boundary_count - 1;
        if (n - 1 < r) continue;
        std::vector<std::vector<std::size_t>> comps;
        std::vector<std::size_t> acc;
        compositions(n - 1, r, acc, comps);
        for (const auto& comp : comps) {
          std::vector<std::vector<const Proto*>> choices(r);
          bool feasible = true;
          for (std::size_t i = 0; i < r && feasible; ++i) {
            for (const Proto& cand : all_of_size(comp[i])) choices[i].push_back(&cand);
            feasible = !choices[i].empty();
          }
          if (!feasible) continue;
          std::vector<const Proto*> pick(r, nullptr);
          hyperbolic_assign(e, choices, 0, pick, out);
        }
      }
    }

    return memo.emplace(n, std::move(out)).first->second;
  }

  void multiset_pick(const std::vector<const Proto*>& pool,
                     const std::vector<std::size_t>& pool_sizes, std::size_t start,
                     unsigned long remaining, std::size_t budget,
                     std::vector<const Proto*>& pick, std::vector<Proto>& out) {
    if (remaining == 0) {
      if (budget != 0) return;
      Proto p{KeyChainData{pick.size()}, {}, {}, {}};
      for (const Proto* c : pick) {
        p.children.push_back(*c);
        p.slots.push_back(0);
        p.longitudes.push_back(0);
      }
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      if (pool_sizes[i] + (remaining - 1) > budget) continue;
      pick.push_back(pool[i]);
      multiset_pick(pool, pool_sizes, i, remaining - 1, budget - pool_sizes[i], pick, out);
      pick.pop_back();
    }
  }

  void hyperbolic_assign(const CatalogEntry& e,
                         const std::vector<std::vector<const Proto*>>& choices, std::size_t at,
                         std::vector<const Proto*>& pick, std::vector<Proto>& out) {
    if (at == choices.size()) {
      // All meridian and per-child longitude choices multiply out.
      std::vector<unsigned> lons(choices.size(), 0);
      for (;;) {
        for (unsigned mu = 0; mu < e.meridian_choices; ++mu) {
          Proto p{HyperbolicData{e.catalog_id, mu, {}}, {}, {}, {}};
          for (std::size_t i = 0; i < pick.size(); ++i) {
            p.children.push_back(*pick[i]);
            p.slots.push_back(static_cast<unsigned>(i + 1));
            p.longitudes.push_back(lons[i]);
          }
          out.push_back(std::move(p));
        }
        std::size_t j = 0;
        while (j < lons.size() && ++lons[j] == e.longitude_choices_per_boundary) {
          lons[j] = 0;
          ++j;
        }
        if (j == lons.size()) break;
      }
      return;
    }
    for (const Proto* c : choices[at]) {
      pick[at] = c;
      hyperbolic_assign(e, choices, at + 1, pick, out);
    }
  }
};

}  // namespace

std::vector<DecoratedTree> enumerate_trees(const EnumBounds& bounds,
                                           const HyperbolicCatalog& cat) {
  Enumerator en{bounds, cat, {}};
  std::map<std::string, DecoratedTree> by_form;
  for (std::size_t n = 1; n <= bounds.max_vertices; ++n)
    for (const Proto& p : en.all_of_size(n)) {
      DecoratedTree t = materialize(p);
      require_valid_tree(t, cat);
      by_form.emplace(canonical_form(t), std::move(t));
    }
  std::vector<DecoratedTree> out;
  out.reserve(by_form.size());
  for (auto& [form, tree] : by_form) out.push_back(std::move(tree));
  return out;
}

namespace {

// Normalized torus-knot data from cable parameters, or nothing for the
// unknot (|p| = 1).
std::optional<TorusKnotData> torus_from_cable(const CableData& c) {
  long pa = c.p < 0 ? -c.p : c.p;
  int sign = c.p < 0 ? -1 : 1;
  if (pa == 1) return std::nullopt;
  if (pa > c.q) return TorusKnotData{c.p, c.q};
  return TorusKnotData{sign * c.q, pa};  // (p,q) ~ (q,p), sign rides along
}

void collect_subtree(const DecoratedTree& t, const std::string& id, std::set<std::string>& out) {
  out.insert(id);
  for (const TreeEdge* e : t.children_of(id)) collect_subtree(t, e->child, out);
}

DecoratedTree drop_nodes(const DecoratedTree& t, const std::set<std::string>& gone) {
  DecoratedTree out;
  out.root = t.root;
  for (const TreeNode& n : t.nodes)
    if (!gone.count(n.id)) out.nodes.push_back(n);
  for (const TreeEdge& e : t.edges)
    if (!gone.count(e.parent) && !gone.count(e.child)) out.edges.push_back(e);
  return out;
}

}  // namespace

DecoratedTree desatellite(const DecoratedTree& t, const std::string& child_id,
                          const HyperbolicCatalog& cat) {
  require_valid_tree(t, cat);
  const TreeEdge* edge = t.parent_edge_of(child_id);
  if (!edge) throw DomainError("node '" + child_id + "' has no parent edge to cut");
  const std::string parent_id = edge->parent;
  const unsigned slot = edge->slot, longitude = edge->longitude;

  std::set<std::string> gone;
  collect_subtree(t, child_id, gone);
  DecoratedTree out = drop_nodes(t, gone);

  TreeNode& parent = *std::find_if(out.nodes.begin(), out.nodes.end(),
                                   [&](const TreeNode& n) { return n.id == parent_id; });

  if (const auto* cb = std::get_if<CableData>(&parent.kind)) {
    std::optional<TorusKnotData> tk = torus_from_cable(*cb);
    if (!tk) {
      // The cable piece closes to an unknot complement; a trivial subtree
      // fills its own parent slot, which is one more de-satellitation.
      if (parent_id == *out.root) return DecoratedTree{};
      return desatellite(t, parent_id, cat);
    }
    parent.kind = *tk;
  } else if (const auto* kc = std::get_if<KeyChainData>(&parent.kind)) {
    if (kc->r - 1 >= 2) {
      parent.kind = KeyChainData{kc->r - 1};
    } else {
      // A 1-key-chain is no JSJ piece: splice the surviving child upward.
      auto remaining = out.children_of(parent_id);
      if (remaining.size() != 1)
        throw CertificateError("key-chain splice expected exactly one surviving child");
      std::string orphan = remaining.front()->child;
      const TreeEdge* up = out.parent_edge_of(parent_id);
      if (up) {
        TreeEdge lifted{up->parent, orphan, up->slot, up->longitude};
        out.edges.erase(std::remove_if(out.edges.begin(), out.edges.end(),
                                       [&](const TreeEdge& e) {
                                         return e.child == parent_id || e.parent == parent_id;
                                       }),
                        out.edges.end());
        out.edges.push_back(lifted);
      } else {
        out.root = orphan;
        out.edges.erase(std::remove_if(out.edges.begin(), out.edges.end(),
                                       [&](const TreeEdge& e) { return e.parent == parent_id; }),
                        out.edges.end());
      }
      out.nodes.erase(std::remove_if(out.nodes.begin(), out.nodes.end(),
                                     [&](const TreeNode& n) { return n.id == parent_id; }),
                      out.nodes.end());
    }
  } else if (auto* h = std::get_if<HyperbolicData>(&parent.kind)) {
    h->filled.push_back(FilledSlot{slot, longitude});
  } else {
    throw CertificateError("torus-knot vertex cannot have had a child");
  }

  require_valid_tree(out, cat);
  return out;
}

DecoratedTree graft(const DecoratedTree& t, const std::string& parent_id,
                    const DecoratedTree& subtree, const HyperbolicCatalog& cat,
                    unsigned slot, unsigned longitude) {
  if (subtree.empty()) throw DomainError("cannot graft the empty tree");
  std::set<std::string> ids;
  for (const TreeNode& n : t.nodes) ids.insert(n.id);
  for (const TreeNode& n : subtree.nodes)
    if (ids.count(n.id)) throw DomainError("node id collision on graft: '" + n.id + "'");

  const TreeNode& parent = t.node(parent_id);
  auto existing = t.children_of(parent_id);
  if (const auto* kc = std::get_if<KeyChainData>(&parent.kind)) {
    if (existing.size() >= kc->r) throw DomainError("key-chain arity overflow");
    if (std::holds_alternative<KeyChainData>(subtree.node(*subtree.root).kind))
      throw DomainError("key-chain vertex may not take a key-chain child");
  } else if (std::holds_alternative<TorusKnotData>(parent.kind)) {
    throw DomainError("torus-knot vertex takes no children");
  } else if (std::holds_alternative<CableData>(parent.kind)) {
    if (!existing.empty()) throw DomainError("cable arity overflow");
  } else {
    const auto& h = std::get<HyperbolicData>(parent.kind);
    const CatalogEntry* entry = cat.find(h.catalog_id);
    if (!entry) throw DomainError("unresolved catalog id '" + h.catalog_id + "'");
    if (slot < 1 || slot >= entry->boundary_count) throw DomainError("slot out of range");
    if (longitude >= entry->longitude_choices_per_boundary)
      throw DomainError("longitude choice out of range");
    for (const TreeEdge* e : existing)
      if (e->slot == slot) throw DomainError("slot already occupied");
    for (const FilledSlot& f : h.filled)
      if (f.slot == slot) throw DomainError("slot already filled");
  }

  DecoratedTree out = t;
  for (const TreeNode& n : subtree.nodes) out.nodes.push_back(n);
  for (const TreeEdge& e : subtree.edges) out.edges.push_back(e);
  out.edges.push_back(TreeEdge{parent_id, *subtree.root, slot, longitude});
  return out;
}

mpz_class winding_divisibility(const DecoratedTree& t, const std::string& node_id) {
  t.node(node_id);  // existence check
  mpz_class d = 1;
  std::string at = node_id;
  while (const TreeEdge* e = t.parent_edge_of(at)) {
    const TreeNode& parent = t.node(e->parent);
    if (const auto* cb = std::get_if<CableData>(&parent.kind)) d *= cb->q;
    at = e->parent;
  }
  return d;
}

PieceStats piece_stats(const DecoratedTree& t, const HyperbolicCatalog& cat, unsigned long plen,
                       std::optional<unsigned> rank, unsigned digits) {
  require_valid_tree(t, cat);
  PieceStats out;
  out.pieces = t.nodes.size();
  out.weidmann_rank =
      out.pieces == 0 ? 1u : static_cast<unsigned>((out.pieces + 3 + 3) / 4);  // ceil((p+3)/4)
  out.weidmann_ok = rank ? (out.pieces <= 4ul * *rank - 3ul) : true;

  out.volume_sum = 0;
  out.cable_q_cap = bound_constants(plen).t;
  for (const TreeNode& n : t.nodes) {
    if (const auto* h = std::get_if<HyperbolicData>(&n.kind))
      out.volume_sum += parse_rational(cat.find(h->catalog_id)->volume);
    if (const auto* cb = std::get_if<CableData>(&n.kind))
      if (mpz_class(cb->q) > out.cable_q_cap) out.cable_q_ok = false;
  }
  out.volume_ok = volume_budget_check(out.volume_sum, plen, Real::bits_for_digits(digits));
  return out;
}

}  // namespace knotcalc
