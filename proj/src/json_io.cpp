#include "knotcalc/json_io.hpp"

#include "knotcalc/errors.hpp"
#include "knotcalc/rational.hpp"

namespace knotcalc {

namespace {

mpz_class mpz_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
      throw ParseError("not an integer literal: '" + j.get<std::string>() + "'");
    }
  }
  throw ParseError("expected an integer (number or string)");
}

// Arbitrary-precision values always travel as decimal strings.
json mpz_to_json(const mpz_class& v) { return json(v.get_str()); }

mpq_class mpq_from_json(const json& j) {
  if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational (integer or string like '3/4' or '0.75')");
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON input");
  return j;
}

IntMatrix matrix_from_json(const json& j) {
  std::size_t rows = field(j, "rows").get<std::size_t>();
  std::size_t cols = field(j, "cols").get<std::size_t>();
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows * cols)
    throw ParseError("entries must be an array of rows*cols integers");
  std::vector<mpz_class> flat;
  flat.reserve(entries.size());
  for (const json& e : entries) flat.push_back(mpz_from_json(e));
  return IntMatrix(rows, cols, std::move(flat));
}

json matrix_to_json(const IntMatrix& m) {
  json entries = json::array();
  for (const mpz_class& e : m.entries()) entries.push_back(mpz_to_json(e));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json smith_form_to_json(const SmithForm& s) {
  json d = json::array();
  for (const mpz_class& v : s.d) d.push_back(mpz_to_json(v));
  return json{{"invariant_factors", d},
              {"rank", s.d.size()},
              {"left", matrix_to_json(s.left)},
              {"right", matrix_to_json(s.right)}};
}

json solutions_to_json(const FundamentalSolutionSet& s) {
  json sols = json::array();
  for (const auto& u : s.solutions) {
    json v = json::array();
    for (const mpz_class& e : u) v.push_back(mpz_to_json(e));
    sols.push_back(v);
  }
  return json{{"solutions", sols},
              {"pivot_rows", s.pivot_rows},
              {"pivot_columns", s.pivot_columns},
              {"det_P", mpz_to_json(s.det_p)}};
}

HandleComplex handle_complex_from_json(const json& j) {
  std::vector<HandleCell> cells;
  for (const json& c : field(j, "cells")) {
    HandleCell cell;
    cell.id = field(c, "id").get<std::string>();
    cell.kind = handle_kind_from_name(field(c, "kind").get<std::string>());
    if (c.contains("area"))
      cell.area = mpq_from_json(c["area"]);
    else
      cell.area = cell.kind == HandleKind::MonkeyHandle ? 1 : 0;
    cells.push_back(std::move(cell));
  }
  std::vector<std::string> fibers;
  for (const json& f : field(j, "fibers")) fibers.push_back(f.get<std::string>());
  HandleComplex h(std::move(cells), std::move(fibers));
  if (j.contains("contributions"))
    for (const json& c : j["contributions"])
      h.set_contribution(field(c, "cell").get<std::string>(),
                         field(c, "fiber").get<std::string>(),
                         field(c, "value").get<long>());
  return h;
}

json handle_complex_to_json(const HandleComplex& h) {
  json cells = json::array();
  for (const HandleCell& c : h.cells())
    cells.push_back(json{{"id", c.id},
                         {"kind", handle_kind_name(c.kind)},
                         {"area", rational_to_string(c.area)}});
  json contribs = json::array();
  for (std::size_t ci = 0; ci < h.cells().size(); ++ci)
    for (std::size_t fi = 0; fi < h.fiber_classes().size(); ++fi)
      if (long v = h.contribution(ci, fi); v != 0)
        contribs.push_back(json{{"cell", h.cells()[ci].id},
                                {"fiber", h.fiber_classes()[fi]},
                                {"value", v}});
  return json{{"cells", cells}, {"fibers", h.fiber_classes()}, {"contributions", contribs}};
}

HyperbolicCatalog catalog_from_json(const json& j) {
  std::vector<CatalogEntry> entries;
  for (const json& e : field(j, "entries")) {
    CatalogEntry entry;
    entry.catalog_id = field(e, "catalog_id").get<std::string>();
    entry.boundary_count = field(e, "boundary_count").get<unsigned>();
    const json& vol = field(e, "volume");
    entry.volume = vol.is_string() ? vol.get<std::string>() : vol.dump();
    entry.meridian_choices = e.value("meridian_choices", 1u);
    entry.longitude_choices_per_boundary = e.value("longitude_choices_per_boundary", 1u);
    entries.push_back(std::move(entry));
  }
  return HyperbolicCatalog(std::move(entries));
}

json catalog_to_json(const HyperbolicCatalog& c) {
  json entries = json::array();
  for (const CatalogEntry& e : c.entries())
    entries.push_back(json{{"catalog_id", e.catalog_id},
                           {"boundary_count", e.boundary_count},
                           {"volume", e.volume},
                           {"meridian_choices", e.meridian_choices},
                           {"longitude_choices_per_boundary", e.longitude_choices_per_boundary}});
  return json{{"entries", entries}};
}

namespace {

NodeKind kind_from_json(const json& n) {
  std::string kind = field(n, "kind").get<std::string>();
  const json& p = field(n, "params");
  if (kind == "keychain") return KeyChainData{field(p, "r").get<unsigned long>()};
  if (kind == "torus-knot") return TorusKnotData{field(p, "p").get<long>(), field(p, "q").get<long>()};
  if (kind == "cable") return CableData{field(p, "p").get<long>(), field(p, "q").get<long>()};
  if (kind == "hyperbolic") {
    HyperbolicData h;
    h.catalog_id = field(p, "catalog_id").get<std::string>();
    h.meridian_choice = p.value("meridian_choice", 0u);
    if (p.contains("filled"))
      for (const json& f : p["filled"])
        h.filled.push_back(FilledSlot{field(f, "slot").get<unsigned>(),
                                      f.value("longitude", 0u)});
    return h;
  }
  throw ParseError("unknown node kind '" + kind + "'");
}

json kind_to_json(const NodeKind& k) {
  if (const auto* kc = std::get_if<KeyChainData>(&k))
    return json{{"kind", "keychain"}, {"params", {{"r", kc->r}}}};
  if (const auto* tk = std::get_if<TorusKnotData>(&k))
    return json{{"kind", "torus-knot"}, {"params", {{"p", tk->p}, {"q", tk->q}}}};
  if (const auto* cb = std::get_if<CableData>(&k))
    return json{{"kind", "cable"}, {"params", {{"p", cb->p}, {"q", cb->q}}}};
  const auto& h = std::get<HyperbolicData>(k);
  json filled = json::array();
  for (const FilledSlot& f : h.filled)
    filled.push_back(json{{"slot", f.slot}, {"longitude", f.longitude}});
  return json{{"kind", "hyperbolic"},
              {"params",
               {{"catalog_id", h.catalog_id},
                {"meridian_choice", h.meridian_choice},
                {"filled", filled}}}};
}

}  // namespace

DecoratedTree tree_from_json(const json& j) {
  DecoratedTree t;
  const json& root = field(j, "root");
  if (!root.is_null()) t.root = root.get<std::string>();
  for (const json& n : field(j, "nodes")) {
    TreeNode node{field(n, "id").get<std::string>(), kind_from_json(n)};
    t.nodes.push_back(std::move(node));
  }
  if (j.contains("edges"))
    for (const json& e : j["edges"])
      t.edges.push_back(TreeEdge{field(e, "parent").get<std::string>(),
                                 field(e, "child").get<std::string>(),
                                 e.value("slot", 0u), e.value("longitude", 0u)});
  return t;
}

json tree_to_json(const DecoratedTree& t) {
  json nodes = json::array();
  for (const TreeNode& n : t.nodes) {
    json jn = kind_to_json(n.kind);
    jn["id"] = n.id;
    nodes.push_back(std::move(jn));
  }
  json edges = json::array();
  for (const TreeEdge& e : t.edges)
    edges.push_back(json{{"parent", e.parent},
                         {"child", e.child},
                         {"slot", e.slot},
                         {"longitude", e.longitude}});
  json out{{"nodes", nodes}, {"edges", edges}};
  out["root"] = t.root ? json(*t.root) : json(nullptr);
  return out;
}

}  // namespace knotcalc
