#include "knotcalc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "knotcalc/bounds.hpp"
#include "knotcalc/errors.hpp"
#include "knotcalc/handles.hpp"
#include "knotcalc/intmatrix.hpp"
#include "knotcalc/json_io.hpp"
#include "knotcalc/jsj.hpp"
#include "knotcalc/lattice.hpp"
#include "knotcalc/presentation.hpp"
#include "knotcalc/rational.hpp"

namespace knotcalc::cli {

namespace {

struct Options {
  std::string format = "json";
  unsigned precision = 50;
  std::string catalog_file;
};

// Inline text, "-" for stdin, or a file path.
std::string load_input(const std::string& arg, std::istream& in, char inline_marker) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (!arg.empty() && arg[0] == inline_marker) return arg;
  std::ifstream f(arg);
  if (!f) throw ParseError("cannot open input file '" + arg + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

HyperbolicCatalog load_catalog(const Options& opt, std::istream& in) {
  if (opt.catalog_file.empty()) return HyperbolicCatalog{};
  return catalog_from_json(parse_json(load_input(opt.catalog_file, in, '{')));
}

void emit(const json& report, const Options& opt, std::ostream& out) {
  if (opt.format == "json") {
    out << report.dump() << "\n";
    return;
  }
  out << "command: " << report.at("command").get<std::string>() << "\n";
  if (report.contains("outputs")) out << "outputs:\n" << report.at("outputs").dump(2) << "\n";
  if (report.contains("diagnostics") && !report.at("diagnostics").empty())
    out << "diagnostics:\n" << report.at("diagnostics").dump(2) << "\n";
  if (report.contains("certificates"))
    for (const auto& c : report.at("certificates")) out << "certified: " << c.get<std::string>() << "\n";
}

json diagnostics_to_json(const std::vector<Diagnostic>& ds) {
  json out = json::array();
  for (const Diagnostic& d : ds) out.push_back(json{{"subject", d.subject}, {"message", d.message}});
  return out;
}

json presentation_to_json(const Presentation& p) {
  json lengths = json::array();
  for (const Word& r : p.relators()) lengths.push_back(r.length());
  json gens = json::array();
  for (const Generator& g : p.generators()) gens.push_back(g.name);
  return json{{"generators", gens},
              {"relator_lengths", lengths},
              {"length", presentation_length(p)},
              {"canonical", serialize_presentation(p)}};
}

int cmd_plen(const std::string& input, const Options& opt, std::ostream& out, std::istream& in) {
  Presentation p = parse_presentation(load_input(input, in, '<'));
  json report{{"command", "plen"},
              {"inputs", json{{"presentation", serialize_presentation(p)}}},
              {"outputs", presentation_to_json(p)},
              {"certificates", json::array()}};
  emit(report, opt, out);
  return kExitOk;
}

int cmd_triangulate(const std::string& input, const Options& opt, std::ostream& out,
                    std::istream& in) {
  Presentation p = parse_presentation(load_input(input, in, '<'));
  TriangularPresentation t = triangularize(p);

  // Abelianization is preserved: compare nontrivial invariant factors and
  // free rank on both sides.
  auto factors = [](const Presentation& q) {
    TorsionInfo info = torsion_orders(abelianization_matrix(q));
    json f = json::array();
    for (const mpz_class& d : info.orders) f.push_back(d.get_str());
    return std::pair{f, info.free_rank};
  };
  auto [before_f, before_rank] = factors(p);
  auto [after_f, after_rank] = factors(t.presentation());
  if (before_f != after_f || before_rank != after_rank)
    throw CertificateError("triangularization changed the abelianization");

  json report{{"command", "triangulate"},
              {"inputs", json{{"presentation", serialize_presentation(p)}, {"length", presentation_length(p)}}},
              {"outputs", presentation_to_json(t.presentation())},
              {"certificates",
               json::array({"presentation length preserved",
                            "abelianization invariant factors preserved"})}};
  emit(report, opt, out);
  return kExitOk;
}

int cmd_snf(const std::string& input, const Options& opt, std::ostream& out, std::istream& in) {
  IntMatrix a = matrix_from_json(parse_json(load_input(input, in, '{')));
  SmithForm s = smith_normal_form(a);
  TorsionInfo torsion = torsion_orders(a);
  json orders = json::array();
  for (const mpz_class& d : torsion.orders) orders.push_back(d.get_str());
  json outputs = smith_form_to_json(s);
  outputs["torsion_orders"] = orders;
  outputs["max_torsion_order"] = torsion.max_order.get_str();
  outputs["free_rank"] = torsion.free_rank;
  json report{{"command", "snf"},
              {"inputs", matrix_to_json(a)},
              {"outputs", outputs},
              {"certificates",
               json::array({"left*A*right = diag(d)", "left and right unimodular",
                            "divisibility chain d(i) | d(i+1)"})}};
  emit(report, opt, out);
  return kExitOk;
}

int cmd_kernel_basis(const std::string& input, const Options& opt, std::ostream& out,
                     std::istream& in) {
  IntMatrix a = matrix_from_json(parse_json(load_input(input, in, '{')));
  FundamentalSolutionSet s = bounded_kernel_basis(a);
  json outputs = solutions_to_json(s);
  outputs["rank"] = s.pivot_rows.size();
  outputs["column_condition"] = column_condition_holds(a);
  json certs = json::array({"A*u = 0 for all solutions", "solution count = cols - rank"});
  if (column_condition_holds(a)) {
    certs.push_back("entries bounded by 3^rank");
    certs.push_back("at most rank+1 nonzero entries per solution");
  }
  json report{{"command", "kernel-basis"},
              {"inputs", matrix_to_json(a)},
              {"outputs", outputs},
              {"certificates", certs}};
  emit(report, opt, out);
  return kExitOk;
}

int cmd_cycles(const std::string& input, const Options& opt, std::ostream& out, std::istream& in) {
  HandleComplex h = handle_complex_from_json(parse_json(load_input(input, in, '{')));
  std::vector<Diagnostic> ds = validate_handle_complex(h);
  if (!ds.empty()) {
    json report{{"command", "cycles"},
                {"inputs", handle_complex_to_json(h)},
                {"diagnostics", diagnostics_to_json(ds)}};
    emit(report, opt, out);
    return kExitInput;
  }
  std::vector<RelativeCycle> gens = bounded_cycle_generators(h);
  json jgens = json::array();
  for (const RelativeCycle& c : gens) {
    json coeffs = json::object();
    for (const auto& [id, v] : c.coefficients) coeffs[id] = v.get_str();
    jgens.push_back(json{{"coefficients", coeffs},
                         {"weighted_area", rational_to_string(weighted_area(c, h))}});
  }
  IntMatrix a = contribution_matrix(h);
  json report{{"command", "cycles"},
              {"inputs", handle_complex_to_json(h)},
              {"outputs",
               json{{"generators", jgens},
                    {"contribution_matrix", matrix_to_json(a)},
                    {"rank", rational_rank(a)}}},
              {"certificates",
               json::array({"every generator satisfies the cycle condition",
                            "coefficients bounded by 3^rank"})}};
  emit(report, opt, out);
  return kExitOk;
}

int cmd_zeta(const std::string& omega_arg, long m, long t, const Options& opt, std::ostream& out) {
  auto comma = omega_arg.find(',');
  if (comma == std::string::npos) throw ParseError("--omega expects 'A,B'");
  LatticeVector omega{mpz_class(omega_arg.substr(0, comma), 10),
                      mpz_class(omega_arg.substr(comma + 1), 10)};
  ZetaChoice z = find_zeta(omega, m, t);
  ExtendedLatticeElement omega_over_m(LatticeVector{0, 0}, omega, m, 1);
  mpz_class phi_frac = phi_zeta(omega_over_m, z);
  ExtendedLatticeElement omega_full(omega, omega, m, 0);
  mpz_class phi_omega = phi_zeta(omega_full, z);
  if (m * phi_frac != phi_omega)
    throw CertificateError("m * phi(omega/m) != phi(omega)");
  json report{
      {"command", "zeta"},
      {"inputs", json{{"omega", {omega.x.get_str(), omega.y.get_str()}}, {"m", m}, {"t", t}}},
      {"outputs",
       json{{"zeta", {z.zeta.x.get_str(), z.zeta.y.get_str()}},
            {"zeta_primitive", true},
            {"omega_plus_zeta_in_mZ", true},
            {"phi_of_omega_over_m", phi_frac.get_str()},
            {"phi_of_omega", phi_omega.get_str()}}},
      {"certificates",
       json::array({"zeta primitive", "omega + zeta in mZ + mZ",
                    "m * phi(omega/m) = phi(omega)"})}};
  emit(report, opt, out);
  return kExitOk;
}

int cmd_enum(std::size_t max_vertices, long max_p, long max_q, unsigned long max_r,
             const Options& opt, std::ostream& out, std::istream& in) {
  HyperbolicCatalog cat = load_catalog(opt, in);
  EnumBounds bounds{max_vertices, max_p, max_q, max_r};
  std::vector<DecoratedTree> trees = enumerate_trees(bounds, cat);
  json jtrees = json::array();
  for (const DecoratedTree& t : trees) {
    json jt = tree_to_json(t);
    jt["canonical"] = canonical_form(t);
    jtrees.push_back(std::move(jt));
  }
  json report{{"command", "enum-knots"},
              {"inputs",
               json{{"max_vertices", max_vertices},
                    {"max_p", max_p},
                    {"max_q", max_q},
                    {"max_r", max_r}}},
              {"outputs", json{{"count", trees.size()}, {"trees", jtrees}}},
              {"certificates", json::array({"all trees validate", "canonical forms distinct"})}};
  emit(report, opt, out);
  return kExitOk;
}

int cmd_desatellite(const std::string& input, const std::string& edge, const Options& opt,
                    std::ostream& out, std::istream& in) {
  HyperbolicCatalog cat = load_catalog(opt, in);
  DecoratedTree t = tree_from_json(parse_json(load_input(input, in, '{')));
  DecoratedTree result = desatellite(t, edge, cat);
  json jt = tree_to_json(result);
  jt["canonical"] = canonical_form(result);
  json report{{"command", "desatellite"},
              {"inputs", json{{"tree", tree_to_json(t)}, {"edge", edge}}},
              {"outputs", jt},
              {"certificates", json::array({"result validates"})}};
  emit(report, opt, out);
  return kExitOk;
}

int cmd_validate(const std::string& input, const Options& opt, std::ostream& out,
                 std::istream& in) {
  HyperbolicCatalog cat = load_catalog(opt, in);
  DecoratedTree t = tree_from_json(parse_json(load_input(input, in, '{')));
  std::vector<Diagnostic> ds = validate_tree(t, cat);
  json report{{"command", "validate"},
              {"inputs", tree_to_json(t)},
              {"outputs", json{{"valid", ds.empty()}}},
              {"diagnostics", diagnostics_to_json(ds)}};
  emit(report, opt, out);
  return ds.empty() ? kExitOk : kExitInput;
}

int cmd_winding(const std::string& input, const std::string& node, const Options& opt,
                std::ostream& out, std::istream& in) {
  HyperbolicCatalog cat = load_catalog(opt, in);
  DecoratedTree t = tree_from_json(parse_json(load_input(input, in, '{')));
  mpz_class d = winding_divisibility(t, node);

  // Per-edge factors along the path; hyperbolic edges carry the weakest
  // valid divisor and are flagged as such.
  json path = json::array();
  std::string at = node;
  while (const TreeEdge* e = t.parent_edge_of(at)) {
    const TreeNode& parent = t.node(e->parent);
    json step{{"parent", e->parent}, {"child", at}};
    if (const auto* cb = std::get_if<CableData>(&parent.kind)) {
      step["factor"] = cb->q;
      step["kind"] = "cable";
    } else if (std::holds_alternative<HyperbolicData>(parent.kind)) {
      step["factor"] = 1;
      step["kind"] = "hyperbolic";
      step["note"] = "winding across hyperbolic nodes is not pinned down; 1 is the weakest valid divisor";
    } else {
      step["factor"] = 1;
      step["kind"] = "keychain";
    }
    path.push_back(std::move(step));
    at = e->parent;
  }
  json report{{"command", "winding"},
              {"inputs", json{{"tree", tree_to_json(t)}, {"node", node}}},
              {"outputs", json{{"divisor", d.get_str()}, {"path", path}}},
              {"certificates", json::array()}};
  emit(report, opt, out);
  return kExitOk;
}

int cmd_bounds(unsigned long plen, const std::optional<std::string>& vol,
               const std::optional<std::string>& eps, const Options& opt, std::ostream& out) {
  BoundConstants bc = bound_constants(plen);
  GlobalBounds gb = global_bounds(plen, vol, eps, opt.precision);
  Real lstar = critical_geodesic_length(plen, opt.precision);
  mpz_class qstar = critical_cone_order(plen, opt.precision);
  int digits = static_cast<int>(opt.precision);

  json outputs{
      {"T", bc.t.get_str()},
      {"T_formula", "2*3^n"},
      {"A_over_pi", bc.a_over_pi.get_str()},
      {"A_formula", "27^n*(9n^2+4n)*pi"},
      {"critical_geodesic_length", lstar.str(digits)},
      {"critical_cone_order", qstar.get_str()},
      {"volume_bound", json{{"pi_coefficient", gb.volume_bound_pi_coeff.get_str()},
                            {"value", gb.volume_bound.str(digits)},
                            {"formula", "pi*plen"}}},
      {"tube_radius_max", json{{"value", gb.tube_r_max.str(digits)},
                               {"formula", "arcsinh(sqrt(27^n*(9n^2+4n)))"}}},
      {"cable_q_cutoff", bc.t.get_str()}};
  if (gb.degree_bound)
    outputs["degree_bound"] = json{{"value", gb.degree_bound->get_str()},
                                   {"formula", "floor(pi*plen/vol)"}};
  if (gb.diam_thick) {
    outputs["diam_thick"] = json{{"value", gb.diam_thick->str(digits)},
                                 {"formula", "2*pi*eps*plen/(pi*(sinh(eps)-eps))"}};
    outputs["diam_total"] = json{{"value", gb.diam_total->str(digits)},
                                 {"formula", "diam_thick + 2*(eps + 2*tube_radius_max)"}};
  }
  json inputs{{"plen", plen}, {"precision", opt.precision}};
  if (vol) inputs["vol"] = *vol;
  if (eps) inputs["eps"] = *eps;
  json report{{"command", "bounds"},
              {"inputs", inputs},
              {"outputs", outputs},
              {"certificates",
               json::array({"critical geodesic length bracket certified",
                            "critical cone order bracket certified"})}};
  emit(report, opt, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"exact calculator for presentation-length bounds and knot complement codes"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--precision", opt.precision, "working precision in decimal digits")
      ->check(CLI::Range(8u, 100000u));
  app.add_option("--catalog", opt.catalog_file, "hyperbolic catalog JSON file");

  std::string input, edge, node, omega;
  long m = 2, t = 0;
  std::size_t max_vertices = 1;
  long max_p = 3, max_q = 3;
  unsigned long max_r = 0;
  bool max_r_given = false;
  unsigned long plen = 0;
  std::string vol, eps;

  CLI::App* c_plen = app.add_subcommand("plen", "presentation length of a finite presentation");
  c_plen->add_option("presentation", input)->required();
  CLI::App* c_tri = app.add_subcommand("triangulate", "split relators to lengths 2 and 3");
  c_tri->add_option("presentation", input)->required();
  CLI::App* c_snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  c_snf->add_option("matrix", input)->required();
  CLI::App* c_ker = app.add_subcommand("kernel-basis", "bounded integral kernel basis");
  c_ker->add_option("matrix", input)->required();
  CLI::App* c_cyc = app.add_subcommand("cycles", "bounded relative-cycle generators");
  c_cyc->add_option("complex", input)->required();
  CLI::App* c_zeta = app.add_subcommand("zeta", "filling slope family for an extended lattice");
  c_zeta->add_option("--omega", omega, "primitive vector A,B")->required();
  c_zeta->add_option("--m", m, "denominator > 1")->required();
  c_zeta->add_option("--t", t, "family parameter");
  CLI::App* c_enum = app.add_subcommand("enum-knots", "decorated rooted JSJ trees within bounds");
  c_enum->add_option("--max-vertices", max_vertices)->required();
  c_enum->add_option("--max-p", max_p);
  c_enum->add_option("--max-q", max_q);
  c_enum->add_option("--max-r", max_r)->each([&](const std::string&) { max_r_given = true; });
  CLI::App* c_desat = app.add_subcommand("desatellite", "cut a child edge and rewrite the parent");
  c_desat->add_option("tree", input)->required();
  c_desat->add_option("--edge", edge, "child node id of the edge to cut")->required();
  CLI::App* c_val = app.add_subcommand("validate", "check a decorated tree");
  c_val->add_option("tree", input)->required();
  CLI::App* c_wind = app.add_subcommand("winding", "H1 divisibility of a subtree");
  c_wind->add_option("tree", input)->required();
  c_wind->add_option("--node", node)->required();
  CLI::App* c_bounds = app.add_subcommand("bounds", "closed-form hyperbolic bound report");
  c_bounds->add_option("--plen", plen, "presentation length")->required();
  c_bounds->add_option("--vol", vol, "hyperbolic volume (decimal)");
  c_bounds->add_option("--eps", eps, "Margulis constant to use (decimal)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*c_plen) return cmd_plen(input, opt, out, in);
    if (*c_tri) return cmd_triangulate(input, opt, out, in);
    if (*c_snf) return cmd_snf(input, opt, out, in);
    if (*c_ker) return cmd_kernel_basis(input, opt, out, in);
    if (*c_cyc) return cmd_cycles(input, opt, out, in);
    if (*c_zeta) return cmd_zeta(omega, m, t, opt, out);
    if (*c_enum)
      return cmd_enum(max_vertices, max_p, max_q, max_r_given ? max_r : max_vertices, opt, out, in);
    if (*c_desat) return cmd_desatellite(input, edge, opt, out, in);
    if (*c_val) return cmd_validate(input, opt, out, in);
    if (*c_wind) return cmd_winding(input, node, opt, out, in);
    if (*c_bounds)
      return cmd_bounds(plen, vol.empty() ? std::nullopt : std::optional(vol),
                        eps.empty() ? std::nullopt : std::optional(eps), opt, out);
    err << "usage error: no subcommand\n";
    return kExitUsage;
  } catch (const CertificateError& e) {
    err << "certificate violation: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace knotcalc::cli
