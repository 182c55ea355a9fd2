#pragma once

#include <json.hpp>

#include "knotcalc/handles.hpp"
#include "knotcalc/intmatrix.hpp"
#include "knotcalc/jsj.hpp"

namespace knotcalc {

using json = nlohmann::json;

// Matrices travel as {"rows": R, "cols": C, "entries": [...]} with entries
// given as numbers or decimal strings (strings carry arbitrary precision).
IntMatrix matrix_from_json(const json& j);
json matrix_to_json(const IntMatrix& m);

json smith_form_to_json(const SmithForm& s);
json solutions_to_json(const FundamentalSolutionSet& s);

HandleComplex handle_complex_from_json(const json& j);
json handle_complex_to_json(const HandleComplex& h);

HyperbolicCatalog catalog_from_json(const json& j);
json catalog_to_json(const HyperbolicCatalog& c);

DecoratedTree tree_from_json(const json& j);
json tree_to_json(const DecoratedTree& t);

// Strict parse with a ParseError instead of a nlohmann exception.
json parse_json(const std::string& text);

}  // namespace knotcalc
