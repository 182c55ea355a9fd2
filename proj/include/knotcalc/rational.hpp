#pragma once

#include <gmpxx.h>

#include <string>

namespace knotcalc {

// Exact rational from "123", "-4.75" or "3/4" forms.
mpq_class parse_rational(const std::string& text);

// Plain decimal or a/b, whichever is exact and shorter.
std::string rational_to_string(const mpq_class& v);

}  // namespace knotcalc
