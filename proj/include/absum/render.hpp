#pragma once

#include <string>

#include "absum/expansion.hpp"
#include "absum/fitter.hpp"

namespace absum {

// Bit-exact wire format: {"spec":{"s":..,"t":..,"k":..,"beta":..},
// "terms":[{"kind":"...","numerator":["p/q",...],"denom_offsets":[1,3,...]}]}.
// Parsing accepts exactly what serialization produces.
std::string closed_form_to_json(const ClosedForm& form);
ClosedForm closed_form_from_json(const std::string& text);

// Display form. The default rewrites central4n terms into shifted-binomial
// style, e.g. 4n^2(5n-2)/(4n-1) * C(4n-1,2n-1); canonical keeps the
// four-basis representation. Both are exact.
std::string emit_latex(const ClosedForm& form, bool canonical = false);

std::string expansion_to_json(const ExpansionTable& table);
std::string expansion_to_latex(const ExpansionTable& table);

// "531n^5-1960n^4+..." with rational coefficients allowed; used by the
// expansion printer and the term renderer.
std::string poly_to_latex(const Poly& p);

}  // namespace absum
