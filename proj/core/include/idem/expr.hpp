#pragma once

#include <string>

#include "idem/nf.hpp"

namespace idem {

// Parses the little expression language over the generators:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor | juxtaposed '(' expr ')')*
//   factor := '-' factor | power
//   power  := primary ('^' exponent)?       exponent: integer, or (-integer)
//   primary:= scalar | 'a' | 'b' | 'e' | 'sigma' | 'ab' | '(' expr ')'
//
// Scalars are integer or num/den literals. "ab" abbreviates a*b so printed
// normal forms re-parse. Negative exponents apply to scalar values only.
// Errors: SyntaxError (with offset), UnknownSymbol, BadScalar.
NFElem parse_expr(const std::string& text, const FieldDesc& f);

// Canonical rendering: the unit and sigma parts merge into one polynomial in
// sigma, then the a, b, ab coordinates with their (parenthesized when
// non-constant) coefficients. parse_expr(to_string(x)) == x.
std::string to_string(const NFElem& x);

}  // namespace idem
