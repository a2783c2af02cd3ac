#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyinv/endo.hpp"

namespace polyinv {

// Grammar (whitespace-insensitive):
//
//   map     ::= '[' poly (',' poly)* ']' 'over' domain '[' ident (',' ident)* ']'
//   curve   ::= map with exactly one variable in the alphabet
//   domain  ::= 'QQ' | 'ZZ' | 'GF(' prime ')'
//   poly    ::= ['+'|'-'] term (('+'|'-') term)*
//   term    ::= factor (['*'|'/'] factor)*        (juxtaposition multiplies)
//   factor  ::= ['+'|'-'] atom ['^' integer]
//   atom    ::= integer | ident | '(' poly ')'
//
// Division is allowed only by nonzero constants that are units in the
// domain. U+2212 (minus sign) is accepted as '-'.

Domain parse_domain(std::string_view text);

/// Throws ParseError (with line, column and the expected tokens) on syntax
/// errors, unknown variables or a polynomial count that differs from the
/// number of variables.
PolyMap parse_map(std::string_view text);

/// A one-variable list of polynomials with zero constant terms; throws
/// CurveNotCentered otherwise.
Curve parse_curve(std::string_view text);

/// Like parse_curve, but the "over D[t]" suffix may be omitted: a bare
/// "[p_1, ..., p_n]" is read over `domain` in its single variable.
Curve parse_curve(std::string_view text, const Domain& domain);

Polynomial parse_polynomial(std::string_view text, const Domain& domain,
                            std::span<const std::string> names);

/// Comma-separated rationals, optionally wrapped in () or [].
std::vector<Coefficient> parse_point(std::string_view text, const Domain& domain);

/// "[p_1, ..., p_n] over D[x_1,...,x_n]"; parse_map(format_map(F)) == F.
std::string format_map(const PolyMap& f);
std::string format_curve(const Curve& g);
/// "(c_1, ..., c_n)"
std::string format_point(std::span<const Coefficient> point);

}  // namespace polyinv
