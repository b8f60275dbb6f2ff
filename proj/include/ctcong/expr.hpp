#ifndef CTCONG_EXPR_HPP
#define CTCONG_EXPR_HPP

#include <string>

#include "ctcong/laurent.hpp"

namespace ctcong {

/// Parse a Laurent-polynomial expression.  Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/')? factor)*        -- juxtaposition multiplies
///   factor := '-' factor | base ('^' exponent)?
///   base   := int | 'x' | '(' expr ')'
///   exponent := ['-'] digits | '(' ['-'] digits ')'
/// '^' binds tighter than unary minus, so -x^2 = -(x^2).  a/b*c = (a/b)*c.
/// Division requires a monomial divisor or an exact Laurent quotient.
/// Throws ParseError (kind "syntax") with position, or Error with kind
/// "division-by-zero" / "inexact-division".
LaurentPoly parse_laurent(const std::string& text);

/// Deterministic exponent-ascending rendering; reparses to the same value.
/// Examples: "0", "x^-1 + 2 + x", "x^-1 + 1 - 2*x^2".
std::string pretty_print(const LaurentPoly& f);

/// Render a single rational as in pretty_print terms ("5", "-1/3").
std::string pretty_print(const Rat& q);

} // namespace ctcong

#endif
