#pragma once

#include <cstddef>
#include <string_view>

#include "metabelian/lie_expr.hpp"
#include "metabelian/polynomial.hpp"
#include "metabelian/wreath.hpp"

namespace metabelian {

/// Terms joined by `+`/`-`; a term is `*`-separated factors: integers,
/// rationals `p/q`, variables `x<k>` with optional `^<e>`, or parenthesized
/// sub-expressions. Example: `3/2*x1^2*x2 - x3`.
///
/// Throws ParseError (with byte offset) on malformed text and RankError
/// when a variable index exceeds `nvars`.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars);

/// Lie expressions: atoms `x<k>`, left-normed brackets `[a,b,...,c]` whose
/// operands are full expressions, `+`/`-`, rational scalars joined by `*`,
/// and postfix `ad(p)` for a polynomial p. Example: `[x2,x1,x2] - [x2,x1,x1]`.
/// Generator ranges are checked later by normal_form.
LieExpr parse_lie_expr(std::string_view text, std::size_t n);

/// Wreath elements: sums of products in which exactly one factor is a
/// `u<k>` or `v<k>` (or a parenthesized wreath sum) and the others are
/// polynomial factors. Accepts `u1*(x2) - u2*(x1) + 3*v1` as well as
/// Koszul forms such as `(u1*x2 - u2*x1)*(x1 - x2)`. v-terms take only
/// rational coefficients.
WreathElement parse_wreath(std::string_view text, std::size_t n);

}  // namespace metabelian
