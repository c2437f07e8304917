#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace metabelian {

/// Exact rationals. GMP keeps every value canonical (gcd 1, positive
/// denominator) after arithmetic; `make_rational` canonicalizes explicit
/// numerator/denominator pairs.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);

/// Parses `a` or `a/b` with optional sign. Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

}  // namespace metabelian
