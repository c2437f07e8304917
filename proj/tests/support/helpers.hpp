#pragma once

#include <string_view>

#include "metabelian/lie_expr.hpp"
#include "metabelian/parse.hpp"

namespace metabelian::testing {

inline LieElement lie(std::string_view text, std::size_t n) {
  return normal_form(parse_lie_expr(text, n), n);
}

inline Polynomial poly(std::string_view text, std::size_t n) { return parse_polynomial(text, n); }

inline WreathElement wreath(std::string_view text, std::size_t n) { return parse_wreath(text, n); }

}  // namespace metabelian::testing
