#include "metabelian/rational.hpp"

#include <cctype>

#include "metabelian/errors.hpp"

namespace metabelian {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw DomainError("rational with zero denominator");
  }
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

namespace {

Integer parse_integer(std::string_view digits, std::size_t offset) {
  if (digits.empty()) {
    throw ParseError("expected digits", offset);
  }
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw ParseError("unexpected character in number", offset + i);
    }
  }
  return Integer(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  bool negative = false;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const auto slash = text.find('/', pos);
  Integer num = parse_integer(text.substr(pos, slash - pos), pos);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1), slash + 1);
    if (den == 0) {
      throw ParseError("zero denominator", slash + 1);
    }
  }
  Rational q(num, den);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace metabelian
