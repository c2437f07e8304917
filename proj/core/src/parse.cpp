#include "metabelian/parse.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "metabelian/errors.hpp"

namespace metabelian {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t position() const noexcept { return pos_; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool peek_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    return after >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[after]));
  }
  void advance(std::size_t k) { pos_ += k; }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t index() {
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 6) throw ParseError("index too large", at);
    return std::stoul(d);
  }
  /// Unsigned integer or p/q.
  Rational rational() {
    const std::size_t at = pos_;
    Integer num(digits());
    Integer den = 1;
    if (accept('/')) {
      den = Integer(digits());
      if (den == 0) throw ParseError("zero denominator", at);
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  [[noreturn]] void fail(const std::string& message) {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(message + ", found end of input", pos_);
    throw ParseError(message + ", found '" + std::string(1, text_[pos_]) + "'", pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class PolynomialGrammar {
 public:
  PolynomialGrammar(Cursor& in, std::size_t nvars) : in_(in), nvars_(nvars) {}

  Polynomial sum() {
    Polynomial acc(nvars_);
    bool negate = false;
    if (in_.accept('-')) {
      negate = true;
    } else {
      in_.accept('+');
    }
    for (;;) {
      Polynomial t = product();
      if (negate) acc -= t;
      else acc += t;
      if (in_.accept('+')) negate = false;
      else if (in_.accept('-')) negate = true;
      else return acc;
    }
  }

  Polynomial product() {
    Polynomial acc = power();
    while (in_.accept('*')) acc *= power();
    return acc;
  }

 private:
  Polynomial power() {
    Polynomial base = atom();
    if (in_.accept('^')) {
      const std::size_t at = in_.position();
      const std::size_t e = in_.index();
      if (e > 1000) throw ParseError("exponent too large", at);
      base = pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    if (in_.peek_digit()) return Polynomial::constant(nvars_, in_.rational());
    if (in_.accept('(')) {
      Polynomial inner = sum();
      in_.expect(')');
      return inner;
    }
    if (in_.peek() == 'x') {
      in_.advance(1);
      const std::size_t at = in_.position();
      const std::size_t k = in_.index();
      if (k < 1 || k > nvars_) {
        throw RankError("variable x" + std::to_string(k) + " at position " +
                        std::to_string(at) + " outside 1.." + std::to_string(nvars_));
      }
      return Polynomial::variable(nvars_, k);
    }
    in_.fail("expected a number, variable or '('");
  }

  Cursor& in_;
  std::size_t nvars_;
};

class LieGrammar {
 public:
  LieGrammar(Cursor& in, std::size_t n) : in_(in), n_(n) {}

  LieExpr sum() {
    std::vector<LieExpr> terms;
    bool negate = false;
    if (in_.accept('-')) {
      negate = true;
    } else {
      in_.accept('+');
    }
    for (;;) {
      LieExpr t = product();
      terms.push_back(negate ? LieExpr::scaled(-1, t) : t);
      if (in_.accept('+')) negate = false;
      else if (in_.accept('-')) negate = true;
      else break;
    }
    return terms.size() == 1 ? terms.front() : LieExpr::sum(std::move(terms));
  }

 private:
  LieExpr product() {
    const std::size_t start = in_.position();
    Rational scalar = 1;
    std::optional<LieExpr> lie;
    do {
      if (in_.peek_digit()) {
        scalar *= in_.rational();
      } else if (in_.peek_word("ad")) {
        if (!lie) in_.fail("ad(...) needs a Lie operand on its left");
        lie = ad_suffix(*lie);
      } else {
        const std::size_t at = in_.position();
        LieExpr factor = postfix();
        if (lie) throw ParseError("product of two Lie elements; use a bracket", at);
        lie = std::move(factor);
      }
    } while (in_.accept('*'));
    if (!lie) throw ParseError("a Lie algebra has no constant terms", start);
    return scalar == 1 ? *lie : LieExpr::scaled(scalar, *lie);
  }

  LieExpr postfix() {
    LieExpr base = primary();
    while (in_.peek_word("ad")) base = ad_suffix(base);
    return base;
  }

  LieExpr ad_suffix(const LieExpr& operand) {
    in_.advance(2);
    in_.expect('(');
    Polynomial p = PolynomialGrammar(in_, n_).sum();
    in_.expect(')');
    return LieExpr::ad_action(operand, std::move(p));
  }

  LieExpr primary() {
    if (in_.accept('(')) {
      LieExpr inner = sum();
      in_.expect(')');
      return inner;
    }
    if (in_.accept('[')) {
      std::vector<LieExpr> operands{sum()};
      while (in_.accept(',')) operands.push_back(sum());
      if (operands.size() < 2) in_.fail("a bracket needs at least two operands");
      in_.expect(']');
      return LieExpr::left_normed(operands);
    }
    if (in_.peek() == 'x') {
      in_.advance(1);
      const std::size_t at = in_.position();
      const std::size_t k = in_.index();
      if (k == 0) throw ParseError("generators are numbered from 1", at);
      return LieExpr::generator(k);
    }
    in_.fail("expected a generator, '[' or '('");
  }

  Cursor& in_;
  std::size_t n_;
};

class WreathGrammar {
 public:
  WreathGrammar(Cursor& in, std::size_t n) : in_(in), n_(n) {}

  struct Value {
    bool is_wreath = false;
    Polynomial poly;
    WreathElement wreath;
  };

  Value sum() {
    Value acc{false, Polynomial(n_), WreathElement(n_)};
    bool negate = false;
    if (in_.accept('-')) {
      negate = true;
    } else {
      in_.accept('+');
    }
    for (;;) {
      const std::size_t at = in_.position();
      Value t = product();
      if (acc.is_wreath != t.is_wreath) {
        const bool acc_empty = acc.is_wreath ? acc.wreath.is_zero() : acc.poly.is_zero();
        if (!acc_empty || t.is_wreath == false) {
          throw ParseError("cannot add a polynomial and a wreath element", at);
        }
        acc.is_wreath = true;
      }
      if (t.is_wreath) {
        if (negate) acc.wreath -= t.wreath;
        else acc.wreath += t.wreath;
      } else {
        if (negate) acc.poly -= t.poly;
        else acc.poly += t.poly;
      }
      if (in_.accept('+')) negate = false;
      else if (in_.accept('-')) negate = true;
      else return acc;
    }
  }

 private:
  Value product() {
    Value acc = power();
    while (in_.accept('*')) {
      const std::size_t at = in_.position();
      Value rhs = power();
      if (acc.is_wreath && rhs.is_wreath) {
        throw ParseError("product of two wreath elements", at);
      }
      if (!acc.is_wreath && !rhs.is_wreath) {
        acc.poly *= rhs.poly;
        continue;
      }
      WreathElement w = acc.is_wreath ? acc.wreath : rhs.wreath;
      const Polynomial& p = acc.is_wreath ? rhs.poly : acc.poly;
      if (p.degree() <= 0) {
        w *= p.is_zero() ? Rational(0) : p.leading_coefficient();
      } else {
        if (w.has_vpart()) throw ParseError("v-terms take only rational coefficients", at);
        w *= p;
      }
      acc = Value{true, Polynomial(n_), std::move(w)};
    }
    return acc;
  }

  Value power() {
    Value base = atom();
    if (in_.accept('^')) {
      const std::size_t at = in_.position();
      const std::size_t e = in_.index();
      if (base.is_wreath) throw ParseError("powers of wreath elements vanish or are undefined", at);
      if (e > 1000) throw ParseError("exponent too large", at);
      base.poly = pow(base.poly, static_cast<unsigned>(e));
    }
    return base;
  }

  Value atom() {
    if (in_.peek_digit()) {
      return Value{false, Polynomial::constant(n_, in_.rational()), WreathElement(n_)};
    }
    if (in_.accept('(')) {
      Value inner = sum();
      in_.expect(')');
      return inner;
    }
    const char c = in_.peek();
    if (c == 'x' || c == 'u' || c == 'v') {
      in_.advance(1);
      const std::size_t at = in_.position();
      const std::size_t k = in_.index();
      if (k < 1 || k > n_) {
        throw RankError(std::string(1, c) + std::to_string(k) + " at position " +
                        std::to_string(at) + " outside 1.." + std::to_string(n_));
      }
      if (c == 'x') return Value{false, Polynomial::variable(n_, k), WreathElement(n_)};
      if (c == 'u') return Value{true, Polynomial(n_), WreathElement::u(n_, k)};
      return Value{true, Polynomial(n_), WreathElement::v(n_, k)};
    }
    in_.fail("expected a number, x<k>, u<k>, v<k> or '('");
  }

  Cursor& in_;
  std::size_t n_;
};

void require_end(Cursor& in) {
  if (!in.at_end()) in.fail("unexpected trailing input");
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  Cursor in(text);
  if (in.at_end()) throw ParseError("empty polynomial", 0);
  Polynomial p = PolynomialGrammar(in, nvars).sum();
  require_end(in);
  return p;
}

LieExpr parse_lie_expr(std::string_view text, std::size_t n) {
  Cursor in(text);
  if (in.at_end()) throw ParseError("empty expression", 0);
  if (in.peek() == '0') {
    // A lone 0 denotes the zero element.
    Cursor probe(text);
    probe.rational();
    if (probe.at_end()) return LieExpr::sum({});
  }
  LieExpr e = LieGrammar(in, n).sum();
  require_end(in);
  return e;
}

WreathElement parse_wreath(std::string_view text, std::size_t n) {
  Cursor in(text);
  if (in.at_end()) throw ParseError("empty wreath element", 0);
  const auto value = WreathGrammar(in, n).sum();
  require_end(in);
  if (!value.is_wreath) {
    if (value.poly.is_zero()) return WreathElement(n);
    throw ParseError("expected u- or v-terms", 0);
  }
  return value.wreath;
}

}  // namespace metabelian
