#include "metabelian/lie_expr.hpp"

#include <algorithm>

#include "metabelian/errors.hpp"

namespace metabelian {

LieExpr LieExpr::generator(std::size_t k) {
  if (k == 0) throw RankError("generators are numbered from 1");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Generator;
  node->index = k;
  return LieExpr(std::move(node));
}

LieExpr LieExpr::bracket(LieExpr lhs, LieExpr rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Bracket;
  node->children = {std::move(lhs), std::move(rhs)};
  return LieExpr(std::move(node));
}

LieExpr LieExpr::left_normed(const std::vector<LieExpr>& operands) {
  if (operands.size() < 2) throw DomainError("a bracket needs at least two operands");
  LieExpr acc = bracket(operands[0], operands[1]);
  for (std::size_t i = 2; i < operands.size(); ++i) acc = bracket(acc, operands[i]);
  return acc;
}

LieExpr LieExpr::scaled(const Rational& c, LieExpr operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Scale;
  node->scalar = c;
  node->children = {std::move(operand)};
  return LieExpr(std::move(node));
}

LieExpr LieExpr::sum(std::vector<LieExpr> terms) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Sum;
  node->children = std::move(terms);
  return LieExpr(std::move(node));
}

LieExpr LieExpr::ad_action(LieExpr operand, Polynomial p) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::AdAction;
  node->poly = std::move(p);
  node->children = {std::move(operand)};
  return LieExpr(std::move(node));
}

std::size_t LieExpr::max_index() const {
  std::size_t m = kind() == Kind::Generator ? index() : 0;
  if (kind() == Kind::AdAction) m = std::max(m, polynomial().nvars());
  for (const auto& c : children()) m = std::max(m, c.max_index());
  return m;
}

std::size_t LieExpr::leaf_count() const {
  if (kind() == Kind::Generator) return 1;
  std::size_t total = 0;
  for (const auto& c : children()) total += c.leaf_count();
  return total;
}

LieElement normal_form(const LieExpr& expr, std::size_t n) {
  switch (expr.kind()) {
    case LieExpr::Kind::Generator:
      if (expr.index() > n) {
        throw RankError("generator x" + std::to_string(expr.index()) +
                        " exceeds rank " + std::to_string(n));
      }
      return LieElement::generator(n, expr.index());
    case LieExpr::Kind::Bracket:
      return bracket(normal_form(expr.children()[0], n),
                     normal_form(expr.children()[1], n));
    case LieExpr::Kind::Scale:
      return normal_form(expr.children()[0], n) * expr.scalar();
    case LieExpr::Kind::Sum: {
      LieElement acc(n);
      for (const auto& term : expr.children()) acc += normal_form(term, n);
      return acc;
    }
    case LieExpr::Kind::AdAction:
      if (expr.polynomial().nvars() > n) {
        throw RankError("ad-polynomial uses more than " + std::to_string(n) + " variables");
      }
      if (expr.polynomial().nvars() < n) {
        // Widen the ring so that `ad(x1)` is usable at any rank.
        std::vector<Polynomial> images;
        for (std::size_t k = 1; k <= expr.polynomial().nvars(); ++k) {
          images.push_back(Polynomial::variable(n, k));
        }
        return ad_action(normal_form(expr.children()[0], n),
                         expr.polynomial().substitute(images));
      }
      return ad_action(normal_form(expr.children()[0], n), expr.polynomial());
  }
  throw ConsistencyError("unknown expression kind");
}

LieExpr to_expr(const LieElement& f) {
  std::vector<LieExpr> terms;
  for (std::size_t k = 0; k < f.rank(); ++k) {
    if (!is_zero(f.linear()[k])) {
      terms.push_back(LieExpr::scaled(f.linear()[k], LieExpr::generator(k + 1)));
    }
  }
  for (const auto& [b, c] : f.commutators()) {
    std::vector<LieExpr> ops{LieExpr::generator(b.i1), LieExpr::generator(b.i2)};
    for (auto t : b.tail) ops.push_back(LieExpr::generator(t));
    terms.push_back(LieExpr::scaled(c, LieExpr::left_normed(ops)));
  }
  return LieExpr::sum(std::move(terms));
}

std::string to_string(const LieExpr& expr) {
  switch (expr.kind()) {
    case LieExpr::Kind::Generator:
      return "x" + std::to_string(expr.index());
    case LieExpr::Kind::Bracket:
      return "[" + to_string(expr.children()[0]) + "," + to_string(expr.children()[1]) + "]";
    case LieExpr::Kind::Scale:
      return to_string(expr.scalar()) + "*(" + to_string(expr.children()[0]) + ")";
    case LieExpr::Kind::Sum: {
      if (expr.children().empty()) return "0";
      std::string out;
      for (std::size_t i = 0; i < expr.children().size(); ++i) {
        if (i != 0) out += " + ";
        out += to_string(expr.children()[i]);
      }
      return out;
    }
    case LieExpr::Kind::AdAction:
      return "(" + to_string(expr.children()[0]) + ") ad(" + to_string(expr.polynomial()) + ")";
  }
  return {};
}

}  // namespace metabelian
