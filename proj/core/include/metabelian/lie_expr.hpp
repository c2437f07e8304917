#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "metabelian/lie.hpp"
#include "metabelian/polynomial.hpp"
#include "metabelian/rational.hpp"

namespace metabelian {

/// Unevaluated Lie expression: generators, binary brackets, scalar
/// multiples, sums and right action by ad-polynomials. Immutable; subtrees
/// are shared.
class LieExpr {
 public:
  enum class Kind { Generator, Bracket, Scale, Sum, AdAction };

  static LieExpr generator(std::size_t k);
  static LieExpr bracket(LieExpr lhs, LieExpr rhs);
  /// Left-normed [a, b, c, ...] = [[a, b], c], ...; needs >= 2 operands.
  static LieExpr left_normed(const std::vector<LieExpr>& operands);
  static LieExpr scaled(const Rational& c, LieExpr operand);
  static LieExpr sum(std::vector<LieExpr> terms);
  static LieExpr ad_action(LieExpr operand, Polynomial p);

  Kind kind() const noexcept { return node_->kind; }
  /// Generator index (Kind::Generator).
  std::size_t index() const noexcept { return node_->index; }
  /// Scale factor (Kind::Scale).
  const Rational& scalar() const noexcept { return node_->scalar; }
  /// Acting polynomial (Kind::AdAction).
  const Polynomial& polynomial() const noexcept { return node_->poly; }
  /// Operands: two for Bracket, one for Scale and AdAction, any for Sum.
  const std::vector<LieExpr>& children() const noexcept { return node_->children; }

  /// Largest generator index, or largest polynomial variable count.
  std::size_t max_index() const;
  std::size_t leaf_count() const;

 private:
  struct Node {
    Kind kind = Kind::Sum;
    std::size_t index = 0;
    Rational scalar;
    Polynomial poly;
    std::vector<LieExpr> children;
  };

  explicit LieExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Evaluates an expression to canonical basis form by rewriting subtrees
/// inner-out. Throws RankError if a generator index exceeds n.
LieElement normal_form(const LieExpr& expr, std::size_t n);

/// Expression tree that evaluates back to f (generators and basis
/// commutators with coefficients).
LieExpr to_expr(const LieElement& f);

std::string to_string(const LieExpr& expr);

}  // namespace metabelian
