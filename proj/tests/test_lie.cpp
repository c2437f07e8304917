#include <gtest/gtest.h>

#include "metabelian/errors.hpp"
#include "metabelian/lie.hpp"
#include "metabelian/lie_expr.hpp"
#include "metabelian/wreath.hpp"
#include "support/helpers.hpp"
#include "support/random.hpp"
#include "support/wreath_oracle.hpp"

namespace metabelian {
namespace {

using testing::lie;
using testing::poly;

LieElement x(std::size_t n, std::size_t k) { return LieElement::generator(n, k); }

TEST(BasisCommutator, Validation) {
  EXPECT_NO_THROW(BasisCommutator::make(2, 1, {1, 3}));
  EXPECT_THROW(BasisCommutator::make(1, 2, {}), DomainError);
  EXPECT_THROW(BasisCommutator::make(3, 2, {1}), DomainError);
  EXPECT_EQ(BasisCommutator::make(3, 1, {3, 2}).tail, (std::vector<BasisCommutator::Index>{2, 3}));
}

TEST(CommutatorBasis, DimensionFormula) {
  // dim (F_n)_d = (d - 1) * C(n + d - 2, d) for d >= 2.
  auto binomial = [](std::size_t a, std::size_t b) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t d = 2; d <= 6; ++d) {
      EXPECT_EQ(commutator_basis(n, d).size(), (d - 1) * binomial(n + d - 2, d)) << n << "," << d;
    }
  }
}

TEST(NormalForm, Examples) {
  EXPECT_EQ(lie("[x1,x1]", 2), LieElement(2));
  EXPECT_EQ(lie("[[x2,x1],[x3,x1]]", 3), LieElement(3));
  EXPECT_EQ(lie("[x3,x2,x1]", 3), lie("[x3,x1,x2] - [x2,x1,x3]", 3));
  EXPECT_EQ(to_string(lie("[x3,x2,x1]", 3)), "-[x2,x1,x3] + [x3,x1,x2]");
  EXPECT_EQ(lie("[x1,x2]", 2), -lie("[x2,x1]", 2));
  EXPECT_EQ(lie("[x2,x1] ad(x1 + x2)", 2), lie("[x2,x1,x1] + [x2,x1,x2]", 2));
  EXPECT_EQ(lie("0", 3), LieElement(3));
}

TEST(NormalForm, RankErrors) {
  EXPECT_THROW(lie("[x3,x1]", 2), RankError);
  EXPECT_THROW(lie("x0", 2), ParseError);
}

TEST(NormalForm, ParseErrors) {
  EXPECT_THROW(lie("[x2,x1", 2), ParseError);
  EXPECT_THROW(lie("[x2]", 2), ParseError);
  EXPECT_THROW(lie("x1*x2", 2), ParseError);
  EXPECT_THROW(lie("x1 + 3", 2), ParseError);
}

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket(x(2, 1), x(2, 2)), -lie("[x2,x1]", 2));
  EXPECT_EQ(bracket(lie("[x2,x1]", 3), lie("[x3,x1]", 3)), LieElement(3));
  EXPECT_EQ(bracket(lie("[x2,x1]", 3), x(3, 3)), lie("[x2,x1,x3]", 3));
  EXPECT_THROW(bracket(x(2, 1), x(3, 1)), DimensionError);
}

TEST(AdAction, Examples) {
  const LieElement c = lie("[x2,x1]", 2);
  EXPECT_EQ(ad_action(c, poly("1", 2)), c);
  EXPECT_EQ(ad_action(c, poly("x1*x2", 2)), lie("[x2,x1,x1,x2]", 2));
  EXPECT_EQ(ad_action(c, poly("x1 + x2", 2)), lie("[x2,x1,x1] + [x2,x1,x2]", 2));
  EXPECT_THROW(ad_action(x(2, 1), poly("x1", 2)), DomainError);
}

TEST(ApplyPerm, Examples) {
  const Permutation swap = Permutation::transposition(2, 1, 2);
  EXPECT_EQ(apply_perm_lie(swap, lie("x1 + x2", 2)), lie("x1 + x2", 2));
  EXPECT_EQ(apply_perm_lie(swap, lie("[x2,x1]", 2)), -lie("[x2,x1]", 2));
  const Permutation cyc = Permutation::cycle(3, {1, 2, 3});
  EXPECT_EQ(apply_perm_lie(cyc, lie("[x2,x1,x3]", 3)), lie("[[x3,x2],x1]", 3));
  EXPECT_EQ(embed(apply_perm_lie(cyc, lie("[x2,x1,x3]", 3))),
            apply_perm_wreath(cyc, embed(lie("[x2,x1,x3]", 3))));
}

TEST(Grade, Examples) {
  EXPECT_EQ(grade(lie("x1 + [x2,x1]", 2), 1), lie("x1", 2));
  EXPECT_EQ(grade(lie("[x2,x1,x3]", 3), 3), lie("[x2,x1,x3]", 3));
  EXPECT_EQ(grade(lie("[x2,x1]", 2), 5), LieElement(2));
}

TEST(LieProperty, AlgebraIdentities) {
  testing::Rng rng(41);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t n = testing::uniform(rng, 2, 4);
    const LieElement a = testing::random_lie_element(rng, n, 4);
    const LieElement b = testing::random_lie_element(rng, n, 4);
    const LieElement c = testing::random_lie_element(rng, n, 4);
    EXPECT_EQ(bracket(a, a), LieElement(n));
    EXPECT_EQ(bracket(a, b), -bracket(b, a));
    EXPECT_EQ(bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b),
              LieElement(n));
    EXPECT_EQ(bracket(a + b, c), bracket(a, c) + bracket(b, c));
    EXPECT_EQ(bracket(bracket(a, b), bracket(c, a)), LieElement(n));
  }
}

TEST(LieProperty, ModuleActionIsAssociativeAndMatchesBrackets) {
  testing::Rng rng(42);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = testing::uniform(rng, 2, 4);
    const LieElement f = testing::random_commutator_element(rng, n, testing::uniform(rng, 2, 4));
    const Polynomial p = testing::random_polynomial(rng, n, 2, 3);
    const Polynomial q = testing::random_polynomial(rng, n, 2, 3);
    EXPECT_EQ(ad_action(f, p * q), ad_action(ad_action(f, p), q));
    EXPECT_EQ(ad_action(f, p + q), ad_action(f, p) + ad_action(f, q));
    const std::size_t k = testing::uniform(rng, 1, n);
    EXPECT_EQ(ad_action(f, Polynomial::variable(n, k)), bracket(f, x(n, k)));
  }
}

TEST(LieProperty, PermutationsActAsAutomorphisms) {
  testing::Rng rng(43);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = testing::uniform(rng, 2, 4);
    const auto all = enumerate_sn(n);
    const auto& s = all[testing::uniform(rng, 0, all.size() - 1)];
    const auto& t = all[testing::uniform(rng, 0, all.size() - 1)];
    const LieElement a = testing::random_lie_element(rng, n, 4);
    const LieElement b = testing::random_lie_element(rng, n, 4);
    EXPECT_EQ(apply_perm_lie(s, bracket(a, b)), bracket(apply_perm_lie(s, a), apply_perm_lie(s, b)));
    EXPECT_EQ(apply_perm_lie(s * t, a), apply_perm_lie(s, apply_perm_lie(t, a)));
  }
}

TEST(LieProperty, PrintParseRoundTrip) {
  testing::Rng rng(44);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t n = testing::uniform(rng, 2, 4);
    const LieElement f = testing::random_lie_element(rng, n, 5);
    const std::string text = to_string(f);
    EXPECT_EQ(lie(text, n), f) << text;
    EXPECT_EQ(to_string(lie(text, n)), text);
    EXPECT_EQ(normal_form(to_expr(f), n), f);
  }
}

TEST(LieProperty, NormalFormAgreesWithIndependentWreathEvaluation) {
  testing::Rng rng(45);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = testing::uniform(rng, 2, 4);
    const LieExpr e = testing::random_expr(rng, n, testing::uniform(rng, 1, 7));
    const LieElement f = normal_form(e, n);
    EXPECT_TRUE(testing::to_oracle(embed(f)) == testing::oracle_eval(e, n)) << to_string(e);
  }
}

}  // namespace
}  // namespace metabelian
