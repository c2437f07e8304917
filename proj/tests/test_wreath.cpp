#include <gtest/gtest.h>

#include "metabelian/errors.hpp"
#include "metabelian/invariants.hpp"
#include "metabelian/wreath.hpp"
#include "support/helpers.hpp"
#include "support/random.hpp"
#include "support/wreath_oracle.hpp"

namespace metabelian {
namespace {

using testing::lie;
using testing::poly;
using testing::wreath;

TEST(WreathBracket, Rules) {
  EXPECT_EQ(bracket_wreath(WreathElement::u(2, 1), WreathElement::v(2, 2)),
            WreathElement::u(2, 1, poly("x2", 2)));
  EXPECT_EQ(bracket_wreath(WreathElement::u(2, 1, poly("x1", 2)), WreathElement::u(2, 2, poly("x2", 2))),
            WreathElement(2));
  EXPECT_EQ(bracket_wreath(WreathElement::v(2, 1), WreathElement::v(2, 2)), WreathElement(2));
  EXPECT_THROW(bracket_wreath(WreathElement::v(2, 1), WreathElement::v(3, 1)), DimensionError);
}

TEST(Embed, Examples) {
  EXPECT_EQ(embed(lie("x1", 2)), wreath("u1 + v1", 2));
  EXPECT_EQ(embed(lie("[x2,x1]", 2)), wreath("u2*x1 - u1*x2", 2));
  EXPECT_EQ(embed(lie("[x2,x1,x3]", 3)), wreath("(u2*x1 - u1*x2)*x3", 3));
  EXPECT_EQ(embed(lie("[x2,x1,x3]", 3)),
            bracket_wreath(embed(lie("[x2,x1]", 3)), embed(lie("x3", 3))));
}

TEST(Membership, Examples) {
  EXPECT_TRUE(in_commutator_image(wreath("u1*x2 - u2*x1", 2)));
  EXPECT_FALSE(in_commutator_image(WreathElement::u(2, 1)));
  EXPECT_FALSE(in_commutator_image(wreath("u1*x2 - u2*x1 + v1", 2)));
  EXPECT_EQ(membership_residual(WreathElement::u(2, 1)), poly("x1", 2));
}

TEST(Preimage, Examples) {
  EXPECT_EQ(preimage(wreath("u2*x1 - u1*x2", 2)), lie("[x2,x1]", 2));
  EXPECT_EQ(preimage(wreath("(u1*x2 - u2*x1)*(x1 - x2)", 2)), lie("[x2,x1,x2] - [x2,x1,x1]", 2));
  EXPECT_EQ(preimage(wreath("u1 + v1", 2)), lie("x1", 2));
}

TEST(Preimage, RejectsElementsOutsideTheImage) {
  try {
    preimage(WreathElement::u(3, 2, poly("x1 + x3", 3)));
    FAIL() << "expected MembershipError";
  } catch (const MembershipError& e) {
    EXPECT_NE(std::string(e.what()).find("x1*x2 + x2*x3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(preimage(wreath("u1 + v2", 2)), MembershipError);
}

TEST(SubstituteUEqualsX, Examples) {
  EXPECT_EQ(substitute_u_equals_x(embed(lie("[x2,x1]", 2))), Polynomial(2));
  EXPECT_EQ(substitute_u_equals_x(WreathElement::u(2, 1)), poly("x1", 2));
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t j = 1; j <= n; ++j) {
      EXPECT_EQ(substitute_u_equals_x(epsilon(n, j)), Rational(static_cast<long>(j)) * elementary_symmetric(n, j));
    }
  }
}

TEST(ApplyPermWreath, Examples) {
  const Permutation swap = Permutation::transposition(2, 1, 2);
  EXPECT_EQ(apply_perm_wreath(swap, wreath("u1*x2", 2)), wreath("u2*x1", 2));
  const WreathElement w = wreath("u1*x2^2 - 3*v2", 2);
  EXPECT_EQ(apply_perm_wreath(Permutation::identity(2), w), w);
}

TEST(TwoSetPolynomial, Layout) {
  // Variables u1, u2, x1, x2.
  EXPECT_EQ(to_two_set_polynomial(wreath("u1*x2 + v2", 2)), poly("x1*x4 + x4", 4));
}

TEST(Printing, KoszulAndPlainForms) {
  const WreathElement h = generator_h(2, 1, 2);
  EXPECT_EQ(to_koszul_string(h), "(u1*x2 - u2*x1)*(x1 - x2)");
  EXPECT_EQ(wreath(to_koszul_string(h), 2), h);
  EXPECT_EQ(wreath(to_string(h), 2), h);
  EXPECT_THROW(to_koszul_string(WreathElement::u(2, 1)), MembershipError);
}

TEST(WreathProperty, EmbeddingIsAnInjectiveHomomorphism) {
  testing::Rng rng(51);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = testing::uniform(rng, 2, 4);
    const LieElement f = testing::random_lie_element(rng, n, 5);
    const LieElement g = testing::random_lie_element(rng, n, 5);
    EXPECT_EQ(embed(bracket(f, g)), bracket_wreath(embed(f), embed(g)));
    EXPECT_EQ(embed(f + g), embed(f) + embed(g));
    EXPECT_EQ(preimage(embed(f)), f);
    if (!f.has_linear_part()) EXPECT_TRUE(in_commutator_image(embed(f)));
  }
}

TEST(WreathProperty, EmbedExprMatchesIndependentEvaluator) {
  testing::Rng rng(52);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = testing::uniform(rng, 2, 4);
    const LieExpr e = testing::random_expr(rng, n, testing::uniform(rng, 1, 8));
    EXPECT_TRUE(testing::to_oracle(embed_expr(e, n)) == testing::oracle_eval(e, n));
  }
}

TEST(WreathProperty, Equivariance) {
  testing::Rng rng(53);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = testing::uniform(rng, 2, 4);
    const auto all = enumerate_sn(n);
    const auto& s = all[testing::uniform(rng, 0, all.size() - 1)];
    const LieElement f = testing::random_lie_element(rng, n, 5);
    EXPECT_EQ(apply_perm_wreath(s, embed(f)), embed(apply_perm_lie(s, f)));
  }
}

TEST(WreathProperty, PreimageOfKoszulCombinations) {
  // Any sum of (u_a x_b - u_b x_a) * p is in the image and the preimage
  // embeds back to it.
  testing::Rng rng(54);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = testing::uniform(rng, 2, 5);
    WreathElement w(n);
    for (int t = 0; t < 3; ++t) {
      const std::size_t a = testing::uniform(rng, 1, n);
      const std::size_t b = testing::uniform(rng, 1, n);
      const Polynomial p = testing::random_polynomial(rng, n, 3, 3);
      w += WreathElement::u(n, a, Polynomial::variable(n, b) * p) -
           WreathElement::u(n, b, Polynomial::variable(n, a) * p);
    }
    ASSERT_TRUE(in_commutator_image(w));
    EXPECT_EQ(embed(preimage(w)), w);
    EXPECT_EQ(wreath(to_koszul_string(w), n), w);
  }
}

}  // namespace
}  // namespace metabelian
