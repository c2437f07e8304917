#include <gtest/gtest.h>

#include <numeric>

#include "metabelian/errors.hpp"
#include "metabelian/symmetric.hpp"
#include "support/helpers.hpp"
#include "support/random.hpp"

namespace metabelian {
namespace {

using testing::poly;

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// e_q by subset enumeration over bitmasks.
Polynomial elementary_by_subsets(std::size_t n, std::size_t q) {
  Polynomial out(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != q) continue;
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = (mask >> i) & 1u;
    out.add_term(m, 1);
  }
  return out;
}

EDecomposition edec(std::size_t n, std::initializer_list<std::pair<Monomial, long>> terms) {
  EDecomposition d(n);
  for (const auto& [m, c] : terms) d.add_term(m, c);
  return d;
}

TEST(Elementary, SmallCases) {
  EXPECT_EQ(elementary_symmetric(2, 1), poly("x1 + x2", 2));
  EXPECT_EQ(elementary_symmetric(3, 3), poly("x1*x2*x3", 3));
  EXPECT_EQ(elementary_symmetric(2, 3), Polynomial(2));
  EXPECT_EQ(elementary_symmetric(3, 0), poly("1", 3));
}

TEST(Elementary, MatchesSubsetEnumeration) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t q = 0; q <= n + 1; ++q) {
      const Polynomial e = elementary_symmetric(n, q);
      EXPECT_EQ(e, elementary_by_subsets(n, q)) << n << "," << q;
      EXPECT_EQ(e.size(), binomial(n, q));
    }
  }
}

TEST(Symmetry, Examples) {
  EXPECT_TRUE(is_symmetric(poly("x1 + x2 + x3", 3)));
  EXPECT_FALSE(is_symmetric(poly("x1", 2)));
  EXPECT_TRUE(is_symmetric(poly("x1^2*x2 + x1*x2^2", 2)));
  // Invariant under (1 2) but not under the 3-cycle.
  const auto v = symmetry_violation(poly("x1 + x2", 3));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(to_cycle_string(*v), "(1 2 3)");
}

TEST(Reynolds, Examples) {
  EXPECT_EQ(reynolds_poly(poly("x1", 3)), poly("1/3*x1 + 1/3*x2 + 1/3*x3", 3));
  EXPECT_EQ(reynolds_poly(elementary_symmetric(3, 2)), elementary_symmetric(3, 2));
  EXPECT_EQ(reynolds_poly(poly("x1^2*x2", 2)), poly("1/2*x1^2*x2 + 1/2*x1*x2^2", 2));
}

TEST(FundamentalTheorem, Examples) {
  EXPECT_EQ(decompose_in_elementary(poly("x1^2 + x2^2", 2)),
            edec(2, {{Monomial{2, 0}, 1}, {Monomial{0, 1}, -2}}));
  EXPECT_EQ(decompose_in_elementary(elementary_symmetric(3, 2)), edec(3, {{Monomial{0, 1, 0}, 1}}));
  EXPECT_EQ(decompose_in_elementary(poly("x1^2*x2^2*x3^2", 3)), edec(3, {{Monomial{0, 0, 2}, 1}}));
  EXPECT_EQ(to_string(decompose_in_elementary(poly("x1^2 + x2^2", 2))), "e1^2 - 2*e2");
}

TEST(FundamentalTheorem, PowerSumsByNewton) {
  // p_k = e1 p_{k-1} - e2 p_{k-2} + e3 p_{k-3} for n = 3.
  const std::size_t n = 3;
  std::vector<Polynomial> p{Polynomial::constant(n, 3)};
  for (unsigned k = 1; k <= 6; ++k) p.push_back(poly("x1^" + std::to_string(k) + " + x2^" +
                                                     std::to_string(k) + " + x3^" + std::to_string(k), n));
  for (unsigned k = 1; k <= 6; ++k) {
    const EDecomposition d = decompose_in_elementary(p[k]);
    EXPECT_EQ(d.expand(), p[k]);
    for (const auto& [a, c] : d.terms()) EXPECT_EQ(weighted_degree(a), k);
  }
}

TEST(FundamentalTheorem, RejectsNonSymmetricInput) {
  try {
    decompose_in_elementary(poly("x1^2", 2));
    FAIL() << "expected InvarianceError";
  } catch (const InvarianceError& e) {
    EXPECT_NE(std::string(e.what()).find("(1 2)"), std::string::npos) << e.what();
  }
}

TEST(EMonomials, CountsMatchPartitionsWithBoundedParts) {
  // Partitions of d into parts of size <= n.
  auto partitions = [](unsigned d, std::size_t n) {
    std::vector<std::size_t> ways(d + 1, 0);
    ways[0] = 1;
    for (std::size_t part = 1; part <= n; ++part) {
      for (unsigned s = part; s <= d; ++s) ways[s] += ways[s - part];
    }
    return ways[d];
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    for (unsigned d = 0; d <= 10; ++d) {
      const auto ms = e_monomials_of_weight(n, d);
      EXPECT_EQ(ms.size(), partitions(d, n));
      for (const auto& m : ms) EXPECT_EQ(weighted_degree(m), d);
    }
  }
}

TEST(SymmetricProperty, RoundTripOnRandomSymmetricPolynomials) {
  testing::Rng rng(31);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = testing::uniform(rng, 1, 4);
    const Polynomial p = reynolds_poly(testing::random_polynomial(rng, n, 6, 3));
    ASSERT_TRUE(is_symmetric(p));
    EXPECT_EQ(decompose_in_elementary(p).expand(), p);
  }
}

TEST(SymmetricProperty, ReynoldsIsIdempotentProjection) {
  testing::Rng rng(32);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = testing::uniform(rng, 1, 4);
    const Polynomial p = testing::random_polynomial(rng, n, 4);
    const Polynomial r = reynolds_poly(p);
    EXPECT_EQ(reynolds_poly(r), r);
    EXPECT_TRUE(is_symmetric(r));
    // Linear in p.
    const Polynomial q = testing::random_polynomial(rng, n, 4);
    EXPECT_EQ(reynolds_poly(p + q), r + reynolds_poly(q));
  }
}

TEST(SymmetricProperty, PermutationActionIsAHomomorphism) {
  testing::Rng rng(33);
  const auto all = enumerate_sn(4);
  for (int iter = 0; iter < 50; ++iter) {
    const auto& s = all[testing::uniform(rng, 0, all.size() - 1)];
    const auto& t = all[testing::uniform(rng, 0, all.size() - 1)];
    const Polynomial p = testing::random_polynomial(rng, 4, 3);
    const Polynomial q = testing::random_polynomial(rng, 4, 3);
    EXPECT_EQ(permute_variables(s * t, p), permute_variables(s, permute_variables(t, p)));
    EXPECT_EQ(permute_variables(s, p * q), permute_variables(s, p) * permute_variables(s, q));
  }
}

}  // namespace
}  // namespace metabelian
