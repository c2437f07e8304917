#include <gtest/gtest.h>

#include "metabelian/linalg.hpp"
#include "support/random.hpp"

namespace metabelian::linalg {
namespace {

std::vector<Rational> multiply(const SparseMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out;
  for (const auto& row : m.row_data()) {
    Rational s = 0;
    for (const auto& [col, c] : row) s += c * v[col];
    out.push_back(s);
  }
  return out;
}

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

TEST(Linalg, RankAndNullspace) {
  SparseMatrix m(3);
  m.add_row(ints({1, 2, 3}));
  m.add_row(ints({2, 4, 6}));
  m.add_row(ints({0, 1, 1}));
  EXPECT_EQ(rank(m), 2u);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0], ints({-1, -1, 1}));
}

TEST(Linalg, SolveSetsFreeVariablesToZero) {
  SparseMatrix m(3);
  m.add_row(ints({1, 1, 0}));
  const auto x = solve(m, ints({5}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, ints({5, 0, 0}));
}

TEST(Linalg, InconsistentSystem) {
  SparseMatrix m(2);
  m.add_row(ints({1, 1}));
  m.add_row(ints({2, 2}));
  EXPECT_FALSE(solve(m, ints({1, 3})).has_value());
}

TEST(Linalg, EmptyMatrix) {
  SparseMatrix m(4);
  EXPECT_EQ(rank(m), 0u);
  EXPECT_EQ(nullspace(m).size(), 4u);
}

TEST(LinalgProperty, RandomSystems) {
  testing::Rng rng(61);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t rows = testing::uniform(rng, 1, 6);
    const std::size_t cols = testing::uniform(rng, 1, 6);
    SparseMatrix m(cols);
    for (std::size_t r = 0; r < rows; ++r) {
      SparseMatrix::Row row;
      for (std::size_t c = 0; c < cols; ++c) {
        if (testing::uniform(rng, 0, 2) == 0) row[c] = testing::random_rational(rng);
      }
      m.add_row(row);
    }
    const auto ns = nullspace(m);
    EXPECT_EQ(rank(m) + ns.size(), cols);
    for (const auto& v : ns) {
      for (const auto& entry : multiply(m, v)) EXPECT_EQ(entry, 0);
    }
    std::vector<Rational> x(cols);
    for (auto& xi : x) xi = testing::random_rational(rng);
    const auto rhs = multiply(m, x);
    const auto sol = solve(m, rhs);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(multiply(m, *sol), rhs);
  }
}

}  // namespace
}  // namespace metabelian::linalg
