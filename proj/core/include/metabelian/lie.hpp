#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "metabelian/permutation.hpp"
#include "metabelian/polynomial.hpp"
#include "metabelian/rational.hpp"

namespace metabelian {

/// Basis element [x_i1, x_i2, x_t1, ..., x_tk] = [x_i1, x_i2] ad x_t1 ... ad x_tk
/// of the commutator ideal, with i1 > i2 <= t1 <= ... <= tk. Indices are 1-based.
struct BasisCommutator {
  using Index = std::uint32_t;

  Index i1 = 0;
  Index i2 = 0;
  std::vector<Index> tail;

  /// Validates the basis invariants; throws DomainError otherwise.
  static BasisCommutator make(Index i1, Index i2, std::vector<Index> tail);

  std::size_t degree() const noexcept { return 2 + tail.size(); }
  Index max_index() const noexcept;

  friend bool operator==(const BasisCommutator&, const BasisCommutator&) = default;
};

/// Total degree first, then (i1, i2, tail) lexicographically.
struct BasisOrder {
  bool operator()(const BasisCommutator& a, const BasisCommutator& b) const;
};

/// An element of the free metabelian Lie algebra F_n in canonical form:
/// coefficients of x_1..x_n plus coefficients over the basis of F_n'.
class LieElement {
 public:
  using CommutatorMap = std::map<BasisCommutator, Rational, BasisOrder>;

  LieElement() = default;
  explicit LieElement(std::size_t n) : linear_(n) {}

  /// x_k, 1-based.
  static LieElement generator(std::size_t n, std::size_t k);
  static LieElement basis(std::size_t n, const BasisCommutator& b);
  /// x_1 + ... + x_n.
  static LieElement sum_of_generators(std::size_t n);

  std::size_t rank() const noexcept { return linear_.size(); }
  const std::vector<Rational>& linear() const noexcept { return linear_; }
  const CommutatorMap& commutators() const noexcept { return comm_; }

  bool is_zero() const;
  bool has_linear_part() const;
  /// Highest homogeneous degree present; 0 for the zero element.
  std::size_t degree() const;

  void add_linear(std::size_t k, const Rational& c);
  /// Adds c times a basis element (invariants are checked).
  void add_basis(const BasisCommutator& b, const Rational& c);
  /// Adds c * [x_a, x_b] ad(tail) for arbitrary indices, rewriting into the
  /// basis with antisymmetry and one Jacobi step on the least tail index.
  void add_commutator(BasisCommutator::Index a, BasisCommutator::Index b,
                      std::vector<BasisCommutator::Index> tail, const Rational& c);

  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const Rational& c);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(LieElement a, const Rational& c) { return a *= c; }
  friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }
  LieElement operator-() const { return *this * Rational(-1); }

  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.linear_ == b.linear_ && a.comm_ == b.comm_;
  }

 private:
  void check_index(std::size_t k) const;
  void accumulate(const BasisCommutator& b, const Rational& c);

  std::vector<Rational> linear_;
  CommutatorMap comm_;
};

/// Lie bracket in F_n; products of two commutators vanish.
LieElement bracket(const LieElement& f, const LieElement& g);

/// Module action f * p(ad x_1, ..., ad x_n) of K[X_n] on F_n'. Throws
/// DomainError if f has a linear part.
LieElement ad_action(const LieElement& f, const Polynomial& p);

/// Automorphism induced by x_i -> x_{sigma(i)}.
LieElement apply_perm_lie(const Permutation& sigma, const LieElement& f);

/// Homogeneous component of degree d >= 1.
LieElement grade(const LieElement& f, std::size_t d);

/// All basis commutators of degree d >= 2 on n generators, in BasisOrder.
std::vector<BasisCommutator> commutator_basis(std::size_t n, std::size_t d);

std::string to_string(const BasisCommutator& b);
/// Renders as e.g. `x1 + x2 - 2*[x2,x1,x1]`. The output parses back to the
/// same element.
std::string to_string(const LieElement& f);

}  // namespace metabelian
