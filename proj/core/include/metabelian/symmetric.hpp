#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "metabelian/permutation.hpp"
#include "metabelian/polynomial.hpp"

namespace metabelian {

/// e_q in n variables; e_0 = 1 and e_q = 0 for q > n.
Polynomial elementary_symmetric(std::size_t n, std::size_t q);

/// Image of p under x_i -> x_{sigma(i)}.
Polynomial permute_variables(const Permutation& sigma, const Polynomial& p);

/// First S_n generator (transposition, then n-cycle) that moves p, if any.
std::optional<Permutation> symmetry_violation(const Polynomial& p);
bool is_symmetric(const Polynomial& p);

/// Averages p over S_n.
Polynomial reynolds_poly(const Polynomial& p);

/// A polynomial in e_1, ..., e_n. Keys are exponent vectors on (e_1..e_n).
class EDecomposition {
 public:
  using TermMap = Polynomial::TermMap;

  EDecomposition() = default;
  explicit EDecomposition(std::size_t n) : n_(n) {}

  std::size_t rank() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Monomial& exponents, const Rational& c);
  EDecomposition& operator+=(const EDecomposition& other);

  /// Substitutes the elementary polynomials back in.
  Polynomial expand() const;

  friend bool operator==(const EDecomposition&, const EDecomposition&) = default;

 private:
  std::size_t n_ = 0;
  TermMap terms_;
};

/// Renders as e.g. `e1^2 - 2*e2`.
std::string to_string(const EDecomposition& d);

/// Weighted degree sum_k k*a_k of an e-monomial.
unsigned weighted_degree(const Monomial& e_exponents);

/// All exponent vectors a on (e_1..e_n) with sum_k k*a_k = d, in
/// graded-lex order of a.
std::vector<Monomial> e_monomials_of_weight(std::size_t n, unsigned d);

/// Memoizes e_k and expansions of e-monomials for one rank. Not shared
/// between threads.
class ElementaryCache {
 public:
  explicit ElementaryCache(std::size_t n);

  std::size_t rank() const noexcept { return n_; }
  const Polynomial& e(std::size_t k) const { return e_.at(k); }
  const Polynomial& expand(const Monomial& e_exponents);

 private:
  std::size_t n_;
  std::vector<Polynomial> e_;
  std::map<Monomial, Polynomial, LeadingFirst> products_;
};

/// Fundamental theorem: the unique EDecomposition expanding to p.
/// Throws InvarianceError (naming a violating generator) unless p is
/// symmetric.
EDecomposition decompose_in_elementary(const Polynomial& p);

}  // namespace metabelian
