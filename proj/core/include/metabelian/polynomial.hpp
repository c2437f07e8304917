#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "metabelian/rational.hpp"

namespace metabelian {

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  /// x_k in `nvars` variables; k is 1-based.
  static Monomial variable(std::size_t nvars, std::size_t k);

  std::size_t nvars() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept;

  /// Exponent of x_k, 0-based index.
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Graded lexicographic comparison with x1 > x2 > ... > xn.
std::strong_ordering graded_lex_compare(const Monomial& a, const Monomial& b);

/// Orders terms so that iteration starts at the graded-lex leading monomial.
struct LeadingFirst {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return graded_lex_compare(a, b) == std::strong_ordering::greater;
  }
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered leading-first under graded lex; zero
/// coefficients are never stored, so structural equality is mathematical
/// equality.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, LeadingFirst>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  /// x_k (1-based).
  static Polynomial variable(std::size_t nvars, std::size_t k);
  static Polynomial term(Monomial m, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Rational coefficient(const Monomial& m) const;
  /// Requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  /// Accumulates c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial homogeneous_component(unsigned d) const;

  /// Ring homomorphism x_i -> images[i]. All images must share one ring.
  Polynomial substitute(std::span<const Polynomial> images) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_ring(const Polynomial& other) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned e);

/// Maps a 0-based variable index to its printed name.
using VariableNamer = std::function<std::string(std::size_t)>;

/// x1, x2, ...
std::string default_variable_name(std::size_t index);

/// Renders in the CLI grammar, e.g. `3/2*x1^2*x2 - x3`.
std::string to_string(const Polynomial& p,
                      const VariableNamer& name = default_variable_name);
std::string to_string(const Monomial& m,
                      const VariableNamer& name = default_variable_name);

}  // namespace metabelian
