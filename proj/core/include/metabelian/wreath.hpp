#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "metabelian/lie.hpp"
#include "metabelian/lie_expr.hpp"
#include "metabelian/permutation.hpp"
#include "metabelian/polynomial.hpp"

namespace metabelian {

/// Element sum_i u_i p_i(X_n) + sum_i alpha_i v_i of the abelian wreath
/// product (KU_n) wr (KV_n). The u-part is the free right K[X_n]-module W_n,
/// so products of two u's never appear.
class WreathElement {
 public:
  WreathElement() = default;
  explicit WreathElement(std::size_t n);

  /// u_k * p, 1-based k.
  static WreathElement u(std::size_t n, std::size_t k, const Polynomial& p);
  static WreathElement u(std::size_t n, std::size_t k);
  /// c * v_k, 1-based k.
  static WreathElement v(std::size_t n, std::size_t k, const Rational& c = 1);

  std::size_t rank() const noexcept { return vpart_.size(); }
  const std::vector<Polynomial>& upart() const noexcept { return upart_; }
  const std::vector<Rational>& vpart() const noexcept { return vpart_; }
  /// Coefficient of u_k, 1-based.
  const Polynomial& u_coefficient(std::size_t k) const;

  bool is_zero() const;
  bool has_vpart() const;

  void add_u(std::size_t k, const Polynomial& p);
  void add_v(std::size_t k, const Rational& c);

  WreathElement& operator+=(const WreathElement& other);
  WreathElement& operator-=(const WreathElement& other);
  WreathElement& operator*=(const Rational& c);
  /// Right module action of K[X_n] on W_n. Throws DomainError if the
  /// element has a v-part.
  WreathElement& operator*=(const Polynomial& p);

  friend WreathElement operator+(WreathElement a, const WreathElement& b) { return a += b; }
  friend WreathElement operator-(WreathElement a, const WreathElement& b) { return a -= b; }
  friend WreathElement operator*(WreathElement a, const Rational& c) { return a *= c; }
  friend WreathElement operator*(const Rational& c, WreathElement a) { return a *= c; }
  friend WreathElement operator*(WreathElement a, const Polynomial& p) { return a *= p; }

  friend bool operator==(const WreathElement&, const WreathElement&) = default;

 private:
  void check_index(std::size_t k) const;
  void require_same_rank(const WreathElement& other) const;

  std::vector<Polynomial> upart_;
  std::vector<Rational> vpart_;
};

/// [W, W] = [V, V] = 0 and [u_i p, v_j] = u_i p x_j.
WreathElement bracket_wreath(const WreathElement& a, const WreathElement& b);

/// The embedding x_i -> u_i + v_i.
WreathElement embed(const LieElement& f);

/// Evaluates an expression directly in the wreath product, bypassing Lie
/// normal forms. Throws RankError on out-of-range generators.
WreathElement embed_expr(const LieExpr& expr, std::size_t n);

/// sum_i x_i p_i(X_n); zero exactly for u-parts of commutator images.
Polynomial membership_residual(const WreathElement& w);

/// True iff the v-part vanishes and sum_i x_i p_i = 0.
bool in_commutator_image(const WreathElement& w);

/// Inverse of the embedding. The linear part is read off the v-part; the
/// commutator part is peeled off the highest u-index downwards using the
/// Koszul relations u_a x_b - u_b x_a. Throws MembershipError if w is not
/// in the image.
LieElement preimage(const WreathElement& w);

/// u_i -> x_i and v_i -> x_i: sum_i x_i p_i + sum_i alpha_i x_i.
Polynomial substitute_u_equals_x(const WreathElement& w);

/// The image of w in K[U_n, X_n] with variables ordered u_1..u_n, x_1..x_n
/// (v_i is identified with x_i).
Polynomial to_two_set_polynomial(const WreathElement& w);

/// Permutes u-, v- and x-indices simultaneously.
WreathElement apply_perm_wreath(const Permutation& sigma, const WreathElement& w);

/// `u1*(x2) - ...` followed by v-terms such as `3*v2`.
std::string to_string(const WreathElement& w);

/// Writes an element of the commutator image as a sum of Koszul pairs,
/// e.g. `(u1*x2 - u2*x1)*(x1 - x2)`. Each polynomial factor is scaled to a
/// positive leading coefficient. Throws MembershipError outside the image.
std::string to_koszul_string(const WreathElement& w);

}  // namespace metabelian
