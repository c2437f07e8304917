#include "metabelian/wreath.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "metabelian/errors.hpp"
#include "metabelian/symmetric.hpp"

namespace metabelian {

WreathElement::WreathElement(std::size_t n) : upart_(n, Polynomial(n)), vpart_(n) {}

WreathElement WreathElement::u(std::size_t n, std::size_t k, const Polynomial& p) {
  WreathElement w(n);
  w.add_u(k, p);
  return w;
}

WreathElement WreathElement::u(std::size_t n, std::size_t k) {
  return u(n, k, Polynomial::constant(n, 1));
}

WreathElement WreathElement::v(std::size_t n, std::size_t k, const Rational& c) {
  WreathElement w(n);
  w.add_v(k, c);
  return w;
}

void WreathElement::check_index(std::size_t k) const {
  if (k < 1 || k > rank()) {
    throw RankError("wreath index " + std::to_string(k) + " outside 1.." +
                    std::to_string(rank()));
  }
}

void WreathElement::require_same_rank(const WreathElement& other) const {
  if (other.rank() != rank()) {
    throw DimensionError("wreath elements of rank " + std::to_string(rank()) + " and " +
                         std::to_string(other.rank()));
  }
}

const Polynomial& WreathElement::u_coefficient(std::size_t k) const {
  check_index(k);
  return upart_[k - 1];
}

bool WreathElement::is_zero() const {
  return !has_vpart() &&
         std::all_of(upart_.begin(), upart_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool WreathElement::has_vpart() const {
  return std::any_of(vpart_.begin(), vpart_.end(),
                     [](const Rational& c) { return !metabelian::is_zero(c); });
}

void WreathElement::add_u(std::size_t k, const Polynomial& p) {
  check_index(k);
  upart_[k - 1] += p;
}

void WreathElement::add_v(std::size_t k, const Rational& c) {
  check_index(k);
  vpart_[k - 1] += c;
}

WreathElement& WreathElement::operator+=(const WreathElement& other) {
  require_same_rank(other);
  for (std::size_t i = 0; i < rank(); ++i) {
    upart_[i] += other.upart_[i];
    vpart_[i] += other.vpart_[i];
  }
  return *this;
}

WreathElement& WreathElement::operator-=(const WreathElement& other) {
  require_same_rank(other);
  for (std::size_t i = 0; i < rank(); ++i) {
    upart_[i] -= other.upart_[i];
    vpart_[i] -= other.vpart_[i];
  }
  return *this;
}

WreathElement& WreathElement::operator*=(const Rational& c) {
  for (auto& p : upart_) p *= c;
  for (auto& a : vpart_) a *= c;
  return *this;
}

WreathElement& WreathElement::operator*=(const Polynomial& p) {
  if (has_vpart()) throw DomainError("K[X_n] acts on the u-part only");
  for (auto& q : upart_) q *= p;
  return *this;
}

namespace {

/// sum_j c_j x_j for a coefficient vector.
Polynomial linear_form(const std::vector<Rational>& coeffs) {
  const std::size_t n = coeffs.size();
  Polynomial out(n);
  for (std::size_t j = 0; j < n; ++j) out.add_term(Monomial::variable(n, j + 1), coeffs[j]);
  return out;
}

}  // namespace

WreathElement bracket_wreath(const WreathElement& a, const WreathElement& b) {
  if (a.rank() != b.rank()) throw DimensionError("bracket of wreath elements of different rank");
  const std::size_t n = a.rank();
  // [sum u_i p_i + A, sum u_j q_j + B] = (sum u_i p_i) B(x) - (sum u_j q_j) A(x).
  const Polynomial bx = linear_form(b.vpart());
  const Polynomial ax = linear_form(a.vpart());
  WreathElement out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out.add_u(i, a.u_coefficient(i) * bx - b.u_coefficient(i) * ax);
  }
  return out;
}

WreathElement embed(const LieElement& f) {
  const std::size_t n = f.rank();
  WreathElement w(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Rational& c = f.linear()[k];
    if (is_zero(c)) continue;
    w.add_u(k + 1, Polynomial::constant(n, c));
    w.add_v(k + 1, c);
  }
  // [x_a, x_b] ad(t) -> (u_a x_b - u_b x_a) x^t.
  for (const auto& [b, c] : f.commutators()) {
    Monomial tail(n);
    for (auto t : b.tail) ++tail[t - 1];
    Monomial ma = tail;
    ++ma[b.i2 - 1];
    Monomial mb = tail;
    ++mb[b.i1 - 1];
    w.add_u(b.i1, Polynomial::term(ma, c));
    w.add_u(b.i2, Polynomial::term(mb, -c));
  }
  return w;
}

WreathElement embed_expr(const LieExpr& expr, std::size_t n) {
  switch (expr.kind()) {
    case LieExpr::Kind::Generator:
      if (expr.index() > n) {
        throw RankError("generator x" + std::to_string(expr.index()) +
                        " exceeds rank " + std::to_string(n));
      }
      return WreathElement::u(n, expr.index()) + WreathElement::v(n, expr.index());
    case LieExpr::Kind::Bracket:
      return bracket_wreath(embed_expr(expr.children()[0], n),
                            embed_expr(expr.children()[1], n));
    case LieExpr::Kind::Scale:
      return embed_expr(expr.children()[0], n) * expr.scalar();
    case LieExpr::Kind::Sum: {
      WreathElement acc(n);
      for (const auto& term : expr.children()) acc += embed_expr(term, n);
      return acc;
    }
    case LieExpr::Kind::AdAction: {
      const Polynomial& p = expr.polynomial();
      if (p.nvars() > n) {
        throw RankError("ad-polynomial uses more than " + std::to_string(n) + " variables");
      }
      std::vector<Polynomial> images;
      for (std::size_t k = 1; k <= p.nvars(); ++k) images.push_back(Polynomial::variable(n, k));
      WreathElement inner = embed_expr(expr.children()[0], n);
      if (inner.has_vpart()) {
        throw DomainError("the K[X_n]-action is defined on the commutator ideal only");
      }
      return inner * p.substitute(images);
    }
  }
  throw ConsistencyError("unknown expression kind");
}

Polynomial membership_residual(const WreathElement& w) {
  const std::size_t n = w.rank();
  Polynomial out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out += Polynomial::variable(n, i) * w.u_coefficient(i);
  }
  return out;
}

bool in_commutator_image(const WreathElement& w) {
  return !w.has_vpart() && membership_residual(w).is_zero();
}

LieElement preimage(const WreathElement& w) {
  const std::size_t n = w.rank();
  LieElement result(n);
  WreathElement rest = w;
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational c = w.vpart()[k - 1];
    if (is_zero(c)) continue;
    result.add_linear(k, c);
    rest -= (WreathElement::u(n, k) + WreathElement::v(n, k)) * c;
  }
  if (const Polynomial residual = membership_residual(rest); !residual.is_zero()) {
    throw MembershipError("not in the image of the embedding: sum x_i p_i = " +
                          to_string(residual));
  }
  std::vector<Polynomial> p = rest.upart();
  // sum x_i p_i = 0 forces p_top into the ideal (x_1..x_{top-1}), so each of
  // its terms c*m has a smallest variable x_j | m with j < top; c*m is the
  // u_top-term of c*delta([x_top, x_j] ad(m/x_j)), which is a basis element.
  for (std::size_t top = n; top >= 1; --top) {
    const Polynomial current = p[top - 1];
    for (const auto& [m, c] : current.terms()) {
      std::size_t j = 0;
      while (j < top - 1 && m[j] == 0) ++j;
      if (j == top - 1) {
        throw MembershipError("u" + std::to_string(top) + "-coefficient term " +
                              to_string(m) + " is not divisible by a lower variable");
      }
      Monomial quotient = m;
      --quotient[j];
      std::vector<BasisCommutator::Index> tail;
      for (std::size_t v = 0; v < n; ++v) {
        tail.insert(tail.end(), quotient[v], static_cast<BasisCommutator::Index>(v + 1));
      }
      result.add_basis(
          BasisCommutator{static_cast<BasisCommutator::Index>(top),
                          static_cast<BasisCommutator::Index>(j + 1), std::move(tail)},
          c);
      Monomial moved = quotient;
      ++moved[top - 1];
      p[j].add_term(moved, c);
    }
    p[top - 1] = Polynomial(n);
  }
  return result;
}

Polynomial substitute_u_equals_x(const WreathElement& w) {
  Polynomial out = membership_residual(w);
  for (std::size_t k = 1; k <= w.rank(); ++k) {
    out.add_term(Monomial::variable(w.rank(), k), w.vpart()[k - 1]);
  }
  return out;
}

Polynomial to_two_set_polynomial(const WreathElement& w) {
  const std::size_t n = w.rank();
  Polynomial out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [m, c] : w.upart()[i].terms()) {
      Monomial big(2 * n);
      big[i] = 1;
      for (std::size_t k = 0; k < n; ++k) big[n + k] = m[k];
      out.add_term(big, c);
    }
    Monomial xi(2 * n);
    xi[n + i] = 1;
    out.add_term(xi, w.vpart()[i]);
  }
  return out;
}

WreathElement apply_perm_wreath(const Permutation& sigma, const WreathElement& w) {
  if (sigma.size() != w.rank()) {
    throw DimensionError("permutation of degree " + std::to_string(sigma.size()) +
                         " acting on rank " + std::to_string(w.rank()));
  }
  WreathElement out(w.rank());
  for (std::size_t i = 0; i < w.rank(); ++i) {
    out.add_u(sigma.image0(i) + 1, permute_variables(sigma, w.upart()[i]));
    out.add_v(sigma.image0(i) + 1, w.vpart()[i]);
  }
  return out;
}

std::string to_string(const WreathElement& w) {
  std::string out;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (w.upart()[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "u" + std::to_string(i + 1) + "*(" + to_string(w.upart()[i]) + ")";
  }
  for (std::size_t i = 0; i < w.rank(); ++i) {
    const Rational& c = w.vpart()[i];
    if (is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(c);
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += "v" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string to_koszul_string(const WreathElement& w) {
  if (w.has_vpart()) throw MembershipError("element has a v-part");
  const std::size_t n = w.rank();
  const LieElement f = preimage(w);
  std::map<std::pair<std::size_t, std::size_t>, Polynomial> factors;
  for (const auto& [b, c] : f.commutators()) {
    Monomial tail(n);
    for (auto t : b.tail) ++tail[t - 1];
    auto [it, inserted] = factors.try_emplace({b.i1, b.i2}, Polynomial(n));
    it->second.add_term(tail, c);
  }
  std::string out;
  for (auto& [ab, p] : factors) {
    auto [a, b] = ab;
    // delta([x_a, x_b]) = u_a x_b - u_b x_a with a > b.
    std::string pair = "(u" + std::to_string(a) + "*x" + std::to_string(b) + " - u" +
                       std::to_string(b) + "*x" + std::to_string(a) + ")";
    if (sgn(p.leading_coefficient()) < 0) {
      p = -p;
      pair = "(u" + std::to_string(b) + "*x" + std::to_string(a) + " - u" +
             std::to_string(a) + "*x" + std::to_string(b) + ")";
    }
    if (!out.empty()) out += " + ";
    out += pair;
    if (p != Polynomial::constant(n, 1)) out += "*(" + to_string(p) + ")";
  }
  return out.empty() ? "0" : out;
}

}  // namespace metabelian
