#include "metabelian/polynomial.hpp"

#include <numeric>

#include "metabelian/errors.hpp"

namespace metabelian {

Monomial Monomial::variable(std::size_t nvars, std::size_t k) {
  if (k < 1 || k > nvars) {
    throw RankError("variable x" + std::to_string(k) + " outside 1.." +
                    std::to_string(nvars));
  }
  Monomial m(nvars);
  m.exps_[k - 1] = 1;
  return m;
}

unsigned Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  if (other.nvars() != nvars()) {
    throw DimensionError("monomials over different variable counts");
  }
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

std::strong_ordering graded_lex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i) {
    if (auto c = ea[i] <=> eb[i]; c != 0) return c;
  }
  return ea.size() <=> eb.size();
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t k) {
  return term(Monomial::variable(nvars, k), 1);
}

Polynomial Polynomial::term(Monomial m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return false;
  }
  return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading monomial of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) {
    throw DimensionError("monomial has " + std::to_string(m.nvars()) +
                         " variables, ring has " + std::to_string(nvars_));
  }
  if (metabelian::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (metabelian::is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial Polynomial::homogeneous_component(unsigned d) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars_) {
    throw DimensionError("substitution needs " + std::to_string(nvars_) +
                         " images, got " + std::to_string(images.size()));
  }
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  for (const auto& img : images) {
    if (img.nvars() != target) {
      throw DimensionError("substitution images live in different rings");
    }
  }
  // Cache powers per variable; most substitutions reuse low exponents.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] != 0) t *= power(i, m[i]);
    }
    out += t;
  }
  return out;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (other.nvars_ != nvars_) {
    throw DimensionError("polynomials over " + std::to_string(nvars_) + " and " +
                         std::to_string(other.nvars_) + " variables");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial out(a.nvars_);
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(ma * mb, prod);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (metabelian::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::constant(p.nvars(), 1);
  Polynomial base = p;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::string default_variable_name(std::size_t index) {
  return "x" + std::to_string(index + 1);
}

std::string to_string(const Monomial& m, const VariableNamer& name) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p, const VariableNamer& name) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(c);
    if (m.degree() == 0) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += to_string(m, name);
    } else {
      out += to_string(magnitude) + "*" + to_string(m, name);
    }
  }
  return out;
}

}  // namespace metabelian
