#include "metabelian/symmetric.hpp"

#include <algorithm>
#include <functional>

#include "metabelian/errors.hpp"

namespace metabelian {

Polynomial elementary_symmetric(std::size_t n, std::size_t q) {
  Polynomial out(n);
  if (q > n) return out;
  // Walk all q-subsets of {0..n-1} as bitmasks in selection order.
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(q), true);
  do {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = pick[i] ? 1 : 0;
    out.add_term(m, 1);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

Polynomial permute_variables(const Permutation& sigma, const Polynomial& p) {
  if (sigma.size() != p.nvars()) {
    throw DimensionError("permutation of degree " + std::to_string(sigma.size()) +
                         " on a ring with " + std::to_string(p.nvars()) +
                         " variables");
  }
  Polynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial image(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) image[sigma.image0(i)] = m[i];
    out.add_term(image, c);
  }
  return out;
}

std::optional<Permutation> symmetry_violation(const Polynomial& p) {
  if (p.nvars() < 2) return std::nullopt;
  for (const auto& g : sn_generators(p.nvars())) {
    if (permute_variables(g, p) != p) return g;
  }
  return std::nullopt;
}

bool is_symmetric(const Polynomial& p) { return !symmetry_violation(p).has_value(); }

Polynomial reynolds_poly(const Polynomial& p) {
  Polynomial sum(p.nvars());
  Integer order = 0;
  for_each_permutation(p.nvars(), [&](const Permutation& sigma) {
    sum += permute_variables(sigma, p);
    ++order;
  });
  return sum * Rational(1, order);
}

void EDecomposition::add_term(const Monomial& exponents, const Rational& c) {
  if (exponents.nvars() != n_) {
    throw DimensionError("e-exponent vector has length " +
                         std::to_string(exponents.nvars()) + ", rank is " +
                         std::to_string(n_));
  }
  if (metabelian::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (metabelian::is_zero(it->second)) terms_.erase(it);
  }
}

EDecomposition& EDecomposition::operator+=(const EDecomposition& other) {
  if (other.n_ != n_) throw DimensionError("adding e-decompositions of different rank");
  for (const auto& [a, c] : other.terms_) add_term(a, c);
  return *this;
}

Polynomial EDecomposition::expand() const {
  ElementaryCache cache(n_);
  Polynomial out(n_);
  for (const auto& [a, c] : terms_) out += cache.expand(a) * c;
  return out;
}

std::string to_string(const EDecomposition& d) {
  Polynomial shadow(d.rank());
  for (const auto& [a, c] : d.terms()) shadow.add_term(a, c);
  return to_string(shadow, [](std::size_t i) { return "e" + std::to_string(i + 1); });
}

unsigned weighted_degree(const Monomial& e_exponents) {
  unsigned w = 0;
  for (std::size_t k = 0; k < e_exponents.nvars(); ++k) {
    w += static_cast<unsigned>(k + 1) * e_exponents[k];
  }
  return w;
}

std::vector<Monomial> e_monomials_of_weight(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  Monomial current(n);
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t k, unsigned left) {
    if (k == n) {
      if (left == 0) out.push_back(current);
      return;
    }
    const unsigned weight = static_cast<unsigned>(k + 1);
    for (unsigned a = 0; a * weight <= left; ++a) {
      current[k] = a;
      fill(k + 1, left - a * weight);
    }
    current[k] = 0;
  };
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  fill(0, d);
  std::sort(out.begin(), out.end(), LeadingFirst{});
  return out;
}

ElementaryCache::ElementaryCache(std::size_t n) : n_(n) {
  e_.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) e_.push_back(elementary_symmetric(n, k));
}

const Polynomial& ElementaryCache::expand(const Monomial& a) {
  if (a.nvars() != n_) {
    throw DimensionError("e-exponent vector length does not match rank");
  }
  if (auto it = products_.find(a); it != products_.end()) return it->second;
  // Peel one factor off the last nonzero exponent and recurse so that
  // shared prefixes are reused.
  Polynomial value = Polynomial::constant(n_, 1);
  for (std::size_t k = n_; k-- > 0;) {
    if (a[k] == 0) continue;
    Monomial smaller = a;
    --smaller[k];
    value = expand(smaller) * e_[k + 1];
    break;
  }
  return products_.emplace(a, std::move(value)).first->second;
}

EDecomposition decompose_in_elementary(const Polynomial& p) {
  if (auto g = symmetry_violation(p)) {
    throw InvarianceError("polynomial is not symmetric: violated by " +
                          to_cycle_string(*g));
  }
  const std::size_t n = p.nvars();
  EDecomposition result(n);
  ElementaryCache cache(n);
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const Monomial lead = rest.leading_monomial();
    const Rational c = rest.leading_coefficient();
    Monomial a(n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto next = k + 1 < n ? lead[k + 1] : 0u;
      if (lead[k] < next) {
        throw ConsistencyError("leading exponent of a symmetric remainder is not a partition");
      }
      a[k] = lead[k] - next;
    }
    result.add_term(a, c);
    rest -= cache.expand(a) * c;
  }
  return result;
}

}  // namespace metabelian
