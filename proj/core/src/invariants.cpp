#include "metabelian/invariants.hpp"

#include <algorithm>

#include "metabelian/errors.hpp"
#include "metabelian/linalg.hpp"

namespace metabelian {

namespace {

void require_pair(std::size_t n, std::size_t i, std::size_t j) {
  if (!(1 <= i && i < j && j <= n)) {
    throw DomainError("generator indices need 1 <= i < j <= n, got i=" + std::to_string(i) +
                      ", j=" + std::to_string(j) + ", n=" + std::to_string(n));
  }
}

/// e_q with every term containing x_skip (1-based) removed.
Polynomial elementary_avoiding(std::size_t n, std::size_t q, std::size_t skip) {
  Polynomial out(n);
  const Polynomial all = elementary_symmetric(n, q);
  for (const auto& [m, c] : all.terms()) {
    if (m[skip - 1] == 0) out.add_term(m, c);
  }
  return out;
}

}  // namespace

WreathElement epsilon(std::size_t n, std::size_t j) {
  if (j < 1 || j > n) {
    throw DomainError("epsilon index " + std::to_string(j) + " outside 1.." + std::to_string(n));
  }
  WreathElement w(n);
  for (std::size_t i = 1; i <= n; ++i) w.add_u(i, elementary_avoiding(n, j - 1, i));
  return w;
}

Polynomial polarized_elementary(std::size_t n, std::size_t p, std::size_t q) {
  if (p + q == 0 || p + q > n) {
    throw DomainError("polarization needs 0 < p + q <= n, got p=" + std::to_string(p) +
                      ", q=" + std::to_string(q) + ", n=" + std::to_string(n));
  }
  Polynomial out(2 * n);
  const Polynomial ep = elementary_symmetric(n, p);
  const Polynomial eq = elementary_symmetric(n, q);
  for (const auto& [mu, cu] : ep.terms()) {
    for (const auto& [mx, cx] : eq.terms()) {
      bool disjoint = true;
      for (std::size_t k = 0; k < n && disjoint; ++k) disjoint = !(mu[k] && mx[k]);
      if (!disjoint) continue;
      Monomial big(2 * n);
      for (std::size_t k = 0; k < n; ++k) {
        big[k] = mu[k];
        big[n + k] = mx[k];
      }
      out.add_term(big, 1);
    }
  }
  return out;
}

WreathElement generator_h(std::size_t n, std::size_t i, std::size_t j) {
  require_pair(n, i, j);
  const auto ci = make_rational(static_cast<long>(i));
  const auto cj = make_rational(static_cast<long>(j));
  return epsilon(n, i) * elementary_symmetric(n, j) * cj -
         epsilon(n, j) * elementary_symmetric(n, i) * ci;
}

LieElement generator_h_lie(std::size_t n, std::size_t i, std::size_t j) {
  return preimage(generator_h(n, i, j));
}

std::optional<Permutation> invariance_violation(const LieElement& f) {
  if (f.rank() < 2) return std::nullopt;
  for (const auto& g : sn_generators(f.rank())) {
    if (apply_perm_lie(g, f) != f) return g;
  }
  return std::nullopt;
}

bool is_invariant_lie(const LieElement& f) { return !invariance_violation(f).has_value(); }

LieElement reynolds_lie(const LieElement& f) {
  LieElement sum(f.rank());
  Integer order = 0;
  for_each_permutation(f.rank(), [&](const Permutation& sigma) {
    sum += apply_perm_lie(sigma, f);
    ++order;
  });
  return sum * Rational(1, order);
}

std::vector<Rational> kernel_basis_vector(std::size_t n, std::size_t a, std::size_t b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b) {
    throw DomainError("z-vector positions must be distinct and in 1..n");
  }
  std::vector<Rational> z(n);
  z[a - 1] = make_rational(static_cast<long>(b));
  z[b - 1] = -make_rational(static_cast<long>(a));
  return z;
}

KernelExpansion solve_weighted_kernel(std::span<const Rational> c) {
  Rational weighted = 0;
  for (std::size_t j = 0; j < c.size(); ++j) weighted += c[j] * static_cast<long>(j + 1);
  if (!is_zero(weighted)) {
    throw KernelError("sum_j j*c_j = " + to_string(weighted) + ", expected 0");
  }
  KernelExpansion out;
  for (std::size_t j = 1; j <= c.size(); ++j) {
    if (is_zero(c[j - 1])) continue;
    if (out.lead == 0) {
      out.lead = j;
      continue;
    }
    out.beta.emplace(j, -c[j - 1] / static_cast<long>(out.lead));
  }
  if (out.lead != 0 && out.beta.empty()) {
    throw ConsistencyError("a single nonzero coordinate cannot satisfy sum_j j*c_j = 0");
  }
  return out;
}

std::vector<EDecomposition> epsilon_form(const WreathElement& w) {
  const std::size_t n = w.rank();
  if (w.has_vpart()) throw DomainError("epsilon form is defined on the u-part only");
  if (n >= 2) {
    for (const auto& g : sn_generators(n)) {
      if (apply_perm_wreath(g, w) != w) {
        throw InvarianceError("wreath element is not invariant: violated by " +
                              to_cycle_string(g));
      }
    }
  }
  std::vector<EDecomposition> r(n, EDecomposition(n));
  if (n == 0) return r;
  // By invariance the u_1-coefficient determines every other coefficient.
  const Polynomial& target = w.upart()[0];
  std::vector<unsigned> degrees;
  for (const auto& [m, c] : target.terms()) degrees.push_back(m.degree());
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  ElementaryCache cache(n);
  std::vector<Polynomial> eps_u1;
  for (std::size_t j = 1; j <= n; ++j) eps_u1.push_back(elementary_avoiding(n, j - 1, 1));

  for (unsigned degree : degrees) {
    const Polynomial rhs_poly = target.homogeneous_component(degree);
    struct Unknown {
      std::size_t j;
      Monomial a;
    };
    std::vector<Unknown> unknowns;
    std::vector<Polynomial> columns;
    for (std::size_t j = 1; j <= n && j - 1 <= degree; ++j) {
      for (const auto& a : e_monomials_of_weight(n, degree - static_cast<unsigned>(j - 1))) {
        unknowns.push_back({j, a});
        columns.push_back(eps_u1[j - 1] * cache.expand(a));
      }
    }
    std::map<Monomial, std::size_t, LeadingFirst> row_of;
    auto row_index = [&](const Monomial& m) {
      return row_of.try_emplace(m, row_of.size()).first->second;
    };
    for (const auto& [m, c] : rhs_poly.terms()) row_index(m);
    for (const auto& col : columns) {
      for (const auto& [m, c] : col.terms()) row_index(m);
    }
    std::vector<linalg::SparseMatrix::Row> rows(row_of.size());
    for (std::size_t col = 0; col < columns.size(); ++col) {
      for (const auto& [m, c] : columns[col].terms()) rows[row_of.at(m)].emplace(col, c);
    }
    std::vector<Rational> rhs(row_of.size());
    for (const auto& [m, c] : rhs_poly.terms()) rhs[row_of.at(m)] = c;
    linalg::SparseMatrix system(columns.size());
    for (auto& row : rows) system.add_row(std::move(row));
    const auto solution = linalg::solve(system, rhs);
    if (!solution) {
      throw ConsistencyError("no epsilon form in x-degree " + std::to_string(degree) +
                             "; the epsilon_j should generate the invariant module");
    }
    for (std::size_t col = 0; col < unknowns.size(); ++col) {
      r[unknowns[col].j - 1].add_term(unknowns[col].a, (*solution)[col]);
    }
  }

  WreathElement check(n);
  for (std::size_t j = 1; j <= n; ++j) check += epsilon(n, j) * r[j - 1].expand();
  if (check != w) throw ConsistencyError("epsilon form does not reproduce its input");
  return r;
}

LieElement InvariantDecomposition::reconstruct() const {
  LieElement out = LieElement::sum_of_generators(n) * f1;
  for (const auto& [ij, q] : parts) {
    out += ad_action(generator_h_lie(n, ij.first, ij.second), q.expand());
  }
  return out;
}

InvariantDecomposition decompose_invariant(const LieElement& f) {
  const std::size_t n = f.rank();
  if (auto g = invariance_violation(f)) {
    throw InvarianceError("element is not S_" + std::to_string(n) +
                          "-invariant: violated by " + to_cycle_string(*g));
  }
  InvariantDecomposition out;
  out.n = n;
  out.f1 = n == 0 ? Rational(0) : f.linear()[0];
  const LieElement commutator_part = f - LieElement::sum_of_generators(n) * out.f1;
  const WreathElement w = embed(commutator_part);
  const std::vector<EDecomposition> r = epsilon_form(w);

  // alpha[a][j-1]: coefficient of epsilon_j * e^(a - delta_j).
  std::map<Monomial, std::vector<Rational>, LeadingFirst> alpha;
  for (std::size_t j = 1; j <= n; ++j) {
    for (const auto& [b, c] : r[j - 1].terms()) {
      Monomial a = b;
      ++a[j - 1];
      auto [it, inserted] = alpha.try_emplace(a, std::vector<Rational>(n));
      it->second[j - 1] = c;
    }
  }
  for (const auto& [a, c] : alpha) {
    Rational weighted = 0;
    for (std::size_t j = 0; j < n; ++j) weighted += c[j] * static_cast<long>(j + 1);
    if (!is_zero(weighted)) {
      throw ConsistencyError("sum_j j*alpha_aj != 0 for a = (" + to_string(a) +
                             "); the element is not in the commutator image");
    }
    const KernelExpansion expansion = solve_weighted_kernel(c);
    for (const auto& [jk, beta] : expansion.beta) {
      Monomial exponent = a;
      --exponent[expansion.lead - 1];
      --exponent[jk - 1];
      auto [it, inserted] =
          out.parts.try_emplace({expansion.lead, jk}, EDecomposition(n));
      it->second.add_term(exponent, beta);
    }
  }
  std::erase_if(out.parts, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

bool verify_decomposition(const InvariantDecomposition& d, const LieElement& f) {
  if (d.n != f.rank()) return false;
  for (const auto& [ij, q] : d.parts) {
    if (!is_symmetric(q.expand())) return false;
  }
  return d.reconstruct() == f;
}

bool verify_module_relation(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  if (!(1 <= i && i < j && j < k && k <= n)) {
    throw DomainError("relation indices need 1 <= i < j < k <= n");
  }
  auto c = [](std::size_t v) { return make_rational(static_cast<long>(v)); };
  const WreathElement combo = generator_h(n, i, j) * elementary_symmetric(n, k) * c(k) -
                              generator_h(n, i, k) * elementary_symmetric(n, j) * c(j) +
                              generator_h(n, j, k) * elementary_symmetric(n, i) * c(i);
  return combo.is_zero();
}

std::vector<LieElement> invariant_space_basis(std::size_t n, std::size_t d) {
  if (d == 0) throw DomainError("Lie algebra grades start at 1");
  const auto gens = sn_generators(n);
  std::vector<LieElement> basis;
  if (d == 1) {
    for (std::size_t k = 1; k <= n; ++k) basis.push_back(LieElement::generator(n, k));
  } else {
    for (const auto& b : commutator_basis(n, d)) basis.push_back(LieElement::basis(n, b));
  }
  // Coordinates of a homogeneous element in `basis` order.
  std::map<BasisCommutator, std::size_t, BasisOrder> position;
  if (d >= 2) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      position.emplace(basis[c].commutators().begin()->first, c);
    }
  }
  auto coordinates = [&](const LieElement& f) {
    std::map<std::size_t, Rational> coords;
    if (d == 1) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(f.linear()[k])) coords.emplace(k, f.linear()[k]);
      }
    } else {
      for (const auto& [b, c] : f.commutators()) coords.emplace(position.at(b), c);
    }
    return coords;
  };

  linalg::SparseMatrix system(basis.size());
  for (const auto& g : gens) {
    std::vector<linalg::SparseMatrix::Row> rows(basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
      for (const auto& [r, c] : coordinates(apply_perm_lie(g, basis[col]) - basis[col])) {
        rows[r].emplace(col, c);
      }
    }
    for (auto& row : rows) system.add_row(std::move(row));
  }

  std::vector<LieElement> out;
  for (const auto& v : linalg::nullspace(system)) {
    auto first = std::find_if(v.begin(), v.end(), [](const Rational& q) { return !is_zero(q); });
    const Rational scale = 1 / *first;
    LieElement f(n);
    for (std::size_t c = 0; c < v.size(); ++c) f += basis[c] * (v[c] * scale);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace metabelian
