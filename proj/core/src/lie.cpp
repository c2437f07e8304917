#include "metabelian/lie.hpp"

#include <algorithm>
#include <functional>

#include "metabelian/errors.hpp"

namespace metabelian {

using Index = BasisCommutator::Index;

BasisCommutator BasisCommutator::make(Index i1, Index i2, std::vector<Index> tail) {
  std::sort(tail.begin(), tail.end());
  if (i1 == 0 || i2 == 0 || (!tail.empty() && tail.front() == 0)) {
    throw DomainError("commutator indices are 1-based");
  }
  if (!(i1 > i2)) throw DomainError("basis commutator needs i1 > i2");
  if (!tail.empty() && tail.front() < i2) {
    throw DomainError("basis commutator needs i2 <= every ad index");
  }
  return BasisCommutator{i1, i2, std::move(tail)};
}

Index BasisCommutator::max_index() const noexcept {
  Index m = std::max(i1, i2);
  if (!tail.empty()) m = std::max(m, tail.back());
  return m;
}

bool BasisOrder::operator()(const BasisCommutator& a, const BasisCommutator& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.i1 != b.i1) return a.i1 < b.i1;
  if (a.i2 != b.i2) return a.i2 < b.i2;
  return a.tail < b.tail;
}

LieElement LieElement::generator(std::size_t n, std::size_t k) {
  LieElement f(n);
  f.add_linear(k, 1);
  return f;
}

LieElement LieElement::basis(std::size_t n, const BasisCommutator& b) {
  LieElement f(n);
  f.add_basis(b, 1);
  return f;
}

LieElement LieElement::sum_of_generators(std::size_t n) {
  LieElement f(n);
  for (std::size_t k = 1; k <= n; ++k) f.add_linear(k, 1);
  return f;
}

bool LieElement::is_zero() const { return comm_.empty() && !has_linear_part(); }

bool LieElement::has_linear_part() const {
  return std::any_of(linear_.begin(), linear_.end(),
                     [](const Rational& c) { return !metabelian::is_zero(c); });
}

std::size_t LieElement::degree() const {
  if (!comm_.empty()) return comm_.rbegin()->first.degree();
  return has_linear_part() ? 1 : 0;
}

void LieElement::check_index(std::size_t k) const {
  if (k < 1 || k > rank()) {
    throw RankError("generator x" + std::to_string(k) + " outside 1.." +
                    std::to_string(rank()));
  }
}

void LieElement::add_linear(std::size_t k, const Rational& c) {
  check_index(k);
  linear_[k - 1] += c;
}

void LieElement::accumulate(const BasisCommutator& b, const Rational& c) {
  if (metabelian::is_zero(c)) return;
  auto [it, inserted] = comm_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (metabelian::is_zero(it->second)) comm_.erase(it);
  }
}

void LieElement::add_basis(const BasisCommutator& b, const Rational& c) {
  const auto checked = BasisCommutator::make(b.i1, b.i2, b.tail);
  check_index(checked.max_index());
  accumulate(checked, c);
}

void LieElement::add_commutator(Index a, Index b, std::vector<Index> tail,
                                const Rational& c) {
  if (metabelian::is_zero(c)) return;
  check_index(a);
  check_index(b);
  for (Index t : tail) check_index(t);
  if (a == b) return;
  Rational coef = c;
  if (a < b) {
    std::swap(a, b);
    coef = -coef;
  }
  std::sort(tail.begin(), tail.end());
  if (tail.empty() || b <= tail.front()) {
    accumulate(BasisCommutator{a, b, std::move(tail)}, coef);
    return;
  }
  // k = min(tail) < b < a. Jacobi with commuting ad factors:
  // [x_a, x_b, x_k] = [x_a, x_k, x_b] - [x_b, x_k, x_a].
  const Index k = tail.front();
  std::vector<Index> rest(tail.begin() + 1, tail.end());
  auto with = [&](Index extra) {
    std::vector<Index> t = rest;
    t.insert(std::upper_bound(t.begin(), t.end(), extra), extra);
    return t;
  };
  accumulate(BasisCommutator{a, k, with(b)}, coef);
  accumulate(BasisCommutator{b, k, with(a)}, -coef);
}

LieElement& LieElement::operator+=(const LieElement& other) {
  if (other.rank() != rank()) throw DimensionError("adding Lie elements of different rank");
  for (std::size_t i = 0; i < linear_.size(); ++i) linear_[i] += other.linear_[i];
  for (const auto& [b, c] : other.comm_) accumulate(b, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  if (other.rank() != rank()) throw DimensionError("subtracting Lie elements of different rank");
  for (std::size_t i = 0; i < linear_.size(); ++i) linear_[i] -= other.linear_[i];
  for (const auto& [b, c] : other.comm_) accumulate(b, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
  if (metabelian::is_zero(c)) {
    *this = LieElement(rank());
    return *this;
  }
  for (auto& q : linear_) q *= c;
  for (auto& [b, q] : comm_) q *= c;
  return *this;
}

LieElement bracket(const LieElement& f, const LieElement& g) {
  if (f.rank() != g.rank()) throw DimensionError("bracket of Lie elements of different rank");
  const std::size_t n = f.rank();
  LieElement out(n);
  const auto& lf = f.linear();
  const auto& lg = g.linear();
  for (std::size_t a = 0; a < n; ++a) {
    if (is_zero(lf[a])) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (is_zero(lg[b])) continue;
      out.add_commutator(static_cast<Index>(a + 1), static_cast<Index>(b + 1), {},
                         lf[a] * lg[b]);
    }
  }
  // [c, x_k] = c ad x_k and [x_k, c] = -c ad x_k; [F', F'] = 0.
  auto extend = [&](const LieElement& comm_side, const std::vector<Rational>& lin,
                    const Rational& sign) {
    for (const auto& [b, c] : comm_side.commutators()) {
      for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(lin[k])) continue;
        std::vector<Index> tail = b.tail;
        tail.push_back(static_cast<Index>(k + 1));
        out.add_commutator(b.i1, b.i2, std::move(tail), sign * c * lin[k]);
      }
    }
  };
  extend(f, lg, Rational(1));
  extend(g, lf, Rational(-1));
  return out;
}

LieElement ad_action(const LieElement& f, const Polynomial& p) {
  if (f.has_linear_part()) {
    throw DomainError("the K[X_n]-action is defined on the commutator ideal only");
  }
  if (p.nvars() != f.rank()) {
    throw DimensionError("polynomial over " + std::to_string(p.nvars()) +
                         " variables acting on rank " + std::to_string(f.rank()));
  }
  LieElement out(f.rank());
  for (const auto& [b, c] : f.commutators()) {
    for (const auto& [m, pc] : p.terms()) {
      std::vector<Index> tail = b.tail;
      for (std::size_t k = 0; k < m.nvars(); ++k) {
        tail.insert(tail.end(), m[k], static_cast<Index>(k + 1));
      }
      out.add_commutator(b.i1, b.i2, std::move(tail), c * pc);
    }
  }
  return out;
}

LieElement apply_perm_lie(const Permutation& sigma, const LieElement& f) {
  if (sigma.size() != f.rank()) {
    throw DimensionError("permutation of degree " + std::to_string(sigma.size()) +
                         " acting on rank " + std::to_string(f.rank()));
  }
  LieElement out(f.rank());
  for (std::size_t i = 0; i < f.rank(); ++i) {
    out.add_linear(sigma.image0(i) + 1, f.linear()[i]);
  }
  auto image = [&](Index i) { return static_cast<Index>(sigma(i)); };
  for (const auto& [b, c] : f.commutators()) {
    std::vector<Index> tail;
    tail.reserve(b.tail.size());
    for (Index t : b.tail) tail.push_back(image(t));
    out.add_commutator(image(b.i1), image(b.i2), std::move(tail), c);
  }
  return out;
}

LieElement grade(const LieElement& f, std::size_t d) {
  if (d == 0) throw DomainError("Lie algebra grades start at 1");
  LieElement out(f.rank());
  if (d == 1) {
    for (std::size_t k = 0; k < f.rank(); ++k) out.add_linear(k + 1, f.linear()[k]);
    return out;
  }
  for (const auto& [b, c] : f.commutators()) {
    if (b.degree() == d) out.add_basis(b, c);
  }
  return out;
}

std::vector<BasisCommutator> commutator_basis(std::size_t n, std::size_t d) {
  if (d < 2) throw DomainError("commutators have degree >= 2");
  std::vector<BasisCommutator> out;
  std::vector<Index> tail;
  std::function<void(Index, Index, Index, std::size_t)> fill =
      [&](Index i1, Index i2, Index from, std::size_t left) {
        if (left == 0) {
          out.push_back(BasisCommutator{i1, i2, tail});
          return;
        }
        for (Index t = from; t <= n; ++t) {
          tail.push_back(t);
          fill(i1, i2, t, left - 1);
          tail.pop_back();
        }
      };
  for (Index i1 = 2; i1 <= n; ++i1) {
    for (Index i2 = 1; i2 < i1; ++i2) fill(i1, i2, i2, d - 2);
  }
  std::sort(out.begin(), out.end(), BasisOrder{});
  return out;
}

std::string to_string(const BasisCommutator& b) {
  std::string out = "[x" + std::to_string(b.i1) + ",x" + std::to_string(b.i2);
  for (Index t : b.tail) out += ",x" + std::to_string(t);
  return out + "]";
}

std::string to_string(const LieElement& f) {
  std::string out;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& body) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(c);
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += body;
  };
  for (std::size_t k = 0; k < f.rank(); ++k) {
    if (!is_zero(f.linear()[k])) emit(f.linear()[k], "x" + std::to_string(k + 1));
  }
  for (const auto& [b, c] : f.commutators()) emit(c, to_string(b));
  return first ? "0" : out;
}

}  // namespace metabelian
