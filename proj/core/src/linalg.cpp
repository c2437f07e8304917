#include "metabelian/linalg.hpp"

#include <algorithm>

#include "metabelian/errors.hpp"

namespace metabelian::linalg {

void SparseMatrix::add_row(Row row) {
  std::erase_if(row, [](const auto& kv) { return is_zero(kv.second); });
  if (!row.empty() && row.rbegin()->first >= cols_) {
    throw DimensionError("row entry beyond column count");
  }
  rows_.push_back(std::move(row));
}

void SparseMatrix::add_row(std::span<const Rational> dense) {
  if (dense.size() != cols_) throw DimensionError("dense row has wrong length");
  Row row;
  for (std::size_t c = 0; c < dense.size(); ++c) {
    if (!is_zero(dense[c])) row.emplace(c, dense[c]);
  }
  rows_.push_back(std::move(row));
}

namespace {

/// row -= factor * pivot_row
void axpy(SparseMatrix::Row& row, const Rational& factor, const SparseMatrix::Row& pivot_row) {
  for (const auto& [c, v] : pivot_row) {
    auto [it, inserted] = row.try_emplace(c, 0);
    it->second -= factor * v;
    if (is_zero(it->second)) row.erase(it);
  }
}

}  // namespace

Echelon row_reduce(const SparseMatrix& m) {
  // Forward elimination keyed by leading column, then back substitution.
  std::map<std::size_t, SparseMatrix::Row> by_lead;
  for (SparseMatrix::Row row : m.row_data()) {
    while (!row.empty()) {
      const std::size_t lead = row.begin()->first;
      auto it = by_lead.find(lead);
      if (it == by_lead.end()) {
        const Rational inv = 1 / row.begin()->second;
        for (auto& [c, v] : row) v *= inv;
        by_lead.emplace(lead, std::move(row));
        break;
      }
      const Rational factor = row.begin()->second;
      axpy(row, factor, it->second);
    }
  }
  Echelon out;
  for (auto it = by_lead.rbegin(); it != by_lead.rend(); ++it) {
    auto& row = it->second;
    // Clear entries in later pivot columns (already fully reduced).
    for (auto later = by_lead.rbegin(); later != it; ++later) {
      auto hit = row.find(later->first);
      if (hit == row.end()) continue;
      const Rational factor = hit->second;
      axpy(row, factor, later->second);
    }
  }
  for (auto& [lead, row] : by_lead) {
    out.pivots.push_back(lead);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::size_t rank(const SparseMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<std::vector<Rational>> nullspace(const SparseMatrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      auto it = e.rows[r].find(free);
      if (it != e.rows[r].end()) v[e.pivots[r]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const SparseMatrix& m,
                                           std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw DimensionError("right-hand side has wrong length");
  SparseMatrix augmented(m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseMatrix::Row row = m.row_data()[r];
    if (!is_zero(rhs[r])) row.emplace(m.cols(), rhs[r]);
    augmented.add_row(std::move(row));
  }
  const Echelon e = row_reduce(augmented);
  std::vector<Rational> x(m.cols());
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    auto it = e.rows[r].find(m.cols());
    if (it != e.rows[r].end()) x[e.pivots[r]] = it->second;
  }
  return x;
}

}  // namespace metabelian::linalg
