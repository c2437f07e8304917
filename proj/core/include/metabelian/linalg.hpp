#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "metabelian/rational.hpp"

namespace metabelian::linalg {

/// Row-sparse matrix over Q; rows map column index to a nonzero entry.
class SparseMatrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  explicit SparseMatrix(std::size_t cols) : cols_(cols) {}

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Row>& row_data() const noexcept { return rows_; }

  /// Appends a row; zero entries are dropped.
  void add_row(Row row);
  /// Appends a dense row.
  void add_row(std::span<const Rational> dense);

 private:
  std::size_t cols_;
  std::vector<Row> rows_;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination, scanning
/// columns left to right.
struct Echelon {
  std::vector<SparseMatrix::Row> rows;  // one per pivot, pivot entry 1
  std::vector<std::size_t> pivots;      // pivot column of each row
};

Echelon row_reduce(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);

/// Basis of {x : M x = 0}, one vector per free column (free entry 1).
std::vector<std::vector<Rational>> nullspace(const SparseMatrix& m);

/// A solution of M x = b with all free variables set to zero, or nullopt
/// when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const SparseMatrix& m,
                                           std::span<const Rational> rhs);

}  // namespace metabelian::linalg
