#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "mcsa/rational.hpp"

namespace mcsa {

/// One nonzero coefficient of a sparse integer row.
struct SparseEntry {
  std::uint32_t col;
  mpz_class value;
};

/// Sparse integer row, strictly increasing in `col`, no zero values.
using SparseRow = std::vector<SparseEntry>;

/// Incremental fraction-free reduced row echelon form over the integers.
///
/// Rows are fed one at a time and kept in reduced echelon form: every stored
/// row is primitive (content 1) with a positive leading coefficient, and every
/// pivot column is zero in all other stored rows. Reduction uses
/// cross-multiplication followed by gcd division, so no rational arithmetic
/// happens inside the elimination. The resulting row space, pivot set and
/// normalized basis are independent of the order rows are added in.
///
/// Rows are stored sparsely because the commutator systems that dominate the
/// workload have at most 2n nonzeros per equation and stay sparse once most
/// unknowns are pivoted away.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t nullity() const { return cols_ - rows_.size(); }

  /// Adds a row; returns true iff it was independent of the rows so far.
  bool add_row(SparseRow row);
  /// Dense rational row; denominators are cleared before reduction.
  bool add_row(std::span<const Rational> row);

  /// Would `row` be independent? Does not modify the echelon form.
  bool is_independent(std::span<const Rational> row) const;

  /// Pivot columns in ascending order.
  std::vector<std::size_t> pivot_columns() const;

  /// Row-space basis with unit pivots, ordered by pivot column.
  std::vector<std::vector<Rational>> basis() const;

  /// Kernel basis: one vector per free column, in ascending column order,
  /// with that free variable set to 1 and the other free variables to 0.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  SparseRow reduce(SparseRow row) const;

  std::size_t cols_;
  std::vector<SparseRow> rows_;
  std::vector<std::int64_t> pivot_row_;  // column -> row index, -1 when free
};

/// Converts a dense rational row to a primitive integer sparse row spanning the same line.
SparseRow to_integer_row(std::span<const Rational> row);

}  // namespace mcsa
