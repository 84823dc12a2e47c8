#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcsa/rational.hpp"

namespace mcsa {

/// Raised when operand shapes are incompatible.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Integer literal rows, e.g. RationalMatrix{{1, -1}, {0, 2}}. Rows must agree in length.
  RationalMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static RationalMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static RationalMatrix identity(std::size_t n);
  /// The matrix unit E_{row,col} of the given shape.
  static RationalMatrix unit(std::size_t rows, std::size_t cols, std::size_t row, std::size_t col);
  static RationalMatrix column(std::span<const Rational> values);
  static RationalMatrix diagonal(std::span<const Rational> values);
  /// Inverse of vec(): rebuilds an n x n matrix from its column-major stacking.
  static RationalMatrix from_vec(std::span<const Rational> values, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  /// Bounds-checked access.
  const Rational& at(std::size_t r, std::size_t c) const;

  std::span<const Rational> entries() const { return entries_; }
  std::span<const Rational> row(std::size_t r) const {
    return std::span<const Rational>(entries_).subspan(r * cols_, cols_);
  }

  bool is_zero() const;
  std::size_t nonzero_count() const;
  Rational trace() const;
  RationalMatrix transpose() const;
  /// Column-major stacking of the entries (the vec operator).
  std::vector<Rational> vec() const;
  RationalMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  /// Writes `b` with its top-left corner at (row0, col0).
  void set_block(std::size_t row0, std::size_t col0, const RationalMatrix& b);

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& scalar);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

/// Exact product. Throws DimensionError unless x.cols() == y.rows().
RationalMatrix matmul(const RationalMatrix& x, const RationalMatrix& y);

/// XY - YX for square matrices of equal size.
RationalMatrix commutator(const RationalMatrix& x, const RationalMatrix& y);

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

/// Block-diagonal direct sum diag(a, b).
RationalMatrix direct_sum(const RationalMatrix& a, const RationalMatrix& b);

/// x^k for square x, k >= 0.
RationalMatrix power(const RationalMatrix& x, std::size_t k);

}  // namespace mcsa
