#include "mcsa/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace mcsa {

namespace {

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("RationalMatrix: entry count does not match shape");
  }
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("RationalMatrix: ragged initializer");
    for (auto v : r) entries_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::unit(std::size_t rows, std::size_t cols, std::size_t row, std::size_t col) {
  RationalMatrix m(rows, cols);
  m.at(row, col);
  m(row, col) = 1;
  return m;
}

RationalMatrix RationalMatrix::column(std::span<const Rational> values) {
  return {values.size(), 1, std::vector<Rational>(values.begin(), values.end())};
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> values) {
  RationalMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

RationalMatrix RationalMatrix::from_vec(std::span<const Rational> values, std::size_t n) {
  if (values.size() != n * n) throw DimensionError("from_vec: length is not n^2");
  RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = values[i + n * j];
  }
  return m;
}

const Rational& RationalMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("RationalMatrix::at");
  return (*this)(r, c);
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x.is_zero(); });
}

std::size_t RationalMatrix::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const Rational& x) { return !x.is_zero(); }));
}

Rational RationalMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace: matrix is not square");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::vector<Rational> RationalMatrix::vec() const {
  std::vector<Rational> v;
  v.reserve(entries_.size());
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  }
  return v;
}

RationalMatrix RationalMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows,
                                     std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw DimensionError("block: out of range");
  RationalMatrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  }
  return b;
}

void RationalMatrix::set_block(std::size_t row0, std::size_t col0, const RationalMatrix& b) {
  if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) throw DimensionError("set_block: out of range");
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(row0 + i, col0 + j) = b(i, j);
  }
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) { return matmul(a, b); }

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

RationalMatrix matmul(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.cols() != y.rows()) {
    throw DimensionError("matmul: " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + " times " +
                         std::to_string(y.rows()) + "x" + std::to_string(y.cols()));
  }
  RationalMatrix p(x.rows(), y.cols());
  // Skipping zero entries of x matters: most operands here are block-sparse.
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const Rational& a = x(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) {
        if (!y(k, j).is_zero()) p(i, j) += a * y(k, j);
      }
    }
  }
  return p;
}

RationalMatrix commutator(const RationalMatrix& x, const RationalMatrix& y) {
  if (!x.is_square() || !y.is_square() || x.rows() != y.rows()) {
    throw DimensionError("commutator: operands must be square of equal size");
  }
  return matmul(x, y) - matmul(y, x);
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
      }
    }
  }
  return k;
}

RationalMatrix direct_sum(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix s(a.rows() + b.rows(), a.cols() + b.cols());
  s.set_block(0, 0, a);
  s.set_block(a.rows(), a.cols(), b);
  return s;
}

RationalMatrix power(const RationalMatrix& x, std::size_t k) {
  if (!x.is_square()) throw DimensionError("power: matrix is not square");
  RationalMatrix result = RationalMatrix::identity(x.rows());
  RationalMatrix base = x;
  while (k > 0) {
    if (k & 1U) result = matmul(result, base);
    k >>= 1U;
    if (k > 0) base = matmul(base, base);
  }
  return result;
}

}  // namespace mcsa
