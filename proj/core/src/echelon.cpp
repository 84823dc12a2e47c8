#include "mcsa/echelon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace mcsa {

namespace {

const mpz_class* find_coeff(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const SparseEntry& e, std::size_t c) { return e.col < c; });
  if (it == row.end() || it->col != col) return nullptr;
  return &it->value;
}

// Returns sa*a - sb*b.
SparseRow combine(const SparseRow& a, const mpz_class& sa, const SparseRow& b, const mpz_class& sb) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  mpz_class tmp;
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->col < ib->col)) {
      out.push_back({ia->col, sa * ia->value});
      ++ia;
    } else if (ia == a.end() || ib->col < ia->col) {
      out.push_back({ib->col, -sb * ib->value});
      ++ib;
    } else {
      tmp = sa * ia->value - sb * ib->value;
      if (tmp != 0) out.push_back({ia->col, tmp});
      ++ia;
      ++ib;
    }
  }
  return out;
}

// Divides by the content and makes the leading coefficient positive.
void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().value < 0) g = -g;
  if (g != 1) {
    for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
  }
}

// row <- (p/g)*row - (x/g)*pivot_row, which cancels column `col` where row has x and pivot_row has p.
void eliminate(SparseRow& row, const mpz_class& x, const SparseRow& pivot_row) {
  const mpz_class& p = pivot_row.front().value;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), x.get_mpz_t());
  mpz_class sa = p / g;
  mpz_class sb = x / g;
  row = combine(row, sa, pivot_row, sb);
}

}  // namespace

SparseRow to_integer_row(std::span<const Rational> row) {
  mpz_class lcm = 1;
  for (const auto& x : row) {
    if (!x.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.value().get_den_mpz_t());
  }
  SparseRow out;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c].is_zero()) continue;
    const mpq_class& q = row[c].value();
    mpz_class v = lcm / q.get_den() * q.get_num();
    out.push_back({static_cast<std::uint32_t>(c), std::move(v)});
  }
  make_primitive(out);
  return out;
}

RowEchelon::RowEchelon(std::size_t cols) : cols_(cols), pivot_row_(cols, -1) {}

SparseRow RowEchelon::reduce(SparseRow row) const {
  // Eliminating with a stored row only touches that row's pivot and free
  // columns, so the pivot columns to clear are known up front.
  std::vector<std::uint32_t> hits;
  for (const auto& e : row) {
    if (e.col >= cols_) throw std::out_of_range("RowEchelon: column index out of range");
    if (pivot_row_[e.col] >= 0) hits.push_back(e.col);
  }
  for (auto c : hits) {
    const mpz_class* x = find_coeff(row, c);
    if (x == nullptr) continue;
    const mpz_class coeff = *x;
    eliminate(row, coeff, rows_[static_cast<std::size_t>(pivot_row_[c])]);
  }
  make_primitive(row);
  return row;
}

bool RowEchelon::add_row(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const std::uint32_t lead = row.front().col;
  for (auto& other : rows_) {
    const mpz_class* x = find_coeff(other, lead);
    if (x == nullptr) continue;
    const mpz_class coeff = *x;
    eliminate(other, coeff, row);
    make_primitive(other);
  }
  pivot_row_[lead] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool RowEchelon::add_row(std::span<const Rational> row) {
  if (row.size() != cols_) throw std::invalid_argument("RowEchelon: row length mismatch");
  return add_row(to_integer_row(row));
}

bool RowEchelon::is_independent(std::span<const Rational> row) const {
  if (row.size() != cols_) throw std::invalid_argument("RowEchelon: row length mismatch");
  return !reduce(to_integer_row(row)).empty();
}

std::vector<std::size_t> RowEchelon::pivot_columns() const {
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (pivot_row_[c] >= 0) pivots.push_back(c);
  }
  return pivots;
}

std::vector<std::vector<Rational>> RowEchelon::basis() const {
  std::vector<std::vector<Rational>> out;
  for (auto c : pivot_columns()) {
    const SparseRow& row = rows_[static_cast<std::size_t>(pivot_row_[c])];
    std::vector<Rational> dense(cols_);
    const mpz_class& p = row.front().value;
    for (const auto& e : row) dense[e.col] = Rational(e.value, p);
    out.push_back(std::move(dense));
  }
  return out;
}

std::vector<std::vector<Rational>> RowEchelon::nullspace() const {
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_row_[f] >= 0) continue;
    std::vector<Rational> v(cols_);
    v[f] = 1;
    for (const auto& row : rows_) {
      const mpz_class* x = find_coeff(row, f);
      if (x == nullptr) continue;
      v[row.front().col] = Rational(mpz_class(-*x), row.front().value);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace mcsa
