#include "mcsa/linalg.hpp"

#include "mcsa/echelon.hpp"

namespace mcsa {

namespace {

RowEchelon echelon_of_rows(const RationalMatrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.add_row(m.row(i));
  return e;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) { return echelon_of_rows(m).rank(); }

std::vector<RationalMatrix> nullspace_basis(const RationalMatrix& m) {
  std::vector<RationalMatrix> out;
  for (const auto& v : echelon_of_rows(m).nullspace()) out.push_back(RationalMatrix::column(v));
  return out;
}

std::optional<std::vector<Rational>> in_span(const RationalMatrix& m, std::span<const RationalMatrix> basis) {
  for (const auto& b : basis) {
    if (b.rows() != m.rows() || b.cols() != m.cols()) throw DimensionError("in_span: shape mismatch");
  }
  const std::size_t k = basis.size();
  const std::size_t len = m.rows() * m.cols();
  // One equation per matrix entry: sum_k c_k basis_k[e] - t * m[e] = 0, with
  // the extra unknown t last. m is in the span iff some solution has t != 0.
  RowEchelon e(k + 1);
  std::vector<Rational> eq(k + 1);
  for (std::size_t idx = 0; idx < len; ++idx) {
    bool any = false;
    for (std::size_t j = 0; j < k; ++j) {
      eq[j] = basis[j].entries()[idx];
      any = any || !eq[j].is_zero();
    }
    eq[k] = -m.entries()[idx];
    any = any || !eq[k].is_zero();
    if (any) e.add_row(eq);
  }
  std::vector<Rational> coeffs(k);
  const auto pivots = e.pivot_columns();
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;  // forces t = 0
  for (const auto& row : e.basis()) {
    // Row reads c_p + sum_free a_f c_f + a_t t = 0; set free c_f = 0, t = 1.
    std::size_t p = 0;
    while (row[p].is_zero()) ++p;
    coeffs[p] = -row[k];
  }
  return coeffs;
}

RationalMatrix combine(std::span<const Rational> coeffs, std::span<const RationalMatrix> basis) {
  if (coeffs.size() != basis.size()) throw DimensionError("combine: coefficient count mismatch");
  if (basis.empty()) throw DimensionError("combine: empty basis");
  RationalMatrix out(basis.front().rows(), basis.front().cols());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!coeffs[k].is_zero()) out += basis[k] * coeffs[k];
  }
  return out;
}

std::vector<RationalMatrix> column_space_basis(std::span<const RationalMatrix> vectors, std::size_t dim) {
  RowEchelon e(dim);
  for (const auto& v : vectors) {
    if (v.cols() != 1 || v.rows() != dim) throw DimensionError("column_space_basis: expected column vectors");
    e.add_row(v.entries());
  }
  std::vector<RationalMatrix> out;
  for (const auto& row : e.basis()) out.push_back(RationalMatrix::column(row));
  return out;
}

}  // namespace mcsa
