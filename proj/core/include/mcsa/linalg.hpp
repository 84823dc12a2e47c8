#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mcsa/matrix.hpp"
#include "mcsa/rational.hpp"

namespace mcsa {

/// Exact rank via fraction-free elimination.
std::size_t rank(const RationalMatrix& m);

/// Basis of {v : Mv = 0} as cols x 1 column vectors.
///
/// Canonical: one vector per free column of the reduced echelon form, in
/// ascending column order, with that free variable 1 and the others 0.
std::vector<RationalMatrix> nullspace_basis(const RationalMatrix& m);

/// Coefficients c with m = sum_k c_k basis_k, or nullopt when m is outside
/// the span. For a dependent `basis` the coefficients of non-pivot members
/// are zero. Throws DimensionError when shapes differ.
std::optional<std::vector<Rational>> in_span(const RationalMatrix& m, std::span<const RationalMatrix> basis);

/// Linear combination sum_k coeffs_k * basis_k.
RationalMatrix combine(std::span<const Rational> coeffs, std::span<const RationalMatrix> basis);

/// Reduced echelon basis (unit pivots) of the span of the given column
/// vectors, returned as column vectors ordered by pivot.
std::vector<RationalMatrix> column_space_basis(std::span<const RationalMatrix> vectors, std::size_t dim);

}  // namespace mcsa
