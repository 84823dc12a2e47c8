#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mcsa/matrix.hpp"

namespace mcsa {

/// Raised when an algebra violates a structural precondition (not closed,
/// not commutative, not local, radical element not nilpotent).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A subspace of M_n given by a linearly independent basis.
///
/// Construction filters the spanning list down to a basis, keeping the first
/// member that raises the rank. Closure under multiplication is not assumed;
/// see is_closed().
class MatrixAlgebra {
 public:
  MatrixAlgebra(std::size_t n, const std::vector<RationalMatrix>& spanning);

  std::size_t ambient_size() const { return n_; }
  const std::vector<RationalMatrix>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  bool contains_identity() const { return contains_identity_; }

 private:
  std::size_t n_;
  std::vector<RationalMatrix> basis_;
  bool contains_identity_ = false;
};

/// Loewy signature (n_1, ..., n_r): dimensions of successive quotients J^{i-1}K^n / J^i K^n.
struct LoewySignature {
  std::vector<std::size_t> layers;

  std::size_t length() const { return layers.size(); }
  std::size_t total() const;
  /// "(2,5,2)"
  std::string to_string() const;

  friend bool operator==(const LoewySignature&, const LoewySignature&) = default;
};

/// Column vectors spanning a subspace of K^n.
using SubspaceBasis = std::vector<RationalMatrix>;

std::size_t dimension(const MatrixAlgebra& a);

/// The n^2 x n^2 matrix of X -> BX - XB on column-major vec(X), i.e. I (x) B - B^T (x) I.
RationalMatrix commutator_operator(const RationalMatrix& b);

/// C(A) = {X : [X, B] = 0 for every basis element B}, from the nullspace of
/// the stacked commutator operators.
MatrixAlgebra centralizer(const MatrixAlgebra& a);

bool is_commutative(const MatrixAlgebra& a);

/// Index pair (i, j) of the first basis product B_i B_j outside the span, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_unclosed_product(const MatrixAlgebra& a);

bool is_closed(const MatrixAlgebra& a);

/// Commutative and equal to its centralizer.
bool is_maximal_commutative(const MatrixAlgebra& a);

/// Basis of rad(A) = {x in A : tr(xy) = 0 for all y in A} (characteristic 0).
/// Requires A closed, commutative and unital; throws AlgebraError if a
/// computed radical element is not nilpotent.
std::vector<RationalMatrix> radical(const MatrixAlgebra& a);

/// A / rad(A) is one-dimensional.
bool is_local(const MatrixAlgebra& a);

/// Bases of J^i K^n for i = 0..r, ending with the zero subspace. Requires is_local.
std::vector<SubspaceBasis> loewy_filtration(const MatrixAlgebra& a);

LoewySignature loewy_signature(const MatrixAlgebra& a);

/// Length of the Loewy signature; 1 when the radical is zero.
std::size_t nilpotency_degree(const MatrixAlgebra& a);

/// Same as above, reusing an already computed filtration.
LoewySignature loewy_signature(const std::vector<SubspaceBasis>& filtration);

/// Same ambient size and the same linear span.
bool spans_equal(const MatrixAlgebra& a, const MatrixAlgebra& b);

/// The algebra {P^{-1} B P : B in A}.
MatrixAlgebra conjugate(const MatrixAlgebra& a, const RationalMatrix& p, const RationalMatrix& p_inverse);

/// Block-diagonal direct sum A_1 (+) A_2 (unital when both summands are).
MatrixAlgebra direct_sum(const MatrixAlgebra& a1, const MatrixAlgebra& a2);

}  // namespace mcsa
