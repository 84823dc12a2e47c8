#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcsa/algebra.hpp"
#include "mcsa/matrix.hpp"

namespace mcsa {

class BrickError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Radical generator of a degree-3 brick in Loewy form: the blocks A (top
/// layer to middle, s x n1) and B (middle to bottom layer, n3 x s).
struct BrickGenerator {
  RationalMatrix top_to_middle;
  RationalMatrix middle_to_bottom;
};

/// Nilpotency-degree-3 algebra KI + Lambda + Sigma presented by its outer
/// layer sizes, middle size and generator blocks. Sigma is always the full
/// n3 x n1 socle block and is implicit.
///
/// Construction checks block shapes and the commutation relations
/// B_i A_j = B_j A_i, which make the generators commute modulo the socle.
class BrickForm {
 public:
  BrickForm(std::size_t n1, std::size_t s, std::size_t n3, std::vector<BrickGenerator> generators);

  std::size_t n1() const { return n1_; }
  std::size_t s() const { return s_; }
  std::size_t n3() const { return n3_; }
  std::size_t ambient_size() const { return n1_ + s_ + n3_; }
  const std::vector<BrickGenerator>& generators() const { return generators_; }

 private:
  std::size_t n1_;
  std::size_t s_;
  std::size_t n3_;
  std::vector<BrickGenerator> generators_;
};

/// The (2,5,2) brick with four generators.
BrickForm brick_e();
/// One-dimensional middle brick, as in the 5x5 parametric display (B = (0,1)^T).
BrickForm brick_d();
/// The same brick with B = (1,0)^T as in the rank-verification listing.
BrickForm brick_d_appendix();

/// Spans I, every generator (A_i in block (2,1), B_i in block (3,2)) and the
/// n3*n1 socle units of block (3,1) in row-major order.
MatrixAlgebra realize(const BrickForm& b);

/// Places b1's middle block above b2's; b1's generators come first. Requires
/// matching outer layers.
BrickForm stack(const BrickForm& b1, const BrickForm& b2);

/// Coefficient matrix of T A_j^Q = 0 (all j) followed by B_i^P T = 0 (all i)
/// in the s_P * s_Q unknowns of T, row-major in T.
RationalMatrix mixed_rigidity_system(const BrickForm& p, const BrickForm& q);

std::size_t mixed_rigidity_rank(const BrickForm& p, const BrickForm& q);

/// E^{*q} * D^{*r}.
struct StackSpec {
  std::size_t e_count = 0;
  std::size_t d_count = 0;

  std::size_t ambient_size() const { return 4 + 5 * e_count + d_count; }
  std::size_t expected_dimension() const { return 5 + 4 * e_count + d_count; }
  /// "E^2*D^3", "E^3", "E*D".
  std::string label() const;

  friend bool operator==(const StackSpec&, const StackSpec&) = default;
};

BrickForm stacked_form(const StackSpec& spec);
MatrixAlgebra build_stacked(const StackSpec& spec);

/// n - 4 = 5q + r with 0 <= r < 5. Requires n >= 14.
StackSpec courter_spec(std::int64_t n);
MatrixAlgebra build_courter(std::int64_t n);

/// 5 + ceil(4(n - 4) / 5). Requires n >= 14.
std::int64_t courter_dim(std::int64_t n);

}  // namespace mcsa
