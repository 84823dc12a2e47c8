#include <random>

#include <gtest/gtest.h>

#include "mcsa/algebra.hpp"
#include "mcsa/bricks.hpp"
#include "mcsa/linalg.hpp"
#include "test_support.hpp"

namespace mcsa {
namespace {

using testing::oracle_centralizer_dim;
using testing::random_commutative_algebra;
using testing::random_unimodular;

MatrixAlgebra diagonal_algebra(std::size_t n) {
  std::vector<RationalMatrix> span;
  for (std::size_t i = 0; i < n; ++i) span.push_back(RationalMatrix::unit(n, n, i, i));
  return MatrixAlgebra(n, span);
}

MatrixAlgebra scalars(std::size_t n) { return MatrixAlgebra(n, {RationalMatrix::identity(n)}); }

MatrixAlgebra full_matrix_algebra(std::size_t n) {
  std::vector<RationalMatrix> span;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) span.push_back(RationalMatrix::unit(n, n, i, j));
  }
  return MatrixAlgebra(n, span);
}

std::vector<std::size_t> chain_dims(const std::vector<SubspaceBasis>& f) {
  std::vector<std::size_t> dims;
  for (const auto& s : f) dims.push_back(s.size());
  return dims;
}

TEST(MatrixAlgebra, RedundantSpanIsFiltered) {
  const auto i2 = RationalMatrix::identity(2);
  const auto e12 = RationalMatrix::unit(2, 2, 0, 1);
  const MatrixAlgebra a(2, {i2, e12, i2 + e12, e12 * Rational(3)});
  EXPECT_EQ(a.dimension(), 2u);
  EXPECT_EQ(a.basis()[0], i2);
  EXPECT_EQ(a.basis()[1], e12);
  EXPECT_TRUE(a.contains_identity());
  EXPECT_FALSE(MatrixAlgebra(2, {e12}).contains_identity());
}

TEST(MatrixAlgebra, RejectsWrongShape) {
  EXPECT_THROW(MatrixAlgebra(2, {RationalMatrix::identity(3)}), std::exception);
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(diagonal_algebra(5)), 5u);
  EXPECT_EQ(dimension(realize(brick_e())), 9u);
  EXPECT_EQ(dimension(realize(brick_d())), 6u);
}

TEST(Centralizer, Examples) {
  EXPECT_EQ(dimension(centralizer(scalars(3))), 9u);
  const auto d4 = diagonal_algebra(4);
  EXPECT_TRUE(spans_equal(centralizer(d4), d4));
  EXPECT_EQ(dimension(centralizer(realize(brick_e()))), 9u);
  const auto d = realize(brick_d());
  EXPECT_TRUE(spans_equal(centralizer(d), d));
}

TEST(Centralizer, ContainsIdentityAndAlgebra) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_commutative_algebra(rng, 1 + t % 4);
    const auto c = centralizer(a);
    const auto n = a.ambient_size();
    const std::vector<RationalMatrix>& cb = c.basis();
    EXPECT_TRUE(in_span(RationalMatrix::identity(n), cb).has_value());
    for (const auto& b : a.basis()) EXPECT_TRUE(in_span(b, cb).has_value());
  }
}

TEST(Centralizer, MatchesBruteForceOracle) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    const auto a = random_commutative_algebra(rng, 1 + t % 4);
    ASSERT_TRUE(is_closed(a));
    ASSERT_TRUE(is_commutative(a));
    EXPECT_EQ(dimension(centralizer(a)), oracle_centralizer_dim(a.basis())) << "trial " << t;
  }
}

TEST(Centralizer, NonCommutativeInputMatchesOracle) {
  const auto full = full_matrix_algebra(3);
  EXPECT_EQ(dimension(centralizer(full)), 1u);
  const MatrixAlgebra pair(3, {RationalMatrix::unit(3, 3, 0, 1), RationalMatrix::unit(3, 3, 1, 2)});
  EXPECT_EQ(dimension(centralizer(pair)), oracle_centralizer_dim(pair.basis()));
}

TEST(Centralizer, ConjugationInvariance) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 15; ++t) {
    const auto a = random_commutative_algebra(rng, 2 + t % 3);
    const auto [p, p_inv] = random_unimodular(rng, a.ambient_size());
    EXPECT_EQ(dimension(centralizer(conjugate(a, p, p_inv))), dimension(centralizer(a)));
  }
}

TEST(Centralizer, DirectSumAdds) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 10; ++t) {
    const auto a1 = random_commutative_algebra(rng, 1 + t % 2);
    const auto a2 = random_commutative_algebra(rng, 2);
    EXPECT_EQ(dimension(centralizer(direct_sum(a1, a2))), dimension(centralizer(a1)) + dimension(centralizer(a2)));
  }
  const auto e = realize(brick_e());
  const auto d = realize(brick_d());
  EXPECT_EQ(dimension(centralizer(direct_sum(e, d))), 15u);
}

TEST(Centralizer, OfMaximalIsItselfUnderDoubleCentralizer) {
  const auto e = realize(brick_e());
  const auto c = centralizer(e);
  EXPECT_TRUE(spans_equal(c, e));
  EXPECT_TRUE(spans_equal(centralizer(c), c));
}

TEST(IsCommutative, Examples) {
  EXPECT_FALSE(is_commutative(full_matrix_algebra(2)));
  EXPECT_TRUE(is_commutative(realize(brick_e())));
  EXPECT_TRUE(is_commutative(realize(stack(brick_e(), brick_e()))));
}

TEST(IsClosed, Examples) {
  EXPECT_TRUE(is_closed(full_matrix_algebra(3)));
  const MatrixAlgebra open(2, {RationalMatrix::identity(2), RationalMatrix::unit(2, 2, 0, 1),
                               RationalMatrix::unit(2, 2, 1, 0)});
  EXPECT_FALSE(is_closed(open));
  const auto bad = first_unclosed_product(open);
  ASSERT_TRUE(bad.has_value());
  EXPECT_TRUE(is_closed(realize(brick_e())));
}

TEST(IsMaximalCommutative, Examples) {
  EXPECT_TRUE(is_maximal_commutative(diagonal_algebra(3)));
  EXPECT_FALSE(is_maximal_commutative(scalars(2)));
  EXPECT_FALSE(is_maximal_commutative(full_matrix_algebra(2)));
  EXPECT_TRUE(is_maximal_commutative(realize(brick_e())));
  EXPECT_TRUE(is_maximal_commutative(realize(brick_d())));
}

TEST(Radical, Examples) {
  EXPECT_TRUE(radical(diagonal_algebra(3)).empty());
  EXPECT_EQ(radical(realize(brick_e())).size(), 8u);
  EXPECT_EQ(radical(realize(brick_d())).size(), 5u);
}

TEST(Radical, ElementsAreNilpotentAndProductsVanish) {
  for (const auto& a : {realize(brick_e()), realize(brick_d()), realize(stack(brick_e(), brick_d()))}) {
    const auto j = radical(a);
    const auto n = a.ambient_size();
    for (const auto& x : j) EXPECT_TRUE(power(x, n).is_zero());
    // Any product of r radical elements kills K^n, where r is the nilpotency degree.
    const auto r = nilpotency_degree(a);
    ASSERT_EQ(r, 3u);
    for (const auto& x : j) {
      for (const auto& y : j) {
        for (const auto& z : j) EXPECT_TRUE(matmul(x, matmul(y, z)).is_zero());
      }
    }
  }
}

TEST(Radical, RequiresIdentity) {
  const MatrixAlgebra nil(2, {RationalMatrix::unit(2, 2, 0, 1)});
  EXPECT_THROW(radical(nil), AlgebraError);
}

TEST(IsLocal, Examples) {
  EXPECT_TRUE(is_local(realize(brick_e())));
  EXPECT_FALSE(is_local(diagonal_algebra(2)));
  EXPECT_TRUE(is_local(realize(brick_d())));
  EXPECT_TRUE(is_local(scalars(4)));
}

TEST(LoewyFiltration, Chains) {
  EXPECT_EQ(chain_dims(loewy_filtration(realize(brick_e()))), (std::vector<std::size_t>{9, 7, 2, 0}));
  EXPECT_EQ(chain_dims(loewy_filtration(realize(brick_d()))), (std::vector<std::size_t>{5, 3, 1, 0}));
  // K I_4 + K N with N^2 = 0 and rank N = 2.
  RationalMatrix n(4, 4);
  n(0, 2) = 1;
  n(1, 3) = 1;
  const MatrixAlgebra a(4, {RationalMatrix::identity(4), n});
  EXPECT_EQ(chain_dims(loewy_filtration(a)), (std::vector<std::size_t>{4, 2, 0}));
  EXPECT_THROW(loewy_filtration(diagonal_algebra(2)), AlgebraError);
}

TEST(LoewySignature, Examples) {
  EXPECT_EQ(loewy_signature(realize(brick_e())).layers, (std::vector<std::size_t>{2, 5, 2}));
  EXPECT_EQ(loewy_signature(realize(brick_d())).layers, (std::vector<std::size_t>{2, 2, 1}));
  EXPECT_EQ(loewy_signature(realize(stack(brick_e(), brick_e()))).layers, (std::vector<std::size_t>{2, 10, 2}));
  EXPECT_EQ(loewy_signature(realize(brick_e())).to_string(), "(2,5,2)");
}

TEST(LoewySignature, LayersSumToSize) {
  std::mt19937_64 rng(59);
  int local_count = 0;
  for (int t = 0; t < 40; ++t) {
    const auto a = random_commutative_algebra(rng, 1 + t % 4);
    if (!is_local(a)) continue;
    ++local_count;
    const auto sig = loewy_signature(a);
    EXPECT_EQ(sig.total(), a.ambient_size());
    for (auto layer : sig.layers) EXPECT_GE(layer, 1u);
    EXPECT_EQ(sig.length(), nilpotency_degree(a));
  }
  EXPECT_GT(local_count, 0);
}

TEST(LoewySignature, InvariantUnderConjugationAndBasisChange) {
  std::mt19937_64 rng(61);
  for (const auto& a : {realize(brick_e()), realize(brick_d())}) {
    const auto sig = loewy_signature(a);
    for (int t = 0; t < 10; ++t) {
      const auto [p, p_inv] = random_unimodular(rng, a.ambient_size());
      EXPECT_EQ(loewy_signature(conjugate(a, p, p_inv)), sig);
    }
    // Replace each basis element by a running sum: same span, different basis.
    std::vector<RationalMatrix> sums;
    RationalMatrix acc = RationalMatrix::zeros(a.ambient_size(), a.ambient_size());
    for (const auto& b : a.basis()) {
      acc += b;
      sums.push_back(acc);
    }
    EXPECT_EQ(loewy_signature(MatrixAlgebra(a.ambient_size(), sums)), sig);
  }
}

TEST(NilpotencyDegree, Examples) {
  EXPECT_EQ(nilpotency_degree(realize(brick_e())), 3u);
  EXPECT_EQ(nilpotency_degree(scalars(3)), 1u);
  EXPECT_EQ(nilpotency_degree(realize(brick_d())), 3u);
}

TEST(Conjugate, RejectsWrongInverse) {
  const auto e = realize(brick_e());
  EXPECT_THROW(conjugate(e, RationalMatrix::identity(9) * Rational(2), RationalMatrix::identity(9)), std::exception);
}

}  // namespace
}  // namespace mcsa
