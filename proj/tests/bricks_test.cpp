#include <gtest/gtest.h>

#include "mcsa/algebra.hpp"
#include "mcsa/bounds.hpp"
#include "mcsa/bricks.hpp"
#include "mcsa/linalg.hpp"
#include "test_support.hpp"

namespace mcsa {
namespace {

using testing::oracle_rank;

std::size_t socle_size(const BrickForm& b) { return b.n1() * b.n3(); }

TEST(BrickE, Shape) {
  const auto e = brick_e();
  EXPECT_EQ(e.generators().size(), 4u);
  EXPECT_EQ(e.n1(), 2u);
  EXPECT_EQ(e.s(), 5u);
  EXPECT_EQ(e.n3(), 2u);
  const auto& g = e.generators();
  EXPECT_EQ(matmul(g[1].middle_to_bottom, g[2].top_to_middle), matmul(g[2].middle_to_bottom, g[1].top_to_middle));
  EXPECT_EQ(realize(e).dimension(), 9u);
}

TEST(BrickE, ProductsFillBottomBlock) {
  // The products B_i A_j must span all of M_2 for the bottom layer to have size 2.
  const auto e = brick_e();
  const auto& g = e.generators();
  std::vector<RationalMatrix> products;
  for (const auto& x : g) {
    for (const auto& y : g) products.push_back(matmul(x.middle_to_bottom, y.top_to_middle));
  }
  RationalMatrix stacked(products.size(), 4);
  for (std::size_t i = 0; i < products.size(); ++i) {
    for (std::size_t k = 0; k < 4; ++k) stacked(i, k) = products[i].vec()[k];
  }
  EXPECT_EQ(oracle_rank(stacked), 4u);
}

TEST(BrickD, Shape) {
  const auto d = brick_d();
  EXPECT_EQ(d.generators().size(), 1u);
  EXPECT_EQ(d.s(), 1u);
  const auto a = realize(d);
  EXPECT_EQ(a.dimension(), 6u);
  EXPECT_TRUE(is_maximal_commutative(a));
  // The generator sits at (3,1) and (5,3) in one-based display coordinates.
  const auto& lambda = a.basis()[1];
  EXPECT_EQ(lambda(2, 0), Rational(1));
  EXPECT_EQ(lambda(4, 2), Rational(1));
  EXPECT_EQ(lambda.nonzero_count(), 2u);
}

TEST(BrickD, AppendixVariantIsConjugate) {
  const auto display = realize(brick_d());
  const auto appendix = realize(brick_d_appendix());
  EXPECT_TRUE(is_maximal_commutative(appendix));
  EXPECT_FALSE(spans_equal(display, appendix));
  RationalMatrix p = RationalMatrix::identity(5);
  p(3, 3) = 0;
  p(4, 4) = 0;
  p(3, 4) = 1;
  p(4, 3) = 1;
  EXPECT_TRUE(spans_equal(conjugate(display, p, p), appendix));
}

TEST(BrickForm, RejectsNonCommutingGenerators) {
  const BrickGenerator g1{RationalMatrix{{1, 0}}, RationalMatrix{{1}, {0}}};
  const BrickGenerator g2{RationalMatrix{{0, 1}}, RationalMatrix{{0}, {1}}};
  EXPECT_THROW(BrickForm(2, 1, 2, {g1, g2}), BrickError);
  const BrickGenerator wrong{RationalMatrix{{1, 0, 0}}, RationalMatrix{{1}, {0}}};
  EXPECT_THROW(BrickForm(2, 1, 2, {wrong}), BrickError);
}

TEST(Realize, Examples) {
  const auto e = realize(brick_e());
  EXPECT_EQ(e.ambient_size(), 9u);
  EXPECT_EQ(loewy_signature(e).layers, (std::vector<std::size_t>{2, 5, 2}));
  EXPECT_EQ(realize(brick_d()).ambient_size(), 5u);
  const auto empty = realize(BrickForm(1, 1, 1, {}));
  EXPECT_EQ(empty.ambient_size(), 3u);
  EXPECT_EQ(empty.dimension(), 2u);
}

TEST(Realize, ClosedCommutativeLocal) {
  for (const auto& b : {brick_e(), brick_d(), brick_d_appendix(), stack(brick_d(), brick_e())}) {
    const auto a = realize(b);
    EXPECT_TRUE(is_closed(a));
    EXPECT_TRUE(is_commutative(a));
    EXPECT_TRUE(is_local(a));
    EXPECT_LE(nilpotency_degree(a), 3u);
    EXPECT_EQ(a.dimension(), 1 + b.generators().size() + socle_size(b));
  }
}

TEST(Stack, DimensionIdentityForAllPairs) {
  const std::vector<BrickForm> bricks{brick_e(), brick_d()};
  for (const auto& b1 : bricks) {
    for (const auto& b2 : bricks) {
      const auto s = realize(stack(b1, b2));
      EXPECT_EQ(s.dimension(), realize(b1).dimension() + realize(b2).dimension() - (1 + socle_size(b1)));
      EXPECT_TRUE(is_maximal_commutative(s));
    }
  }
}

TEST(Stack, Examples) {
  const auto ee = realize(stack(brick_e(), brick_e()));
  EXPECT_EQ(ee.ambient_size(), 14u);
  EXPECT_EQ(ee.dimension(), 13u);
  const auto dd = realize(stack(brick_d(), brick_d()));
  EXPECT_EQ(dd.ambient_size(), 6u);
  EXPECT_EQ(dd.dimension(), 7u);
  const auto ed = realize(stack(brick_e(), brick_d()));
  EXPECT_EQ(ed.ambient_size(), 10u);
  EXPECT_EQ(ed.dimension(), 10u);
}

TEST(Stack, IntrinsicSignatureOfDoubleD) {
  // The D generators' products reach only one bottom direction.
  EXPECT_EQ(loewy_signature(realize(stack(brick_d(), brick_d()))).layers, (std::vector<std::size_t>{2, 3, 1}));
}

TEST(Stack, GeneratorOrderAndPadding) {
  const auto s = stack(brick_e(), brick_d());
  ASSERT_EQ(s.generators().size(), 5u);
  const auto& first = s.generators().front().top_to_middle;
  const auto& last = s.generators().back().top_to_middle;
  EXPECT_EQ(first.block(0, 0, 5, 2), brick_e().generators().front().top_to_middle);
  EXPECT_TRUE(first.block(5, 0, 1, 2).is_zero());
  EXPECT_TRUE(last.block(0, 0, 5, 2).is_zero());
  EXPECT_EQ(last.block(5, 0, 1, 2), brick_d().generators().front().top_to_middle);
  EXPECT_THROW(stack(brick_e(), BrickForm(1, 1, 1, {})), BrickError);
}

TEST(Stack, AssociativeUpToInvariants) {
  const auto left = realize(stack(stack(brick_e(), brick_e()), brick_d()));
  const auto right = realize(stack(brick_e(), stack(brick_e(), brick_d())));
  EXPECT_EQ(left.dimension(), right.dimension());
  EXPECT_EQ(dimension(centralizer(left)), dimension(centralizer(right)));
  EXPECT_EQ(loewy_signature(left), loewy_signature(right));
}

TEST(MixedRigidity, Ranks) {
  EXPECT_EQ(mixed_rigidity_rank(brick_e(), brick_e()), 25u);
  EXPECT_EQ(mixed_rigidity_rank(brick_e(), brick_d()), 5u);
  EXPECT_EQ(mixed_rigidity_rank(brick_d(), brick_e()), 5u);
  EXPECT_EQ(mixed_rigidity_rank(brick_d(), brick_d()), 1u);
  EXPECT_EQ(mixed_rigidity_rank(brick_d_appendix(), brick_d_appendix()), 1u);
}

TEST(MixedRigidity, SystemShapeAndOracleRank) {
  const auto sys = mixed_rigidity_system(brick_e(), brick_d());
  EXPECT_EQ(sys.cols(), 5u);
  EXPECT_EQ(oracle_rank(sys), 5u);
  EXPECT_EQ(mixed_rigidity_system(brick_e(), brick_e()).cols(), 25u);
}

TEST(BuildStacked, MaximalWithExpectedSignature) {
  for (std::size_t q = 1; q <= 4; ++q) {
    for (std::size_t r = 0; r <= 4; ++r) {
      const StackSpec spec{q, r};
      const auto a = build_stacked(spec);
      EXPECT_EQ(a.ambient_size(), 4 + 5 * q + r);
      EXPECT_EQ(a.dimension(), 5 + 4 * q + r);
      EXPECT_TRUE(is_maximal_commutative(a)) << spec.label();
      EXPECT_EQ(loewy_signature(a).layers, (std::vector<std::size_t>{2, 5 * q + r, 2})) << spec.label();
    }
  }
}

TEST(BuildStacked, Examples) {
  EXPECT_EQ(build_stacked({2, 0}).dimension(), 13u);
  const auto a = build_stacked({3, 4});
  EXPECT_EQ(a.ambient_size(), 23u);
  EXPECT_EQ(a.dimension(), 21u);
  EXPECT_TRUE(spans_equal(build_stacked({1, 0}), realize(brick_e())));
  EXPECT_THROW(build_stacked({0, 0}), BrickError);
}

TEST(StackSpec, Labels) {
  EXPECT_EQ((StackSpec{2, 3}).label(), "E^2*D^3");
  EXPECT_EQ((StackSpec{3, 0}).label(), "E^3");
  EXPECT_EQ((StackSpec{1, 1}).label(), "E*D");
}

TEST(Courter, SpecAndDimension) {
  EXPECT_EQ(courter_spec(14), (StackSpec{2, 0}));
  EXPECT_EQ(courter_spec(17), (StackSpec{2, 3}));
  EXPECT_EQ(courter_spec(28), (StackSpec{4, 4}));
  EXPECT_EQ(build_courter(14).dimension(), 13u);
  EXPECT_EQ(build_courter(17).dimension(), 16u);
  EXPECT_EQ(build_courter(28).dimension(), 25u);
  EXPECT_THROW(build_courter(13), BrickError);
  EXPECT_THROW(courter_dim(13), BrickError);
}

TEST(Courter, DimensionFormula) {
  EXPECT_EQ(courter_dim(14), 13);
  EXPECT_EQ(courter_dim(15), 14);
  EXPECT_EQ(courter_dim(19), 17);
  EXPECT_EQ(courter_dim(24), 21);
  EXPECT_EQ(courter_dim(104), 85);
  EXPECT_NEAR(static_cast<double>(courter_dim(104)) / 104.0, 0.8, 0.05);
  for (std::int64_t n = 14; n <= 40; ++n) {
    const auto a = build_courter(n);
    EXPECT_EQ(static_cast<std::int64_t>(a.ambient_size()), n);
    EXPECT_EQ(static_cast<std::int64_t>(a.dimension()), courter_dim(n)) << n;
    EXPECT_LT(courter_dim(n), n);
  }
}

TEST(Courter, ThreeLayerBoundNeverExceedsConstruction) {
  for (std::int64_t n = 14; n <= 40; ++n) EXPECT_LE(d_r(n, 3).value, courter_dim(n)) << n;
}

}  // namespace
}  // namespace mcsa
