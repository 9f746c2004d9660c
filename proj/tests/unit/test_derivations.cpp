#include <gtest/gtest.h>

#include "generators.hpp"
#include "nilsol/derivations.hpp"

using namespace nilsol;
using nilsol::testing::algebra;
using nilsol::testing::heisenberg;

namespace {

Scalar q(long a, long b) { return Scalar::rational(a, b); }

Matrix elementary(std::size_t n, std::size_t r, std::size_t c) {
  Matrix m(n, n);
  m(r, c) = Scalar(1);
  return m;
}

}  // namespace

TEST(Coboundary, Heisenberg) {
  const LieAlgebra h = heisenberg();
  const TwoForm did = coboundary(h, Matrix::identity(3));
  ASSERT_EQ(did.size(), 1u);
  EXPECT_EQ(did.at({0, 1}), (Vector{0, 0, 1}));
  EXPECT_TRUE(coboundary(h, Matrix::diagonal({1, 1, 2})).empty());
  EXPECT_TRUE(is_derivation(h, elementary(3, 2, 0)));
  EXPECT_FALSE(is_derivation(h, elementary(3, 0, 2)));
}

TEST(DerivationBasis, Dimensions) {
  EXPECT_EQ(derivation_basis(heisenberg()).dim(), 6u);
  EXPECT_EQ(derivation_basis(LieAlgebra::abelian(4)).dim(), 16u);
  // Non-nilpotent [e1,e2] = e1: Der = inner derivations (dim 2).
  EXPECT_EQ(derivation_basis(algebra(2, {{1, 2, 1}})).dim(), 2u);
}

TEST(DerivationBasis, ClosedUnderCommutator) {
  const LieAlgebra l = algebra(7, {{1, 2, 6}, {1, 3, 7}, {4, 5, 7}, {2, 6, 7}});
  const DerivationBasis der = derivation_basis(l);
  for (const auto& a : der.basis) {
    ASSERT_TRUE(is_derivation(l, a));
    for (const auto& b : der.basis) ASSERT_TRUE(der.spans(commutator(a, b)));
  }
}

TEST(TraceForm, Values) {
  const Matrix phi = Matrix::diagonal({1, 1, 2});
  EXPECT_EQ(trace_form(phi, phi), Scalar(6));
  EXPECT_EQ(trace_form(phi, Matrix::identity(3)), Scalar(4));
  // Two derivations mapping generators into the center multiply to zero.
  EXPECT_EQ(trace_form(elementary(3, 2, 0), elementary(3, 2, 1)), Scalar(0));
}

TEST(PreEinstein, Heisenberg) {
  const auto pe = pre_einstein_diagonal(heisenberg());
  EXPECT_EQ(pe.status, PreEinsteinStatus::Verified);
  EXPECT_EQ(pe.mu, (Vector{q(2, 3), q(2, 3), q(4, 3)}));
  EXPECT_EQ(pe.relations.rank(), 1u);
  EXPECT_FALSE(verify_pre_einstein(heisenberg(), pe.mu).has_value());
  const auto bad = verify_pre_einstein(heisenberg(), {1, 1, 2});
  ASSERT_TRUE(bad.has_value());
  ASSERT_TRUE(bad->witness.has_value());
  EXPECT_NE(bad->lhs, bad->rhs);
}

TEST(PreEinstein, Abelian) {
  const auto pe = pre_einstein_diagonal(LieAlgebra::abelian(5));
  EXPECT_EQ(pe.status, PreEinsteinStatus::Verified);
  EXPECT_EQ(pe.mu, Vector(5, Scalar(1)));
}

TEST(PreEinstein, WeightsHeisenberg) {
  const LieAlgebra h = heisenberg();
  const auto der = derivation_basis(h);
  const auto pe = pre_einstein_diagonal(h, der);
  const auto wd = ad_weight_decomposition(h, pe, der);
  EXPECT_EQ(wd.weights(), (std::vector<Scalar>{0, q(2, 3)}));
  EXPECT_TRUE(wd.nonnegative());
  for (const auto& comp : wd.components) {
    for (const auto& part : comp.parts) EXPECT_TRUE(is_derivation(h, part));
  }
}

TEST(PreEinsteinProperty, DiagonalRescalingInvariance) {
  std::mt19937_64 rng(41);
  const LieAlgebra l = algebra(7, {{1, 2, 6}, {1, 3, 7}, {4, 5, 7}, {2, 6, 7}});
  const auto base = pre_einstein_diagonal(l);
  std::uniform_int_distribution<long> pick(1, 5);
  for (int trial = 0; trial < 5; ++trial) {
    Vector d;
    for (int i = 0; i < 7; ++i) d.push_back(q(pick(rng), pick(rng)));
    const auto pe = pre_einstein_diagonal(change_basis(l, Matrix::diagonal(d)));
    ASSERT_EQ(pe.mu, base.mu);
    ASSERT_EQ(pe.status, base.status);
  }
}

TEST(PreEinsteinProperty, DirectSumConcatenates) {
  const LieAlgebra a = heisenberg();
  const LieAlgebra b = algebra(4, {{1, 2, 3}, {1, 3, 4}});
  const auto pa = pre_einstein_diagonal(a);
  const auto pb = pre_einstein_diagonal(b);
  const auto ps = pre_einstein_diagonal(direct_sum(a, b));
  ASSERT_EQ(pb.status, PreEinsteinStatus::Verified);
  Vector joined = pa.mu;
  joined.insert(joined.end(), pb.mu.begin(), pb.mu.end());
  EXPECT_EQ(ps.mu, joined);
  EXPECT_EQ(ps.status, PreEinsteinStatus::Verified);
}

TEST(PreEinsteinProperty, RelationInvariants) {
  const LieAlgebra l = algebra(7, {{1, 2, 6}, {1, 3, 7}, {4, 5, 7}, {2, 6, 7}});
  const auto pe = pre_einstein_diagonal(l);
  for (const auto& row : pe.relations.rows) {
    Scalar s;
    long sum = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      s += Scalar(row[i]) * pe.mu[i];
      sum += row[i];
    }
    EXPECT_TRUE(s.is_zero());
    EXPECT_EQ(sum, 1);
  }
  for (const auto& x : pe.mu) EXPECT_TRUE(x.is_rational());
}
