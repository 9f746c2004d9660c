#include <gtest/gtest.h>

#include "generators.hpp"
#include "nilsol/metric.hpp"

using namespace nilsol;
using nilsol::testing::algebra;
using nilsol::testing::heisenberg;

namespace {

Scalar q(long a, long b) { return Scalar::rational(a, b); }

MetricLieAlgebra h3() { return MetricLieAlgebra::orthonormal(heisenberg()); }

Matrix skew_part(const Matrix& a) { return (a - a.transpose()) * q(1, 2); }
Matrix sym_part(const Matrix& a) { return (a + a.transpose()) * q(1, 2); }

}  // namespace

TEST(Xi, Values) {
  EXPECT_EQ(xi_form(h3(), Matrix::identity(3), Matrix::identity(3)), Scalar(2));
  const auto der = derivation_basis(heisenberg());
  for (const auto& psi : der.basis) EXPECT_TRUE(xi_form(h3(), psi, psi).is_zero());
}

TEST(Xi, SymmetricSkewIdentity) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix s = sym_part(nilsol::testing::random_square(rng, 3));
    const Matrix k = skew_part(nilsol::testing::random_square(rng, 3));
    ASSERT_EQ(xi_form(h3(), s, k), -xi_form(h3(), s * k, Matrix::identity(3)));
    ASSERT_EQ(xi_form(h3(), s, k), xi_form(h3(), k * s, Matrix::identity(3)));
  }
}

TEST(Ricci, Heisenberg) {
  EXPECT_EQ(ricci_nilpotent(h3()).ric, Matrix::diagonal({q(-1, 2), q(-1, 2), q(1, 2)}));
  const auto scaled = MetricLieAlgebra::orthonormal(algebra(3, {{1, 2, 3, Scalar(2)}}));
  EXPECT_EQ(ricci_nilpotent(scaled).ric, Matrix::diagonal({-2, -2, 2}));
  EXPECT_TRUE(ricci_nilpotent(MetricLieAlgebra::orthonormal(LieAlgebra::abelian(3))).ric.is_zero());
  EXPECT_EQ(ricci_solvable(h3()).ric, ricci_nilpotent(h3()).ric);
}

TEST(Ricci, HyperbolicPlane) {
  const auto m = MetricLieAlgebra::orthonormal(algebra(2, {{1, 2, 2}}));
  EXPECT_EQ(ricci_solvable(m).ric, Matrix::identity(2) * Scalar(-1));
  EXPECT_THROW(ricci_nilpotent(m), std::invalid_argument);
}

TEST(RicciProperty, TraceIdentityOracle) {
  std::mt19937_64 rng(52);
  const LieAlgebra l = algebra(7, {{1, 2, 6}, {1, 3, 7}, {4, 5, 7}, {2, 6, 7}});
  const auto m = MetricLieAlgebra::orthonormal(l);
  const Matrix ric = ricci_nilpotent(m).ric;
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = nilsol::testing::random_square(rng, 7);
    ASSERT_EQ(trace_of_product(ric, a), xi_form(m, a, Matrix::identity(7)) * q(-1, 4));
    const Matrix k = skew_part(a);
    ASSERT_TRUE(trace_of_product(ric, k).is_zero());
    ASSERT_TRUE(xi_form(m, k, Matrix::identity(7)).is_zero());
  }
}

TEST(RicciProperty, NonOrthonormalGramMatchesFrame) {
  // P's columns are orthonormal for G = P^{-T} P^{-1}; the orthonormal
  // algebra change_basis(L, P) carries ric' with ric = P ric' P^{-1}.
  std::mt19937_64 rng(53);
  const LieAlgebra l = algebra(5, {{1, 2, 3}, {1, 3, 4}, {2, 3, 5}});
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix p = nilsol::testing::random_square(rng, 5);
    if (determinant(p).is_zero()) continue;
    const Matrix pinv = inverse(p);
    const auto m = MetricLieAlgebra::with_gram(l, pinv.transpose() * pinv);
    const auto frame = MetricLieAlgebra::orthonormal(change_basis(l, p));
    const Matrix expect = p * ricci_nilpotent(frame).ric * pinv;
    ASSERT_EQ(ricci_nilpotent(m).ric, expect);
    const Matrix a = nilsol::testing::random_square(rng, 5);
    ASSERT_EQ(trace_of_product(expect, a), xi_form(m, a, Matrix::identity(5)) * q(-1, 4));
  }
}

TEST(Nilsoliton, Heisenberg) {
  const auto res = nilsoliton_check(h3());
  ASSERT_TRUE(res.certificate.has_value());
  EXPECT_EQ(res.certificate->c, q(-3, 2));
  EXPECT_EQ(res.certificate->phi, Matrix::diagonal({1, 1, 2}));
  EXPECT_EQ(res.solution_dim, 0u);

  const auto ext = rank_one_extension(h3(), *res.certificate);
  EXPECT_EQ(ext.dim(), 4u);
  EXPECT_EQ(ext.gram(0, 0), Scalar(4));
  EXPECT_EQ(ricci_solvable(ext).ric, Matrix::identity(4) * q(-3, 2));
  const auto e = einstein_check(ext);
  EXPECT_TRUE(e.is_einstein);
  EXPECT_EQ(e.c, q(-3, 2));
  EXPECT_TRUE(standardness_check(ext));
  const auto geo = solvable_geometry(ext);
  EXPECT_EQ(geo.killing(0, 0), Scalar(6));
  EXPECT_EQ(geo.mean_curvature, (Vector{1, 0, 0, 0}));
  EXPECT_FALSE(einstein_check(h3()).is_einstein);
}

TEST(Nilsoliton, ScaledAndAbelian) {
  const auto scaled = MetricLieAlgebra::orthonormal(algebra(3, {{1, 2, 3, Scalar(2)}}));
  const auto res = nilsoliton_check(scaled);
  ASSERT_TRUE(res.certificate.has_value());
  EXPECT_EQ(res.certificate->c, Scalar(-6));
  EXPECT_EQ(res.certificate->phi, Matrix::diagonal({4, 4, 8}));
  EXPECT_EQ(rank_one_extension(scaled, *res.certificate).gram(0, 0), Scalar(16));

  const auto line = MetricLieAlgebra::orthonormal(LieAlgebra::abelian(1));
  const auto ab = nilsoliton_check(line);
  ASSERT_TRUE(ab.certificate.has_value());
  EXPECT_FALSE(ab.certificate->unique);
  const auto plane = rank_one_extension(line, {Scalar(-1), Matrix::identity(1), false});
  EXPECT_EQ(ricci_solvable(plane).ric, Matrix::identity(2) * Scalar(-1));
  const auto flat = einstein_check(MetricLieAlgebra::orthonormal(LieAlgebra::abelian(3)));
  EXPECT_TRUE(flat.is_einstein);
  EXPECT_TRUE(flat.ricci_flat);
}

TEST(Standardness, Basics) {
  EXPECT_TRUE(standardness_check(MetricLieAlgebra::orthonormal(LieAlgebra::abelian(3))));
  EXPECT_TRUE(standardness_check(MetricLieAlgebra::orthonormal(algebra(2, {{1, 2, 2}}))));
  // [H, X] = X, [K, Y] = Y with H, K orthogonal to the derived algebra: the
  // complement span(H, K) is abelian. Adding [H, K] = X breaks it.
  EXPECT_TRUE(standardness_check(MetricLieAlgebra::orthonormal(algebra(4, {{1, 3, 3}, {2, 4, 4}}))));
  EXPECT_FALSE(standardness_check(
      MetricLieAlgebra::orthonormal(algebra(4, {{1, 3, 3}, {2, 4, 4}, {1, 2, 3}}, false))));
}

TEST(BracketIdentity, Examples) {
  // symmetric derivation and the rotation e1 -> e2 -> -e1
  auto sym = derivation_bracket_identity(h3(), Matrix::diagonal({1, 2, 3}));
  EXPECT_TRUE(sym.lhs.is_zero());
  EXPECT_TRUE(sym.holds());
  Matrix rot(3, 3);
  rot(1, 0) = Scalar(1);
  rot(0, 1) = Scalar(-1);
  auto r = derivation_bracket_identity(h3(), rot);
  EXPECT_TRUE(r.lhs.is_zero());
  EXPECT_TRUE(r.holds());

  Matrix e31(3, 3);
  e31(2, 0) = Scalar(1);
  const auto b = derivation_bracket_identity(h3(), e31);
  EXPECT_EQ(b.lhs, Scalar(1));
  EXPECT_EQ(b.rhs, Scalar(1));

  const auto ext = rank_one_extension(h3(), *nilsoliton_check(h3()).certificate);
  const auto der = derivation_basis(ext.algebra);
  std::mt19937_64 rng(54);
  std::uniform_int_distribution<long> coef(-3, 3);
  bool saw_nonzero = false;
  for (int trial = 0; trial < 5; ++trial) {
    Matrix psi(4, 4);
    for (const auto& d : der.basis) psi += d * Scalar(coef(rng));
    const auto id = derivation_bracket_identity(ext, psi);
    ASSERT_TRUE(id.holds()) << id.lhs << " vs " << id.rhs;
    saw_nonzero = saw_nonzero || !id.lhs.is_zero();
  }
  EXPECT_TRUE(saw_nonzero);
  for (const auto& d : der.basis) ASSERT_TRUE(derivation_bracket_identity(ext, d).holds());
}
