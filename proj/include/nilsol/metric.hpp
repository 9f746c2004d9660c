#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilsol/derivations.hpp"
#include "nilsol/lie.hpp"

namespace nilsol {

/// Lie algebra with an inner product given by its Gram matrix in the algebra
/// basis.
struct MetricLieAlgebra {
  LieAlgebra algebra;
  Matrix gram;

  /// Orthonormal metric (gram = id).
  static MetricLieAlgebra orthonormal(LieAlgebra l);
  /// Throws std::invalid_argument unless gram is symmetric positive definite.
  static MetricLieAlgebra with_gram(LieAlgebra l, Matrix gram);
  bool is_orthonormal() const { return gram == Matrix::identity(algebra.dim()); }
  std::size_t dim() const { return algebra.dim(); }
  /// Metric adjoint A* = G^{-1} A^T G.
  Matrix adjoint(const Matrix& a) const;
  /// S(A) = (A + A*) / 2
  Matrix symmetric_part(const Matrix& a) const;
};

/// Xi(A1, A2) = sum over an orthonormal frame of <delta(A1), delta(A2)>,
/// evaluated through the inverse Gram matrix.
Scalar xi_form(const MetricLieAlgebra& m, const Matrix& a1, const Matrix& a2);
/// The matrix X with Xi(A, id) = sum_{kl} A(k,l) X(k,l).
Matrix xi_identity_gradient(const MetricLieAlgebra& m);

struct RicciData {
  Matrix ric;
  Scalar scalar_curvature;
};

/// Tr(ric A) = -1/4 Xi(A, id) for every A; nilpotent input only.
RicciData ricci_nilpotent(const MetricLieAlgebra& m);

struct SolvableGeometry {
  Matrix killing;  // B(e_i, e_j)
  Signature killing_signature;
  Vector mean_curvature;  // H with <H, X> = Tr ad_X
};
SolvableGeometry solvable_geometry(const MetricLieAlgebra& m);

/// ric + S(ad_H) + 1/2 B^ is the self-adjoint T with Tr(T A) = -1/4 Xi(A, id).
RicciData ricci_solvable(const MetricLieAlgebra& m);

struct NilsolitonCertificate {
  Scalar c;
  Matrix phi;
  bool unique = true;  // false only when c is not determined (abelian case)
};

struct NilsolitonResult {
  std::optional<NilsolitonCertificate> certificate;
  RicciData ricci;
  std::size_t solution_dim = 0;  // dimension of the solution set in (c, a)
  std::vector<std::string> diagnostics;
};

/// Decides ric - c id in span(Der) in the unknowns (c, a) by one exact
/// solve, then re-verifies ric = c id + phi and Tr(phi psi) = -c Tr psi.
NilsolitonResult nilsoliton_check(const MetricLieAlgebra& m);
NilsolitonResult nilsoliton_check(const MetricLieAlgebra& m, const DerivationBasis& der);
/// Independent re-check of a certificate; returns the failing condition.
std::optional<std::string> verify_nilsoliton(const MetricLieAlgebra& m,
                                             const NilsolitonCertificate& cert,
                                             const DerivationBasis& der);

/// Basis (H, e_1..e_n), [H, e_i] = phi e_i, <H, H> = Tr phi, H orthogonal to n.
MetricLieAlgebra rank_one_extension(const MetricLieAlgebra& m,
                                    const NilsolitonCertificate& cert);

struct EinsteinResult {
  bool is_einstein = false;
  Scalar c;
  bool ricci_flat = false;
};
EinsteinResult einstein_check(const MetricLieAlgebra& m);

/// The orthogonal complement of [g, g] is abelian.
bool standardness_check(const MetricLieAlgebra& m);

struct BracketIdentity {
  Scalar lhs;              // Tr((ric + ad_H + 1/2 B^) [psi, psi*])
  Scalar rhs;              // Xi(S, S)
  Scalar printed_rhs;      // 1/2 Xi(S, S)
  bool holds() const { return lhs == rhs; }
};
/// Throws std::invalid_argument if psi is not a derivation.
BracketIdentity derivation_bracket_identity(const MetricLieAlgebra& m, const Matrix& psi);

}  // namespace nilsol
