#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilsol/lie.hpp"

namespace nilsol {

/// delta(A)(e_i, e_j) for i < j, only nonzero values.
using TwoForm = std::map<std::pair<std::size_t, std::size_t>, Vector>;

/// delta(A)(X, Y) = -A[X,Y] + [AX,Y] + [X,AY]
TwoForm coboundary(const LieAlgebra& l, const Matrix& a);
bool is_derivation(const LieAlgebra& l, const Matrix& a);

struct DerivationBasis {
  std::size_t n = 0;
  std::vector<Matrix> basis;  // echelon form over the n^2 entries
  std::size_t dim() const { return basis.size(); }
  /// True if `a` lies in the span of the basis.
  bool spans(const Matrix& a) const;
  /// Coordinates of `a` in the basis, or nullopt if outside the span.
  std::optional<Vector> coordinates(const Matrix& a) const;
};

/// Der(L) as the exact nullspace of A -> delta(A). Matrix unknown (k, l) sits
/// at index k*n + l; A e_l = sum_k A(k,l) e_k.
DerivationBasis derivation_basis(const LieAlgebra& l);

/// b(psi1, psi2) = Tr(psi1 psi2)
Scalar trace_form(const Matrix& a, const Matrix& b);

struct RelationMatrix {
  std::size_t n = 0;
  /// Deduplicated f_i + f_j - f_k, one per nonzero c_{ij}^k, in order of
  /// first appearance.
  std::vector<std::vector<long>> rows;
  /// Indices into `rows` of a maximal independent subset (the columns of F).
  std::vector<std::size_t> selected;
  std::size_t rank() const { return selected.size(); }
};
RelationMatrix relation_matrix(const LieAlgebra& l);

enum class PreEinsteinStatus { Verified, DiagonalInsufficient };
std::string to_string(PreEinsteinStatus s);

struct PreEinsteinFailure {
  std::string reason;
  std::optional<Matrix> witness;  // a derivation psi with Tr(phi psi) != Tr psi
  Scalar lhs;                     // Tr(phi psi)
  Scalar rhs;                     // Tr psi
};

struct PreEinsteinResult {
  Vector mu;
  PreEinsteinStatus status = PreEinsteinStatus::DiagonalInsufficient;
  std::vector<std::pair<Scalar, std::size_t>> eigenvalues;  // ascending
  RelationMatrix relations;
  bool nilpotent = true;
  std::optional<PreEinsteinFailure> failure;
  Matrix phi() const { return Matrix::diagonal(mu); }
  bool positive() const;
};

/// Projects 1 onto Ker F^T along Col F exactly, then verifies the trace
/// condition against the full derivation algebra.
PreEinsteinResult pre_einstein_diagonal(const LieAlgebra& l);
PreEinsteinResult pre_einstein_diagonal(const LieAlgebra& l, const DerivationBasis& der);

/// nullopt if phi = diag(mu) is a derivation with Tr(phi psi) = Tr psi for all
/// basis derivations; otherwise the first violation.
std::optional<PreEinsteinFailure> verify_pre_einstein(const LieAlgebra& l,
                                                      const Vector& mu);
std::optional<PreEinsteinFailure> verify_pre_einstein(const LieAlgebra& l,
                                                      const Vector& mu,
                                                      const DerivationBasis& der);

struct WeightComponent {
  Scalar weight;
  std::vector<Matrix> parts;  // nonzero weight parts of the basis derivations
};

struct WeightDecomposition {
  std::vector<WeightComponent> components;  // ascending weight
  Scalar min_weight;
  bool nonnegative() const { return min_weight.sign() >= 0; }
  std::vector<Scalar> weights() const;
  /// A derivation of minimal weight (first part of the lowest component).
  const Matrix* min_weight_witness() const;
};

/// Splits each basis derivation by entry weights mu_i - mu_j. Throws
/// std::invalid_argument if the pre-Einstein result is not verified.
WeightDecomposition ad_weight_decomposition(const LieAlgebra& l,
                                            const PreEinsteinResult& pe,
                                            const DerivationBasis& der);

}  // namespace nilsol
