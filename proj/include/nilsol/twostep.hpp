#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilsol/derivations.hpp"
#include "nilsol/lie.hpp"
#include "nilsol/metric.hpp"

namespace nilsol {

/// Two-step nilpotent algebra of type (p, q): [X_i, X_j] = sum_k (J_k)_ij Z_k.
class TwoStepPresentation {
 public:
  TwoStepPresentation() = default;
  /// Throws std::invalid_argument unless every J_k is a skew q x q matrix and
  /// the J_k are linearly independent.
  TwoStepPresentation(std::size_t q, std::vector<Matrix> j);

  std::size_t q() const { return q_; }
  std::size_t p() const { return j_.size(); }
  std::size_t max_p() const { return q_ * (q_ - 1) / 2; }
  const std::vector<Matrix>& matrices() const { return j_; }
  const Matrix& j(std::size_t k) const { return j_[k]; }
  /// J_Z = sum_k z_k J_k
  Matrix j_of(const Vector& z) const;

  /// Basis X1..Xq, Z1..Zp.
  LieAlgebra algebra() const;

 private:
  std::size_t q_ = 0;
  std::vector<Matrix> j_;
};

/// Coordinates (J_ab, a < b) of a skew matrix.
Vector skew_coordinates(const Matrix& j);
Matrix skew_from_coordinates(std::size_t q, const Vector& v);
/// E_ab - E_ba
Matrix elementary_skew(std::size_t q, std::size_t a, std::size_t b);

LieAlgebra twostep_from_matrices(std::size_t q, const std::vector<Matrix>& j);

/// Presentation of an algebra whose bracket values span exactly the basis
/// vectors they touch, with no brackets on those vectors. `x` and `z` map the
/// presentation's X_i and Z_k back to algebra indices.
struct SplitPresentation {
  TwoStepPresentation presentation;
  std::vector<std::size_t> x;
  std::vector<std::size_t> z;
};
std::optional<SplitPresentation> presentation_of(const LieAlgebra& l);

/// Phi(X + Z) = X + 2Z
Matrix canonical_derivation(const TwoStepPresentation& p);

struct DerivationBlocks {
  Matrix f;  // q x q, action on the X layer modulo Z
  Matrix m;  // p x p, action on Z
  Matrix u;  // p x q, X -> Z part
};
/// Splits a derivation of p.algebra() into its blocks.
DerivationBlocks derivation_blocks(const TwoStepPresentation& p, const Matrix& psi);
Matrix from_blocks(const TwoStepPresentation& p, const DerivationBlocks& b);
/// The unique M with J_k F + F^T J_k = sum_r M_kr J_r, or nullopt when the
/// left side leaves span(J).
std::optional<Matrix> m_of_f(const TwoStepPresentation& p, const Matrix& f);

struct OpqResult {
  bool member = false;
  Scalar lambda;  // 2p / (q + 2p)
  std::optional<Matrix> witness;  // Tr = 0 and Tr on [n,n] != 0
  Scalar witness_trace_m;
  Scalar mu;   // (q + 2p) / (q + 4p), set for members
  Matrix phi;  // mu * Phi, set for members
  std::size_t der_dim = 0;
};
/// Membership in O(p, q): Tr psi on [n, n] is a fixed multiple of Tr psi on
/// all of Der.
OpqResult opq_membership(const TwoStepPresentation& p);
OpqResult opq_membership(const TwoStepPresentation& p, const DerivationBasis& der);

/// Skew K1, K2 with K1 J1 + K2 J2 = 2I and Tr(K_r J_s) = q delta_rs.
/// Throws std::invalid_argument unless p = 2 and q is even.
std::optional<std::pair<Matrix, Matrix>> opq_certificate_2_2n(const TwoStepPresentation& p);

/// Orthogonal complement of span(J) in o(q) under <J, K> = -Tr JK, as an
/// echelon basis in skew coordinates.
TwoStepPresentation dual_twostep(const TwoStepPresentation& p);

/// Given a derivation block F of p, the matching derivation of the dual with
/// F-block F^T. Throws std::invalid_argument if F is not admissible.
Matrix dual_derivation(const TwoStepPresentation& p, const TwoStepPresentation& dual,
                       const Matrix& f);

int radon_hurwitz(std::uint64_t q);

enum class Nonsingularity { Nonsingular, Singular, UnknownHeuristic };
std::string to_string(Nonsingularity s);

struct NonsingularityResult {
  Nonsingularity status = Nonsingularity::UnknownHeuristic;
  std::string method;
  std::optional<Vector> witness;  // Z with det J_Z = 0
  std::optional<std::pair<Rational, Rational>> root_interval;  // p = 2, x with det(J2 - x J1) = 0
  std::size_t samples = 0;
};
NonsingularityResult nonsingularity_check(const TwoStepPresentation& p,
                                          std::uint64_t seed = 0,
                                          std::size_t samples = 64);

struct DMinus1Result {
  TwoStepPresentation presentation;
  MetricLieAlgebra metric;
  Scalar mu_b1;  // on the rank block of J
  Scalar mu_b2;  // on Ker J
  Scalar c;
  Matrix phi;
  bool sum_identity = false;  // sum_k J_k^2 = 2(c I + F)
  bool layer_norms = false;   // Tr(J_r J_s^T) = 4(c + mu_i + mu_j) delta_rs
  std::optional<NilsolitonCertificate> certificate;
  // Closed form as printed next to the system: mu1, mu2 = mu1 + 1, -c.
  Scalar printed_mu1;
  Scalar printed_mu2;
  Scalar printed_minus_c;
  bool printed_matches = false;
  bool printed_matches_swapped = false;
};
/// Type (D - 1, q) nilsoliton with W the orthogonal complement of
/// J = J_2d (+) 0_l. Throws std::invalid_argument if q < 3, d < 1 or l = 0.
DMinus1Result build_dminus1(std::size_t q, std::size_t d);

}  // namespace nilsol
