#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilsol/linalg.hpp"

namespace nilsol {

/// One structure constant: [e_i, e_j] contains c * e_k.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Scalar c;
};

/// Nonzero Jacobi sum [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
struct JacobiViolation {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Vector residual;
};

class InvalidAlgebra : public std::runtime_error {
 public:
  explicit InvalidAlgebra(const std::string& what,
                          std::optional<JacobiViolation> v = std::nullopt)
      : std::runtime_error(what), violation(std::move(v)) {}
  std::optional<JacobiViolation> violation;
};

/// Finite-dimensional Lie algebra given by sparse structure constants over
/// Scalar. Only pairs i < j are stored.
class LieAlgebra {
 public:
  using Table = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

  LieAlgebra() = default;
  /// Canonicalizes the entries (sums duplicates, orients i < j, drops zeros)
  /// and, if `validate`, throws InvalidAlgebra on a Jacobi violation.
  static LieAlgebra build(std::size_t dim,
                          const std::vector<BracketEntry>& entries,
                          std::vector<std::string> labels = {},
                          bool validate = true);
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Table& table() const { return table_; }
  bool is_abelian() const { return table_.empty(); }
  std::vector<BracketEntry> entries() const;

  /// [e_i, e_j] for any i, j.
  SparseVector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad_{e_i} (column l = [e_i, e_l]).
  Matrix ad(std::size_t i) const;
  Matrix ad(const Vector& x) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  Table table_;
};

std::vector<std::string> default_labels(std::size_t dim, const std::string& stem = "e");
std::optional<JacobiViolation> jacobi_check(const LieAlgebra& l);

/// Linear subspace with a reduced row echelon basis, so equality is
/// structural.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

/// span{[a, b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b);

struct CentralSeries {
  std::vector<Subspace> terms;  // C_0 = L, C_1 = [L,L], ..., last is stable
  bool nilpotent = false;
  std::size_t nilpotency_class = 0;  // meaningful when nilpotent
  std::vector<std::size_t> dims() const;
};
CentralSeries central_series(const LieAlgebra& l);
bool is_nilpotent(const LieAlgebra& l);
/// Derived series reaches 0.
bool is_solvable(const LieAlgebra& l);

struct DerivedAndCenter {
  Subspace derived;
  Subspace center;
  std::size_t generator_count = 0;
};
DerivedAndCenter derived_and_center(const LieAlgebra& l);
Subspace center(const LieAlgebra& l);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
/// New basis f_j = sum_i P(i, j) e_i. Throws std::domain_error if P is
/// singular.
LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p);

}  // namespace nilsol
