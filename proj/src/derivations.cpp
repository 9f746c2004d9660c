#include "nilsol/derivations.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace nilsol {

TwoForm coboundary(const LieAlgebra& l, const Matrix& a) {
  const std::size_t n = l.dim();
  if (a.rows() != n || a.cols() != n) {
    throw std::invalid_argument("coboundary: matrix size differs from dim");
  }
  std::vector<Vector> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = a.column(i);
  TwoForm out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = l.bracket(images[i], unit_vector(j, n));
      const Vector w = l.bracket(unit_vector(i, n), images[j]);
      const Vector u = a * to_dense(l.bracket_basis(i, j), n);
      for (std::size_t k = 0; k < n; ++k) v[k] += w[k] - u[k];
      if (!is_zero(v)) out.emplace(std::make_pair(i, j), std::move(v));
    }
  }
  return out;
}

bool is_derivation(const LieAlgebra& l, const Matrix& a) {
  return coboundary(l, a).empty();
}

bool DerivationBasis::spans(const Matrix& a) const {
  return coordinates(a).has_value();
}

std::optional<Vector> DerivationBasis::coordinates(const Matrix& a) const {
  if (a.rows() != n || a.cols() != n) return std::nullopt;
  Vector coords(basis.size());
  Matrix rebuilt(n, n);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    const Vector& flat = basis[t].flat();
    std::size_t lead = 0;
    while (flat[lead].is_zero()) ++lead;
    coords[t] = a.flat()[lead];
    if (!coords[t].is_zero()) rebuilt += basis[t] * coords[t];
  }
  if (!(rebuilt == a)) return std::nullopt;
  return coords;
}

DerivationBasis derivation_basis(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::map<Key, std::map<std::size_t, Scalar>> rows;
  auto var = [n](std::size_t k, std::size_t col) { return k * n + col; };

  for (const auto& [key, v] : l.table()) {
    const auto [a, b] = key;
    for (const auto& [k, c] : v) {
      // -A[e_a, e_b], component m: -A(m, k) c
      for (std::size_t m = 0; m < n; ++m) rows[{a, b, m}][var(m, k)] -= c;
    }
    for (const auto& [m, c] : v) {
      // [A e_i, e_j] picks up A(a, i) [e_a, e_b] when j = b, and
      // A(b, i) [e_b, e_a] when j = a.
      for (std::size_t i = 0; i < b; ++i) rows[{i, b, m}][var(a, i)] += c;
      for (std::size_t i = 0; i < a; ++i) rows[{i, a, m}][var(b, i)] -= c;
      // [e_i, A e_j] picks up A(b, j) [e_a, e_b] when i = a, and
      // A(a, j) [e_b, e_a] when i = b.
      for (std::size_t j = a + 1; j < n; ++j) rows[{a, j, m}][var(b, j)] += c;
      for (std::size_t j = b + 1; j < n; ++j) rows[{b, j, m}][var(a, j)] -= c;
    }
  }
  RowEchelon e(n * n);
  for (auto& [key, row] : rows) {
    SparseVector sv;
    for (auto& [col, c] : row) {
      if (!c.is_zero()) sv.emplace_back(col, std::move(c));
    }
    if (!sv.empty()) e.insert(std::move(sv));
  }
  DerivationBasis der;
  der.n = n;
  for (auto& v : row_space_basis(e.kernel(), n * n)) {
    der.basis.push_back(Matrix::from_flat(n, n, std::move(v)));
  }
  return der;
}

Scalar trace_form(const Matrix& a, const Matrix& b) { return trace_of_product(a, b); }

RelationMatrix relation_matrix(const LieAlgebra& l) {
  RelationMatrix rel;
  rel.n = l.dim();
  std::set<std::vector<long>> seen;
  RowEchelon e(rel.n);
  for (const auto& [key, v] : l.table()) {
    for (const auto& [k, c] : v) {
      std::vector<long> row(rel.n, 0);
      row[key.first] += 1;
      row[key.second] += 1;
      row[k] -= 1;
      if (!seen.insert(row).second) continue;
      Vector dense(rel.n);
      for (std::size_t i = 0; i < rel.n; ++i) dense[i] = Scalar(row[i]);
      if (e.insert(dense)) rel.selected.push_back(rel.rows.size());
      rel.rows.push_back(std::move(row));
    }
  }
  return rel;
}

std::string to_string(PreEinsteinStatus s) {
  return s == PreEinsteinStatus::Verified ? "VERIFIED" : "DIAGONAL_INSUFFICIENT";
}

bool PreEinsteinResult::positive() const {
  return std::all_of(mu.begin(), mu.end(),
                     [](const Scalar& x) { return x.sign() > 0; });
}

PreEinsteinResult pre_einstein_diagonal(const LieAlgebra& l) {
  return pre_einstein_diagonal(l, derivation_basis(l));
}

PreEinsteinResult pre_einstein_diagonal(const LieAlgebra& l, const DerivationBasis& der) {
  const std::size_t n = l.dim();
  PreEinsteinResult res;
  res.nilpotent = is_nilpotent(l);
  res.relations = relation_matrix(l);
  const std::size_t p = res.relations.rank();
  res.mu.assign(n, Scalar(1));
  if (p > 0) {
    // mu = 1 - F (F^T F)^{-1} 1_p
    Matrix f(n, p);
    for (std::size_t c = 0; c < p; ++c) {
      const auto& row = res.relations.rows[res.relations.selected[c]];
      for (std::size_t i = 0; i < n; ++i) f(i, c) = Scalar(row[i]);
    }
    const Matrix gram = f.transpose() * f;
    const auto y = solve(gram, Vector(p, Scalar(1)));
    if (!y) throw std::logic_error("relation Gram matrix is singular");
    const Vector fy = f * *y;
    for (std::size_t i = 0; i < n; ++i) res.mu[i] -= fy[i];
  }
  std::map<Scalar, std::size_t> mult;
  for (const auto& x : res.mu) ++mult[x];
  res.eigenvalues.assign(mult.begin(), mult.end());
  res.failure = verify_pre_einstein(l, res.mu, der);
  res.status = res.failure ? PreEinsteinStatus::DiagonalInsufficient
                           : PreEinsteinStatus::Verified;
  return res;
}

std::optional<PreEinsteinFailure> verify_pre_einstein(const LieAlgebra& l,
                                                      const Vector& mu) {
  return verify_pre_einstein(l, mu, derivation_basis(l));
}

std::optional<PreEinsteinFailure> verify_pre_einstein(const LieAlgebra& l,
                                                      const Vector& mu,
                                                      const DerivationBasis& der) {
  if (mu.size() != l.dim()) throw std::invalid_argument("mu has wrong length");
  if (!is_derivation(l, Matrix::diagonal(mu))) {
    return PreEinsteinFailure{"diag(mu) is not a derivation", std::nullopt, {}, {}};
  }
  for (const auto& psi : der.basis) {
    Scalar lhs;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (!psi(i, i).is_zero()) lhs += mu[i] * psi(i, i);
    }
    const Scalar rhs = psi.trace();
    if (!(lhs == rhs)) {
      return PreEinsteinFailure{"Tr(phi psi) != Tr(psi)", psi, lhs, rhs};
    }
  }
  return std::nullopt;
}

std::vector<Scalar> WeightDecomposition::weights() const {
  std::vector<Scalar> w;
  for (const auto& c : components) w.push_back(c.weight);
  return w;
}

const Matrix* WeightDecomposition::min_weight_witness() const {
  if (components.empty() || components.front().parts.empty()) return nullptr;
  return &components.front().parts.front();
}

WeightDecomposition ad_weight_decomposition(const LieAlgebra& l,
                                            const PreEinsteinResult& pe,
                                            const DerivationBasis& der) {
  if (pe.status != PreEinsteinStatus::Verified) {
    throw std::invalid_argument("weight decomposition needs a verified pre-Einstein derivation");
  }
  const std::size_t n = l.dim();
  std::map<Scalar, std::vector<Matrix>> by_weight;
  for (const auto& psi : der.basis) {
    std::map<Scalar, Matrix> parts;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (psi(i, j).is_zero()) continue;
        auto [it, fresh] = parts.try_emplace(pe.mu[i] - pe.mu[j], n, n);
        it->second(i, j) = psi(i, j);
      }
    }
    for (auto& [w, m] : parts) by_weight[w].push_back(std::move(m));
  }
  WeightDecomposition wd;
  for (auto& [w, ms] : by_weight) wd.components.push_back({w, std::move(ms)});
  if (!wd.components.empty()) wd.min_weight = wd.components.front().weight;
  return wd;
}

}  // namespace nilsol
