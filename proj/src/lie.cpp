#include "nilsol/lie.hpp"

#include <algorithm>
#include <set>

namespace nilsol {

std::vector<std::string> default_labels(std::size_t dim, const std::string& stem) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

LieAlgebra LieAlgebra::build(std::size_t dim,
                             const std::vector<BracketEntry>& entries,
                             std::vector<std::string> labels, bool validate) {
  LieAlgebra l;
  l.dim_ = dim;
  if (labels.empty()) labels = default_labels(dim);
  if (labels.size() != dim) throw InvalidAlgebra("label count differs from dim");
  l.labels_ = std::move(labels);

  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>> acc;
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim) {
      throw InvalidAlgebra("bracket index out of range");
    }
    if (e.c.is_zero()) continue;
    if (e.i == e.j) throw InvalidAlgebra("nonzero bracket [x, x]");
    if (e.i < e.j) {
      acc[{e.i, e.j}][e.k] += e.c;
    } else {
      acc[{e.j, e.i}][e.k] -= e.c;
    }
  }
  for (auto& [key, terms] : acc) {
    SparseVector v;
    for (auto& [k, c] : terms) {
      if (!c.is_zero()) v.emplace_back(k, std::move(c));
    }
    if (!v.empty()) l.table_.emplace(key, std::move(v));
  }
  if (validate) {
    if (auto bad = jacobi_check(l)) {
      throw InvalidAlgebra("Jacobi identity fails for (" + l.labels_[bad->i] +
                               ", " + l.labels_[bad->j] + ", " +
                               l.labels_[bad->k] + ")",
                           bad);
    }
  }
  return l;
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return build(dim, {}); }

std::vector<BracketEntry> LieAlgebra::entries() const {
  std::vector<BracketEntry> out;
  for (const auto& [key, v] : table_) {
    for (const auto& [k, c] : v) out.push_back({key.first, key.second, k, c});
  }
  return out;
}

SparseVector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  if (i < j) {
    auto it = table_.find({i, j});
    return it == table_.end() ? SparseVector{} : it->second;
  }
  auto it = table_.find({j, i});
  if (it == table_.end()) return {};
  SparseVector v = it->second;
  for (auto& [k, c] : v) c = -c;
  return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim_);
  for (const auto& [key, v] : table_) {
    const auto [i, j] = key;
    // x_i y_j - x_j y_i
    Scalar coeff;
    if (!x[i].is_zero() && !y[j].is_zero()) coeff += x[i] * y[j];
    if (!x[j].is_zero() && !y[i].is_zero()) coeff -= x[j] * y[i];
    if (coeff.is_zero()) continue;
    for (const auto& [k, c] : v) out[k] += coeff * c;
  }
  return out;
}

Matrix LieAlgebra::ad(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t l = 0; l < dim_; ++l) {
    for (const auto& [k, c] : bracket_basis(i, l)) m(k, l) = c;
  }
  return m;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!x[i].is_zero()) m += ad(i) * x[i];
  }
  return m;
}

std::optional<JacobiViolation> jacobi_check(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  // [[e_i,e_j],e_k] as a sparse combination.
  auto outer = [&](std::size_t i, std::size_t j, std::size_t k) {
    SparseVector acc;
    for (const auto& [m, c] : l.bracket_basis(i, j)) {
      acc = axpy(acc, c, l.bracket_basis(m, k));
    }
    return acc;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        SparseVector r = outer(i, j, k);
        r = axpy(r, Scalar(1), outer(j, k, i));
        r = axpy(r, Scalar(1), outer(k, i, j));
        if (!r.empty()) return JacobiViolation{i, j, k, to_dense(r, n)};
      }
    }
  }
  return std::nullopt;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = row_space_basis(vectors, ambient);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<Vector> e;
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector v(ambient);
    v[i] = Scalar(1);
    e.push_back(std::move(v));
  }
  return span(e, ambient);
}

bool Subspace::contains(const Vector& v) const {
  RowEchelon e(ambient_);
  for (const auto& b : basis_) e.insert(b);
  return e.in_row_space(v);
}

bool Subspace::contains(const Subspace& other) const {
  RowEchelon e(ambient_);
  for (const auto& b : basis_) e.insert(b);
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vector& v) { return e.in_row_space(v); });
}

Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b) {
  std::vector<Vector> images;
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) {
      Vector z = l.bracket(x, y);
      if (!is_zero(z)) images.push_back(std::move(z));
    }
  }
  return Subspace::span(images, l.dim());
}

std::vector<std::size_t> CentralSeries::dims() const {
  std::vector<std::size_t> d;
  for (const auto& t : terms) d.push_back(t.dim());
  return d;
}

CentralSeries central_series(const LieAlgebra& l) {
  CentralSeries cs;
  const Subspace all = Subspace::whole(l.dim());
  cs.terms.push_back(all);
  while (cs.terms.back().dim() > 0) {
    Subspace next = bracket_span(l, cs.terms.back(), all);
    if (next.dim() == cs.terms.back().dim()) break;
    cs.terms.push_back(std::move(next));
  }
  cs.nilpotent = cs.terms.back().dim() == 0;
  cs.nilpotency_class = cs.nilpotent ? cs.terms.size() - 1 : 0;
  return cs;
}

bool is_nilpotent(const LieAlgebra& l) { return central_series(l).nilpotent; }

bool is_solvable(const LieAlgebra& l) {
  Subspace d = Subspace::whole(l.dim());
  while (d.dim() > 0) {
    Subspace next = bracket_span(l, d, d);
    if (next.dim() == d.dim()) return false;
    d = std::move(next);
  }
  return true;
}

Subspace center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  // Row (j, k): sum_i c_{ij}^k x_i = 0.
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> rows;
  for (const auto& [key, v] : l.table()) {
    const auto [i, j] = key;
    for (const auto& [k, c] : v) {
      rows[{j, k}].emplace_back(i, c);
      rows[{i, k}].emplace_back(j, -c);
    }
  }
  RowEchelon e(n);
  for (auto& [key, row] : rows) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    e.insert(std::move(row));
  }
  return Subspace::span(e.kernel(), n);
}

DerivedAndCenter derived_and_center(const LieAlgebra& l) {
  DerivedAndCenter out;
  std::vector<Vector> images;
  for (const auto& [key, v] : l.table()) images.push_back(to_dense(v, l.dim()));
  out.derived = Subspace::span(images, l.dim());
  out.center = center(l);
  out.generator_count = l.dim() - out.derived.dim();
  return out;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<BracketEntry> entries = a.entries();
  const std::size_t shift = a.dim();
  for (auto e : b.entries()) {
    e.i += shift;
    e.j += shift;
    e.k += shift;
    entries.push_back(std::move(e));
  }
  std::vector<std::string> labels = a.labels();
  for (const auto& s : b.labels()) {
    labels.push_back(std::find(labels.begin(), labels.end(), s) == labels.end()
                         ? s
                         : s + "'");
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
    labels = default_labels(a.dim() + b.dim());
  }
  return LieAlgebra::build(a.dim() + b.dim(), entries, labels, false);
}

LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p) {
  const std::size_t n = l.dim();
  if (p.rows() != n || p.cols() != n) {
    throw std::invalid_argument("change_basis: matrix size mismatch");
  }
  const Matrix pinv = inverse(p);
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector old = l.bracket(p.column(a), p.column(b));
      if (is_zero(old)) continue;
      const Vector coords = pinv * old;
      for (std::size_t k = 0; k < n; ++k) {
        if (!coords[k].is_zero()) entries.push_back({a, b, k, coords[k]});
      }
    }
  }
  return LieAlgebra::build(n, entries, l.labels(), false);
}

}  // namespace nilsol
