#include "nilsol/metric.hpp"

#include <stdexcept>

namespace nilsol {

namespace {

bool is_diagonal(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (r != c && !m(r, c).is_zero()) return false;
    }
  }
  return true;
}

// All ordered pairs of a two-form, antisymmetry filled in.
std::vector<std::vector<Vector>> full_table(const TwoForm& t, std::size_t n) {
  std::vector<std::vector<Vector>> out(n, std::vector<Vector>(n, Vector(n)));
  for (const auto& [key, v] : t) {
    out[key.first][key.second] = v;
    Vector w = v;
    for (auto& x : w) x = -x;
    out[key.second][key.first] = std::move(w);
  }
  return out;
}

// Contracts a table of vectors D(k,l) to sum_{kl} g^{ik} g^{jl} G D(k,l).
std::vector<std::vector<Vector>> raise(const MetricLieAlgebra& m,
                                       const std::vector<std::vector<Vector>>& d) {
  const std::size_t n = m.dim();
  const Matrix& g = m.gram;
  std::vector<std::vector<Vector>> lowered(n, std::vector<Vector>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      lowered[k][l] = is_zero(d[k][l]) ? Vector(n) : g * d[k][l];
    }
  }
  if (is_diagonal(g)) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(lowered[i][j])) continue;
        const Scalar w = (g(i, i) * g(j, j)).inverse();
        for (auto& x : lowered[i][j]) {
          if (!x.is_zero()) x *= w;
        }
      }
    }
    return lowered;
  }
  const Matrix ginv = inverse(g);
  std::vector<std::vector<Vector>> half(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (ginv(i, k).is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t a = 0; a < n; ++a) {
          if (!lowered[k][l][a].is_zero()) half[i][l][a] += ginv(i, k) * lowered[k][l][a];
        }
      }
    }
  }
  std::vector<std::vector<Vector>> out(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        if (ginv(j, l).is_zero()) continue;
        for (std::size_t a = 0; a < n; ++a) {
          if (!half[i][l][a].is_zero()) out[i][j][a] += ginv(j, l) * half[i][l][a];
        }
      }
    }
  }
  return out;
}

Matrix killing_raised(const MetricLieAlgebra& m, const Matrix& killing) {
  return m.is_orthonormal() ? killing : inverse(m.gram) * killing;
}

// Self-adjoint T with Tr(T A) = -1/4 Xi(A, id) on all self-adjoint A.
Matrix trace_identity_operator(const MetricLieAlgebra& m) {
  const Matrix x = xi_identity_gradient(m);
  const Matrix y = m.is_orthonormal() ? x : inverse(m.gram) * x;
  // R' = -1/8 (Y + Y^T), T = R' G
  Matrix r = (y + y.transpose()) * Scalar::rational(-1, 8);
  return m.is_orthonormal() ? r : r * m.gram;
}

}  // namespace

MetricLieAlgebra MetricLieAlgebra::orthonormal(LieAlgebra l) {
  const std::size_t n = l.dim();
  return {std::move(l), Matrix::identity(n)};
}

MetricLieAlgebra MetricLieAlgebra::with_gram(LieAlgebra l, Matrix gram) {
  if (gram.rows() != l.dim() || gram.cols() != l.dim()) {
    throw std::invalid_argument("gram size differs from dim");
  }
  if (!gram.is_symmetric()) throw std::invalid_argument("gram is not symmetric");
  if (!is_positive_definite(gram)) {
    throw std::invalid_argument("gram is not positive definite");
  }
  return {std::move(l), std::move(gram)};
}

Matrix MetricLieAlgebra::adjoint(const Matrix& a) const {
  if (is_orthonormal()) return a.transpose();
  return inverse(gram) * a.transpose() * gram;
}

Matrix MetricLieAlgebra::symmetric_part(const Matrix& a) const {
  return (a + adjoint(a)) * Scalar::rational(1, 2);
}

Scalar xi_form(const MetricLieAlgebra& m, const Matrix& a1, const Matrix& a2) {
  const std::size_t n = m.dim();
  const auto d1 = full_table(coboundary(m.algebra, a1), n);
  const auto d2 = raise(m, full_table(coboundary(m.algebra, a2), n));
  Scalar acc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) acc += dot(d1[i][j], d2[i][j]);
  }
  return acc;
}

Matrix xi_identity_gradient(const MetricLieAlgebra& m) {
  // delta(E_kl)(e_i, e_j) = -c_ij^l e_k + d_il [e_k, e_j] + d_jl [e_i, e_k];
  // pair it with C(i, j), the raised bracket, and use antisymmetry.
  const LieAlgebra& l = m.algebra;
  const std::size_t n = l.dim();
  std::vector<std::vector<Vector>> br(n, std::vector<Vector>(n, Vector(n)));
  for (const auto& [key, v] : l.table()) {
    br[key.first][key.second] = to_dense(v, n);
    for (const auto& [k, c] : v) br[key.second][key.first][k] = -c;
  }
  const auto cr = m.is_orthonormal() ? br : raise(m, br);
  Matrix x(n, n);
  for (const auto& [key, v] : l.table()) {
    const Vector& cij = cr[key.first][key.second];
    for (const auto& [col, c] : v) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!cij[k].is_zero()) x(k, col) -= Scalar(2) * c * cij[k];
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector b = l.bracket_basis(k, j);
      if (b.empty()) continue;
      for (std::size_t col = 0; col < n; ++col) {
        const Vector& c = cr[col][j];
        Scalar s;
        for (const auto& [a, v] : b) {
          if (!c[a].is_zero()) s += v * c[a];
        }
        if (!s.is_zero()) x(k, col) += Scalar(2) * s;
      }
    }
  }
  return x;
}

RicciData ricci_nilpotent(const MetricLieAlgebra& m) {
  if (!is_nilpotent(m.algebra)) {
    throw std::invalid_argument("ricci_nilpotent: algebra is not nilpotent");
  }
  RicciData r;
  r.ric = trace_identity_operator(m);
  r.scalar_curvature = r.ric.trace();
  return r;
}

SolvableGeometry solvable_geometry(const MetricLieAlgebra& m) {
  const std::size_t n = m.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(m.algebra.ad(i));
  SolvableGeometry g;
  g.killing = Matrix(n, n);
  Vector t(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = ads[i].trace();
    for (std::size_t j = i; j < n; ++j) {
      g.killing(i, j) = trace_of_product(ads[i], ads[j]);
      g.killing(j, i) = g.killing(i, j);
    }
  }
  g.killing_signature = signature(g.killing);
  g.mean_curvature = m.is_orthonormal() ? t : inverse(m.gram) * t;
  return g;
}

RicciData ricci_solvable(const MetricLieAlgebra& m) {
  const SolvableGeometry geo = solvable_geometry(m);
  const Matrix ad_h = m.algebra.ad(geo.mean_curvature);
  RicciData r;
  r.ric = trace_identity_operator(m) - m.symmetric_part(ad_h) -
          killing_raised(m, geo.killing) * Scalar::rational(1, 2);
  r.scalar_curvature = r.ric.trace();
  return r;
}

NilsolitonResult nilsoliton_check(const MetricLieAlgebra& m) {
  return nilsoliton_check(m, derivation_basis(m.algebra));
}

NilsolitonResult nilsoliton_check(const MetricLieAlgebra& m, const DerivationBasis& der) {
  const std::size_t n = m.dim();
  NilsolitonResult res;
  res.ricci = ricci_nilpotent(m);
  const std::size_t d = der.dim();
  // Columns: c, a_1..a_d; rows: the n^2 matrix entries.
  Matrix sys(n * n, d + 1);
  for (std::size_t i = 0; i < n; ++i) sys(i * n + i, 0) = Scalar(1);
  for (std::size_t t = 0; t < d; ++t) {
    const Vector& flat = der.basis[t].flat();
    for (std::size_t e = 0; e < n * n; ++e) sys(e, t + 1) = flat[e];
  }
  const Vector& rhs = res.ricci.ric.flat();
  auto sol = solve(sys, rhs);
  if (!sol) {
    res.diagnostics.push_back("ric - c*id lies outside Der for every c: no nilsoliton for this metric");
    return res;
  }
  const auto kernel = nullspace(sys);
  res.solution_dim = kernel.size();
  bool c_free = false;
  for (const auto& v : kernel) c_free = c_free || !v[0].is_zero();
  NilsolitonCertificate cert;
  if (c_free) {
    // c is not determined by the linear system (id is a derivation): fix c = -1.
    Matrix pinned(n * n + 1, d + 1);
    for (std::size_t r = 0; r < n * n; ++r) {
      for (std::size_t c = 0; c <= d; ++c) pinned(r, c) = sys(r, c);
    }
    pinned(n * n, 0) = Scalar(1);
    Vector rhs2 = rhs;
    rhs2.push_back(Scalar(-1));
    sol = solve(pinned, rhs2);
    cert.unique = false;
    res.diagnostics.push_back("c is not unique (id is a derivation); chose c = -1");
  }
  cert.c = (*sol)[0];
  cert.phi = res.ricci.ric - Matrix::identity(n) * cert.c;
  if (cert.c.sign() >= 0) {
    res.diagnostics.push_back("solution has c = " + cert.c.str() + " >= 0");
    return res;
  }
  if (auto bad = verify_nilsoliton(m, cert, der)) {
    res.diagnostics.push_back("certificate re-check failed: " + *bad);
    return res;
  }
  res.certificate = std::move(cert);
  return res;
}

std::optional<std::string> verify_nilsoliton(const MetricLieAlgebra& m,
                                             const NilsolitonCertificate& cert,
                                             const DerivationBasis& der) {
  const std::size_t n = m.dim();
  if (cert.c.sign() >= 0) return "c is not negative";
  if (!is_derivation(m.algebra, cert.phi)) return "phi is not a derivation";
  const RicciData r = ricci_nilpotent(m);
  if (!(r.ric == Matrix::identity(n) * cert.c + cert.phi)) return "ric != c id + phi";
  for (std::size_t t = 0; t < der.dim(); ++t) {
    const Matrix& psi = der.basis[t];
    if (!(trace_of_product(cert.phi, psi) == -cert.c * psi.trace())) {
      return "Tr(phi psi) != -c Tr psi for basis derivation " + std::to_string(t);
    }
  }
  return std::nullopt;
}

MetricLieAlgebra rank_one_extension(const MetricLieAlgebra& m,
                                    const NilsolitonCertificate& cert) {
  const std::size_t n = m.dim();
  if (cert.phi.rows() != n || cert.phi.cols() != n) {
    throw std::invalid_argument("certificate size differs from dim");
  }
  if (cert.c.sign() >= 0 || !is_derivation(m.algebra, cert.phi) ||
      !(ricci_nilpotent(m).ric == Matrix::identity(n) * cert.c + cert.phi)) {
    throw std::invalid_argument("invalid nilsoliton certificate");
  }
  std::vector<BracketEntry> entries;
  for (auto e : m.algebra.entries()) {
    ++e.i;
    ++e.j;
    ++e.k;
    entries.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!cert.phi(k, i).is_zero()) entries.push_back({0, i + 1, k + 1, cert.phi(k, i)});
    }
  }
  std::vector<std::string> labels{"H"};
  for (const auto& s : m.algebra.labels()) labels.push_back(s == "H" ? "H'" : s);
  Matrix gram(n + 1, n + 1);
  gram(0, 0) = cert.phi.trace();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) gram(r + 1, c + 1) = m.gram(r, c);
  }
  return MetricLieAlgebra::with_gram(LieAlgebra::build(n + 1, entries, labels),
                                     std::move(gram));
}

EinsteinResult einstein_check(const MetricLieAlgebra& m) {
  const RicciData r = ricci_solvable(m);
  EinsteinResult e;
  e.c = r.scalar_curvature / Scalar(static_cast<long>(m.dim()));
  e.is_einstein = r.ric == Matrix::identity(m.dim()) * e.c;
  e.ricci_flat = e.is_einstein && e.c.is_zero();
  return e;
}

bool standardness_check(const MetricLieAlgebra& m) {
  const std::size_t n = m.dim();
  const Subspace derived = derived_and_center(m.algebra).derived;
  Matrix rows(derived.dim(), n);
  for (std::size_t r = 0; r < derived.dim(); ++r) {
    const Vector lowered = m.gram * derived.basis()[r];
    for (std::size_t c = 0; c < n; ++c) rows(r, c) = lowered[c];
  }
  const auto complement = derived.dim() == 0 ? Subspace::whole(n).basis() : nullspace(rows);
  for (std::size_t a = 0; a < complement.size(); ++a) {
    for (std::size_t b = a + 1; b < complement.size(); ++b) {
      if (!is_zero(m.algebra.bracket(complement[a], complement[b]))) return false;
    }
  }
  return true;
}

BracketIdentity derivation_bracket_identity(const MetricLieAlgebra& m, const Matrix& psi) {
  if (!is_derivation(m.algebra, psi)) {
    throw std::invalid_argument("derivation_bracket_identity: psi is not a derivation");
  }
  const SolvableGeometry geo = solvable_geometry(m);
  const Matrix op = ricci_solvable(m).ric + m.algebra.ad(geo.mean_curvature) +
                    killing_raised(m, geo.killing) * Scalar::rational(1, 2);
  const Matrix star = m.adjoint(psi);
  const Matrix s = (psi + star) * Scalar::rational(1, 2);
  BracketIdentity b;
  b.lhs = trace_of_product(op, commutator(psi, star));
  b.rhs = xi_form(m, s, s);
  b.printed_rhs = b.rhs * Scalar::rational(1, 2);
  return b;
}

}  // namespace nilsol
