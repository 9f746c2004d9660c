#include "nilsol/twostep.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "nilsol/polynomial.hpp"

namespace nilsol {

namespace {

std::size_t pair_index(std::size_t q, std::size_t a, std::size_t b) {
  // position of (a, b), a < b, in row-major order of the strict upper triangle
  return a * q - a * (a + 1) / 2 + (b - a - 1);
}

bool is_skew(const Matrix& j) {
  return j.is_square() && (j + j.transpose()).is_zero();
}

Scalar sqrt_rational(const Rational& r) {
  if (sgn(r) < 0) throw std::domain_error("square root of a negative rational");
  if (sgn(r) == 0) return Scalar();
  const Integer num = r.get_num() * r.get_den();
  if (!num.fits_ulong_p()) throw std::overflow_error("radicand too large");
  return Scalar::sqrt_of(num.get_ui()) / Scalar(Rational(r.get_den()));
}

Scalar pfaffian4(const Matrix& a) {
  return a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2);
}

bool all_rational(const TwoStepPresentation& p) {
  for (const auto& j : p.matrices()) {
    for (const auto& x : j.flat()) {
      if (!x.is_rational()) return false;
    }
  }
  return true;
}

}  // namespace

Vector skew_coordinates(const Matrix& j) {
  const std::size_t q = j.rows();
  Vector v(q * (q - 1) / 2);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = a + 1; b < q; ++b) v[pair_index(q, a, b)] = j(a, b);
  }
  return v;
}

Matrix skew_from_coordinates(std::size_t q, const Vector& v) {
  Matrix j(q, q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = a + 1; b < q; ++b) {
      j(a, b) = v[pair_index(q, a, b)];
      j(b, a) = -j(a, b);
    }
  }
  return j;
}

Matrix elementary_skew(std::size_t q, std::size_t a, std::size_t b) {
  Matrix j(q, q);
  j(a, b) = Scalar(1);
  j(b, a) = Scalar(-1);
  return j;
}

TwoStepPresentation::TwoStepPresentation(std::size_t q, std::vector<Matrix> j)
    : q_(q), j_(std::move(j)) {
  if (q_ == 0) throw std::invalid_argument("two-step presentation needs q >= 1");
  RowEchelon e(max_p());
  for (const auto& m : j_) {
    if (m.rows() != q_ || m.cols() != q_) {
      throw std::invalid_argument("J matrix is not q x q");
    }
    if (!is_skew(m)) throw std::invalid_argument("J matrix is not skew-symmetric");
    if (!e.insert(skew_coordinates(m))) {
      throw std::invalid_argument("J matrices are linearly dependent");
    }
  }
}

Matrix TwoStepPresentation::j_of(const Vector& z) const {
  Matrix out(q_, q_);
  for (std::size_t k = 0; k < j_.size(); ++k) {
    if (!z[k].is_zero()) out += j_[k] * z[k];
  }
  return out;
}

LieAlgebra TwoStepPresentation::algebra() const {
  std::vector<BracketEntry> entries;
  for (std::size_t k = 0; k < j_.size(); ++k) {
    for (std::size_t a = 0; a < q_; ++a) {
      for (std::size_t b = a + 1; b < q_; ++b) {
        if (!j_[k](a, b).is_zero()) entries.push_back({a, b, q_ + k, j_[k](a, b)});
      }
    }
  }
  std::vector<std::string> labels = default_labels(q_, "X");
  for (const auto& z : default_labels(j_.size(), "Z")) labels.push_back(z);
  // brackets land in span(Z), which is central, so Jacobi holds
  return LieAlgebra::build(q_ + j_.size(), entries, labels, false);
}

LieAlgebra twostep_from_matrices(std::size_t q, const std::vector<Matrix>& j) {
  return TwoStepPresentation(q, j).algebra();
}

std::optional<SplitPresentation> presentation_of(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::set<std::size_t> zs;
  for (const auto& [key, v] : l.table()) {
    for (const auto& [k, c] : v) zs.insert(k);
  }
  for (const auto& [key, v] : l.table()) {
    if (zs.count(key.first) || zs.count(key.second)) return std::nullopt;
  }
  SplitPresentation out;
  for (std::size_t i = 0; i < n; ++i) (zs.count(i) ? out.z : out.x).push_back(i);
  const std::size_t q = out.x.size();
  std::vector<std::size_t> x_pos(n), z_pos(n);
  for (std::size_t a = 0; a < q; ++a) x_pos[out.x[a]] = a;
  for (std::size_t k = 0; k < out.z.size(); ++k) z_pos[out.z[k]] = k;
  std::vector<Matrix> j(out.z.size(), Matrix(q, q));
  for (const auto& [key, v] : l.table()) {
    const std::size_t a = x_pos[key.first];
    const std::size_t b = x_pos[key.second];
    for (const auto& [k, c] : v) {
      j[z_pos[k]](a, b) = c;
      j[z_pos[k]](b, a) = -c;
    }
  }
  if (q == 0) return std::nullopt;
  try {
    out.presentation = TwoStepPresentation(q, std::move(j));
  } catch (const std::invalid_argument&) {
    return std::nullopt;  // bracket values do not span the Z vectors
  }
  return out;
}

Matrix canonical_derivation(const TwoStepPresentation& p) {
  Vector d(p.q() + p.p(), Scalar(1));
  for (std::size_t k = 0; k < p.p(); ++k) d[p.q() + k] = Scalar(2);
  return Matrix::diagonal(d);
}

DerivationBlocks derivation_blocks(const TwoStepPresentation& p, const Matrix& psi) {
  const std::size_t q = p.q();
  const std::size_t pp = p.p();
  DerivationBlocks b{Matrix(q, q), Matrix(pp, pp), Matrix(pp, q)};
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) b.f(i, j) = psi(i, j);
  }
  for (std::size_t r = 0; r < pp; ++r) {
    for (std::size_t j = 0; j < q; ++j) b.u(r, j) = psi(q + r, j);
    for (std::size_t k = 0; k < pp; ++k) b.m(r, k) = psi(q + r, q + k);
  }
  return b;
}

Matrix from_blocks(const TwoStepPresentation& p, const DerivationBlocks& b) {
  const std::size_t q = p.q();
  const std::size_t pp = p.p();
  Matrix psi(q + pp, q + pp);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) psi(i, j) = b.f(i, j);
  }
  for (std::size_t r = 0; r < pp; ++r) {
    for (std::size_t j = 0; j < q; ++j) psi(q + r, j) = b.u(r, j);
    for (std::size_t k = 0; k < pp; ++k) psi(q + r, q + k) = b.m(r, k);
  }
  return psi;
}

std::optional<Matrix> m_of_f(const TwoStepPresentation& p, const Matrix& f) {
  const std::size_t pp = p.p();
  std::vector<Vector> cols;
  for (const auto& j : p.matrices()) cols.push_back(skew_coordinates(j));
  const Matrix basis = Matrix::from_columns(cols);
  Matrix m(pp, pp);
  for (std::size_t k = 0; k < pp; ++k) {
    const Matrix g = p.j(k) * f + f.transpose() * p.j(k);
    const auto coords = solve(basis, skew_coordinates(g));
    if (!coords) return std::nullopt;
    for (std::size_t r = 0; r < pp; ++r) m(k, r) = (*coords)[r];
  }
  return m;
}

OpqResult opq_membership(const TwoStepPresentation& p) {
  return opq_membership(p, derivation_basis(p.algebra()));
}

OpqResult opq_membership(const TwoStepPresentation& p, const DerivationBasis& der) {
  const std::size_t q = p.q();
  const std::size_t pp = p.p();
  const Matrix phi = canonical_derivation(p);
  const Scalar t_phi(static_cast<long>(q + 2 * pp));
  OpqResult res;
  res.der_dim = der.dim();
  res.lambda = Scalar(static_cast<long>(2 * pp)) / t_phi;
  res.member = true;
  for (const auto& psi : der.basis) {
    const Scalar t = psi.trace();
    Scalar t1;
    for (std::size_t k = 0; k < pp; ++k) t1 += psi(q + k, q + k);
    if (t1 == res.lambda * t) continue;
    res.member = false;
    Matrix eta = psi - phi * (t / t_phi);
    Scalar eta_m;
    for (std::size_t k = 0; k < pp; ++k) eta_m += eta(q + k, q + k);
    res.witness = std::move(eta);
    res.witness_trace_m = eta_m;
    return res;
  }
  res.mu = t_phi / Scalar(static_cast<long>(q + 4 * pp));
  res.phi = phi * res.mu;
  return res;
}

std::optional<std::pair<Matrix, Matrix>> opq_certificate_2_2n(const TwoStepPresentation& p) {
  const std::size_t q = p.q();
  if (p.p() != 2 || q % 2 != 0) {
    throw std::invalid_argument("the (2, 2n) certificate needs p = 2 and q even");
  }
  const std::size_t dd = p.max_p();
  // K_r(i, m) as a signed unknown
  auto var = [&](std::size_t r, std::size_t i, std::size_t m) -> std::pair<std::size_t, int> {
    if (i < m) return {r * dd + pair_index(q, i, m), 1};
    return {r * dd + pair_index(q, m, i), -1};
  };
  Matrix sys(q * q + 4, 2 * dd);
  Vector rhs(q * q + 4);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const std::size_t row = i * q + j;
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t m = 0; m < q; ++m) {
          if (m == i || p.j(r)(m, j).is_zero()) continue;
          const auto [col, s] = var(r, i, m);
          sys(row, col) += p.j(r)(m, j) * Scalar(s);
        }
      }
      if (i == j) rhs[row] = Scalar(2);
    }
  }
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t s = 0; s < 2; ++s) {
      const std::size_t row = q * q + 2 * r + s;
      for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t m = 0; m < q; ++m) {
          if (m == i || p.j(s)(m, i).is_zero()) continue;
          const auto [col, sg] = var(r, i, m);
          sys(row, col) += p.j(s)(m, i) * Scalar(sg);
        }
      }
      if (r == s) rhs[row] = Scalar(static_cast<long>(q));
    }
  }
  const auto x = solve(sys, rhs);
  if (!x) return std::nullopt;
  const Vector k1(x->begin(), x->begin() + dd);
  const Vector k2(x->begin() + dd, x->end());
  return std::make_pair(skew_from_coordinates(q, k1), skew_from_coordinates(q, k2));
}

TwoStepPresentation dual_twostep(const TwoStepPresentation& p) {
  const std::size_t q = p.q();
  const std::size_t dd = p.max_p();
  std::vector<Vector> comp;
  if (p.p() == 0) {
    for (std::size_t i = 0; i < dd; ++i) comp.push_back(unit_vector(i, dd));
  } else {
    std::vector<Vector> rows;
    for (const auto& j : p.matrices()) rows.push_back(skew_coordinates(j));
    comp = row_space_basis(nullspace(Matrix::from_rows(rows)), dd);
  }
  std::vector<Matrix> js;
  for (const auto& v : comp) js.push_back(skew_from_coordinates(q, v));
  return TwoStepPresentation(q, std::move(js));
}

Matrix dual_derivation(const TwoStepPresentation& p, const TwoStepPresentation& dual,
                       const Matrix& f) {
  if (!m_of_f(p, f)) throw std::invalid_argument("F is not the block of a derivation");
  const Matrix ft = f.transpose();
  auto m = m_of_f(dual, ft);
  if (!m) throw std::logic_error("transposed block does not preserve the dual");
  return from_blocks(dual, {ft, *m, Matrix(dual.p(), dual.q())});
}

int radon_hurwitz(std::uint64_t q) {
  if (q == 0) throw std::invalid_argument("radon_hurwitz needs q >= 1");
  int b = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++b;
  }
  return (1 << (b % 4)) + 8 * (b / 4);
}

std::string to_string(Nonsingularity s) {
  switch (s) {
    case Nonsingularity::Nonsingular: return "nonsingular";
    case Nonsingularity::Singular: return "singular";
    case Nonsingularity::UnknownHeuristic: return "unknown_heuristic";
  }
  return "";
}

NonsingularityResult nonsingularity_check(const TwoStepPresentation& p,
                                          std::uint64_t seed, std::size_t samples) {
  const std::size_t q = p.q();
  const std::size_t pp = p.p();
  NonsingularityResult res;
  if (pp == 0) {
    res.status = Nonsingularity::Nonsingular;
    res.method = "no central directions";
    return res;
  }
  if (q % 2 == 1) {
    res.status = Nonsingularity::Singular;
    res.method = "odd q";
    res.witness = unit_vector(0, pp);
    return res;
  }
  if (pp == 1) {
    res.method = "determinant";
    if (determinant(p.j(0)).is_zero()) {
      res.status = Nonsingularity::Singular;
      res.witness = unit_vector(0, 1);
    } else {
      res.status = Nonsingularity::Nonsingular;
    }
    return res;
  }

  // J_k^T J_l + J_l^T J_k = 2 g_kl I with g positive definite
  {
    Matrix g(pp, pp);
    bool clifford = true;
    for (std::size_t k = 0; k < pp && clifford; ++k) {
      for (std::size_t l = k; l < pp && clifford; ++l) {
        const Matrix s = p.j(k).transpose() * p.j(l) + p.j(l).transpose() * p.j(k);
        const Scalar gkl = s(0, 0) / Scalar(2);
        clifford = s == Matrix::identity(q) * (gkl * Scalar(2));
        g(k, l) = gkl;
        g(l, k) = gkl;
      }
    }
    if (clifford && is_positive_definite(g)) {
      res.status = Nonsingularity::Nonsingular;
      res.method = "Clifford relations";
      return res;
    }
  }

  if (pp == 2 && all_rational(p)) {
    res.method = "Sturm count of det(J2 - x J1)";
    if (determinant(p.j(0)).is_zero()) {
      res.status = Nonsingularity::Singular;
      res.witness = unit_vector(0, 2);
      return res;
    }
    std::vector<Rational> xs, ys;
    for (std::size_t t = 0; t <= q; ++t) {
      const Rational x(static_cast<long>(t));
      xs.push_back(x);
      ys.push_back(determinant(p.j(1) - p.j(0) * Scalar(x)).to_rational());
    }
    const Polynomial poly = Polynomial::interpolate(xs, ys);
    if (count_real_roots(poly) == 0) {
      res.status = Nonsingularity::Nonsingular;
      return res;
    }
    res.status = Nonsingularity::Singular;
    res.root_interval = isolate_root(poly, Rational(1, 1024));
    const auto exact = rational_roots(poly);
    if (!exact.empty()) {
      res.witness = Vector{Scalar(Rational(-exact.front())), Scalar(1)};
      res.root_interval = std::make_pair(exact.front(), exact.front());
    }
    return res;
  }

  if (q == 4) {
    // det J_Z = Pf(J_Z)^2 and Pf is a quadratic form in Z
    res.method = "Pfaffian form definiteness";
    Matrix b(pp, pp);
    for (std::size_t k = 0; k < pp; ++k) b(k, k) = pfaffian4(p.j(k));
    for (std::size_t k = 0; k < pp; ++k) {
      for (std::size_t l = k + 1; l < pp; ++l) {
        const Scalar v = (pfaffian4(p.j(k) + p.j(l)) - b(k, k) - b(l, l)) / Scalar(2);
        b(k, l) = v;
        b(l, k) = v;
      }
    }
    const Signature s = signature(b);
    if (s.positive == pp || s.negative == pp) {
      res.status = Nonsingularity::Nonsingular;
      return res;
    }
    res.status = Nonsingularity::Singular;
    if (s.zero > 0) res.witness = nullspace(b).front();
    return res;
  }

  if (static_cast<int>(pp) > radon_hurwitz(q) - 1) {
    res.status = Nonsingularity::Singular;
    res.method = "Radon-Hurwitz bound";
    return res;
  }

  res.method = "seeded sampling";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (std::size_t s = 0; s < samples; ++s) {
    Vector z(pp);
    for (auto& x : z) x = Scalar(dist(rng));
    if (is_zero(z)) continue;
    ++res.samples;
    if (determinant(p.j_of(z)).is_zero()) {
      res.status = Nonsingularity::Singular;
      res.witness = z;
      return res;
    }
  }
  res.status = Nonsingularity::UnknownHeuristic;
  return res;
}

DMinus1Result build_dminus1(std::size_t q, std::size_t d) {
  if (q < 3) throw std::invalid_argument("type (D-1, q) needs q >= 3");
  if (d < 1 || 2 * d >= q) throw std::invalid_argument("need 1 <= d and l = q - 2d >= 1");
  const long ql = static_cast<long>(q);
  const long dl = static_cast<long>(d);
  const long l = ql - 2 * dl;

  // The two scalar equations in (mu1, mu2, c), both homogeneous:
  //   2d(c+mu1+mu2) + (l-1)(c+2mu2) + (c+mu2) = 0
  //   l(c+mu1+mu2) + (2d-1-1/d)(c+2mu1) + (c+mu1) = 0
  const Rational e = Rational(2 * dl - 1) - Rational(1, dl);
  Matrix sys(2, 3);
  sys(0, 0) = Scalar(2 * dl);
  sys(0, 1) = Scalar(2 * dl + 2 * (l - 1) + 1);
  sys(0, 2) = Scalar(2 * dl + l);
  sys(1, 0) = Scalar(Rational(l + 1) + 2 * e);
  sys(1, 1) = Scalar(l);
  sys(1, 2) = Scalar(Rational(l + 1) + e);
  const auto ker = nullspace(sys);
  if (ker.size() != 1 || ker[0][1].is_zero()) {
    throw std::logic_error("scalar system does not have a one-dimensional solution");
  }
  const Scalar norm(Rational((ql * ql - ql + 2) * dl - 2 * ql));
  const Scalar scale = norm / ker[0][1];

  DMinus1Result res;
  res.mu_b1 = ker[0][0] * scale;
  res.mu_b2 = norm;
  res.c = ker[0][2] * scale;
  res.printed_mu1 = norm;
  res.printed_mu2 = norm + Scalar(1);
  res.printed_minus_c = Scalar((2 * ql * ql - 3 * ql + 5) * dl - 4 * ql + 2);
  res.printed_matches = res.mu_b1 == res.printed_mu1 && res.mu_b2 == res.printed_mu2 &&
                        -res.c == res.printed_minus_c;
  res.printed_matches_swapped = res.mu_b1 == res.printed_mu2 &&
                                res.mu_b2 == res.printed_mu1 &&
                                -res.c == res.printed_minus_c;

  // Layers of J^perp, J = sum_a (E_{a,a+d} - E_{a+d,a}).
  struct Element {
    Matrix j;
    Scalar weight;
  };
  std::vector<Element> layer;
  const std::size_t r2 = 2 * d;
  const Scalar w11 = res.mu_b1 * Scalar(2);
  const Scalar w12 = res.mu_b1 + res.mu_b2;
  const Scalar w22 = res.mu_b2 * Scalar(2);
  for (std::size_t a = 0; a < r2; ++a) {
    for (std::size_t b = a + 1; b < r2; ++b) {
      if (b == a + d) continue;
      layer.push_back({elementary_skew(q, a, b), w11});
    }
  }
  for (std::size_t t = 1; t < d; ++t) {
    Matrix h(q, q);
    for (std::size_t s = 0; s < t; ++s) h += elementary_skew(q, s, s + d);
    h -= elementary_skew(q, t, t + d) * Scalar(static_cast<long>(t));
    layer.push_back({std::move(h), w11});
  }
  for (std::size_t a = 0; a < r2; ++a) {
    for (std::size_t b = r2; b < q; ++b) layer.push_back({elementary_skew(q, a, b), w12});
  }
  for (std::size_t a = r2; a < q; ++a) {
    for (std::size_t b = a + 1; b < q; ++b) layer.push_back({elementary_skew(q, a, b), w22});
  }

  std::vector<Matrix> js;
  Vector phi_diag;
  for (std::size_t i = 0; i < q; ++i) phi_diag.push_back(i < r2 ? res.mu_b1 : res.mu_b2);
  for (auto& el : layer) {
    const Scalar target = (res.c + el.weight) * Scalar(4);
    if (target.sign() <= 0) throw std::logic_error("layer norm is not positive");
    const Scalar fro = trace_of_product(el.j, el.j.transpose());
    js.push_back(el.j * sqrt_rational((target / fro).to_rational()));
    phi_diag.push_back(el.weight);
  }
  res.presentation = TwoStepPresentation(q, js);
  res.metric = MetricLieAlgebra::orthonormal(res.presentation.algebra());
  res.phi = Matrix::diagonal(phi_diag);

  Matrix sum(q, q);
  for (const auto& j : js) sum += j * j;
  Matrix f(q, q);
  for (std::size_t i = 0; i < q; ++i) f(i, i) = phi_diag[i] + res.c;
  res.sum_identity = sum == f * Scalar(2);

  res.layer_norms = true;
  for (std::size_t r = 0; r < js.size() && res.layer_norms; ++r) {
    for (std::size_t s = 0; s < js.size(); ++s) {
      const Scalar v = trace_of_product(js[r], js[s].transpose());
      const Scalar expect = r == s ? (res.c + layer[r].weight) * Scalar(4) : Scalar();
      if (!(v == expect)) {
        res.layer_norms = false;
        break;
      }
    }
  }

  const NilsolitonResult ns = nilsoliton_check(res.metric);
  res.certificate = ns.certificate;
  return res;
}

}  // namespace nilsol
