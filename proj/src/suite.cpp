#include "nilsol/suite.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "nilsol/catalog.hpp"
#include "nilsol/free_lie.hpp"
#include "nilsol/graph.hpp"
#include "nilsol/twostep.hpp"
#include "nilsol/verdict.hpp"

namespace nilsol {

namespace {

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed(what);
}

Scalar frac(long a, long b) { return Scalar::rational(a, b); }

Scalar num(std::size_t k) { return Scalar(static_cast<long>(k)); }

TwoStepPresentation draw_presentation(std::mt19937_64& rng, std::size_t p, std::size_t q,
                                      std::size_t* rejected) {
  std::uniform_int_distribution<long> entry(-2, 2);
  for (;;) {
    std::vector<Matrix> js;
    for (std::size_t k = 0; k < p; ++k) {
      Matrix j(q, q);
      for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = a + 1; b < q; ++b) {
          j(a, b) = Scalar(entry(rng));
          j(b, a) = -j(a, b);
        }
      }
      js.push_back(std::move(j));
    }
    try {
      return TwoStepPresentation(q, std::move(js));
    } catch (const std::invalid_argument&) {
      if (rejected) ++*rejected;
    }
  }
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> entry(-3, 3);
  Matrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = Scalar(entry(rng));
  }
  return a;
}

Vector diagonal_of(const Matrix& m) {
  Vector d(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) d[i] = m(i, i);
  return d;
}

// 1/4 sum_{i,j} g^ii g^jj <A[e_i,e_j] - [Ae_i,e_j] - [e_i,Ae_j], [e_i,e_j]>_G for
// a diagonal gram, summing only pairs with [e_i,e_j] != 0.
Scalar expanded_ricci_pairing(const MetricLieAlgebra& m, const Matrix& a) {
  const std::size_t n = m.dim();
  const LieAlgebra& l = m.algebra;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r != c && !m.gram(r, c).is_zero()) throw std::invalid_argument("gram is not diagonal");
    }
  }
  auto inner = [&](const Vector& x, const Vector& y) {
    Scalar s;
    for (std::size_t k = 0; k < n; ++k) {
      if (!x[k].is_zero() && !y[k].is_zero()) s += x[k] * y[k] * m.gram(k, k);
    }
    return s;
  };
  auto column = [&](std::size_t i) {
    Vector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = a(k, i);
    return v;
  };
  Scalar total;
  for (const auto& [key, sv] : l.table()) {
    const auto [i, j] = key;
    const Vector b = to_dense(sv, n);
    Vector lhs = a * b;
    const Vector ai = column(i);
    const Vector aj = column(j);
    const Vector t1 = l.bracket(ai, unit_vector(j, n));
    const Vector t2 = l.bracket(unit_vector(i, n), aj);
    for (std::size_t k = 0; k < n; ++k) lhs[k] -= t1[k] + t2[k];
    // (i, j) and (j, i) contribute equally
    total += inner(lhs, b) * Scalar(2) / (m.gram(i, i) * m.gram(j, j));
  }
  return total * frac(1, 4);
}

class Runner {
 public:
  void run(const std::string& name, int criterion, const std::function<std::string()>& body) {
    SuiteCheck c{name, criterion, false, ""};
    try {
      c.detail = body();
      c.passed = true;
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    checks.push_back(std::move(c));
  }
  std::vector<SuiteCheck> checks;
};

std::string show(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

Matrix canonical_in_algebra(const SplitPresentation& sp, std::size_t n) {
  Vector d(n);
  for (auto i : sp.x) d[i] = Scalar(1);
  for (auto k : sp.z) d[k] = Scalar(2);
  return Matrix::diagonal(d);
}

std::string pre_einstein_closed_form(const MetricLieAlgebra& m, const Scalar& expected_mu) {
  const auto sp = presentation_of(m.algebra);
  expect(sp.has_value(), "not a two-step presentation");
  const std::size_t p = sp->presentation.p();
  const std::size_t q = sp->presentation.q();
  const Scalar mu = num(q + 2 * p) / num(q + 4 * p);
  expect(mu == expected_mu, "(q+2p)/(q+4p) = " + mu.str() + ", expected " + expected_mu.str());
  const auto pe = pre_einstein_diagonal(m.algebra);
  expect(pe.status == PreEinsteinStatus::Verified, "pre-Einstein status " + to_string(pe.status));
  expect(pe.phi() == canonical_in_algebra(*sp, m.dim()) * mu,
         "phi = " + show(pe.mu) + " is not " + mu.str() + " Phi");
  return "type (" + std::to_string(p) + "," + std::to_string(q) + "), phi = " + mu.str() + " Phi";
}

void criterion1(Runner& r, const CatalogLookup& lookup) {
  const std::pair<const char*, Scalar> cases[] = {
      {"heis3", frac(2, 3)}, {"quat34", frac(5, 8)}, {"rigid35", frac(11, 17)}};
  for (const auto& [name, mu] : cases) {
    r.run(std::string("pre_einstein.") + name, 1,
          [&, name = std::string(name), mu = mu] { return pre_einstein_closed_form(lookup(name), mu); });
  }
}

void criterion2(Runner& r) {
  for (std::size_t n = 3; n <= 6; ++n) {
    r.run("graph.gnn0.n" + std::to_string(n), 2, [n] {
      const long k = static_cast<long>(n);
      const Scalar d = frac(1, (k + 4) * (k + 4) - 4);
      const Scalar x1 = Scalar(4 * (k + 2)) * d;
      const Scalar x3 = Scalar((k + 2) * (k + 4)) * d;
      const LieAlgebra g = graph_gnn0(n);
      const auto der = derivation_basis(g);
      const auto pe = pre_einstein_diagonal(g, der);
      expect(pe.status == PreEinsteinStatus::Verified, "pre-Einstein not verified");
      expect(pe.mu[0] == x1 && pe.mu[1] == x1, "x1 = " + pe.mu[0].str() + ", expected " + x1.str());
      for (std::size_t i = 2; i < 2 * n + 2; ++i) {
        expect(pe.mu[i] == x3, "vertex " + std::to_string(i + 1) + " has " + pe.mu[i].str() +
                                   ", expected " + x3.str());
      }
      const Scalar weight = x1 * Scalar(2) - x3;
      expect(weight == Scalar(8 + 2 * k - k * k) * d, "2 x1 - x3 differs from (8+2n-n^2) d");
      expect((weight.sign() < 0) == (n > 4), "2 x1 - x3 = " + weight.str() + " has the wrong sign");
      const auto wd = ad_weight_decomposition(g, pe, der);
      if (n <= 4) {
        expect(wd.nonnegative(), "ad_phi has negative weight " + wd.min_weight.str());
      } else {
        expect(wd.min_weight == weight, "least ad_phi weight " + wd.min_weight.str());
      }
      return "x1 = " + x1.str() + ", x3 = " + x3.str() + ", 2x1 - x3 = " + weight.str();
    });
  }
}

void criterion3(Runner& r, const CatalogLookup& lookup) {
  r.run("heis3.end_to_end", 3, [&] {
    const MetricLieAlgebra m = lookup("heis3");
    expect(m.dim() == 3, "dimension " + std::to_string(m.dim()));
    const auto ric = ricci_nilpotent(m);
    expect(ric.ric == Matrix::diagonal({frac(-1, 2), frac(-1, 2), frac(1, 2)}),
           "ric is not diag(-1/2, -1/2, 1/2)");
    const auto der = derivation_basis(m.algebra);
    expect(der.dim() == 6, "Der has dimension " + std::to_string(der.dim()));
    const auto ns = nilsoliton_check(m, der);
    expect(ns.certificate.has_value(), "no nilsoliton certificate");
    expect(ns.certificate->c == frac(-3, 2), "c = " + ns.certificate->c.str());
    expect(ns.certificate->phi == Matrix::diagonal({Scalar(1), Scalar(1), Scalar(2)}),
           "Phi is not diag(1, 1, 2)");
    for (const auto& psi : der.basis) {
      expect(trace_of_product(ns.certificate->phi, psi) == -ns.certificate->c * psi.trace(),
             "Tr(Phi psi) != -c Tr psi");
    }
    const auto ext = rank_one_extension(m, *ns.certificate);
    expect(ext.gram(0, 0) == Scalar(4), "<H, H> = " + ext.gram(0, 0).str());
    const auto e = einstein_check(ext);
    expect(e.is_einstein && e.c == frac(-3, 2), "extension is not Einstein with c = -3/2");
    expect(standardness_check(ext), "extension is not standard");
    return "c = -3/2, Phi = diag(1, 1, 2), <H, H> = 4, ric = -3/2 id";
  });
}

void criterion4(Runner& r, const CatalogLookup& lookup) {
  for (const auto& name : catalog_names()) {
    r.run("ricci.oracle." + name, 4, [&, name] {
      const MetricLieAlgebra m = lookup(name);
      std::mt19937_64 rng(4);
      const Matrix ric = ricci_nilpotent(m).ric;
      std::size_t solvable = 0;
      for (int t = 0; t < 100; ++t) {
        const Matrix a = random_matrix(rng, m.dim());
        expect(trace_of_product(ric, a) == expanded_ricci_pairing(m, a), "identity fails on sample " + std::to_string(t));
        const Matrix skew = a - a.transpose();
        expect(trace_of_product(ric, skew).is_zero() && expanded_ricci_pairing(m, skew).is_zero(),
               "skew sample " + std::to_string(t) + " does not vanish");
      }
      const auto ns = nilsoliton_check(m);
      if (ns.certificate && !m.algebra.is_abelian()) {
        const MetricLieAlgebra ext = rank_one_extension(m, *ns.certificate);
        const auto geo = solvable_geometry(ext);
        const Matrix t = ricci_solvable(ext).ric + ext.symmetric_part(ext.algebra.ad(geo.mean_curvature)) +
                         inverse(ext.gram) * geo.killing * frac(1, 2);
        for (int s = 0; s < 100; ++s) {
          const Matrix a = random_matrix(rng, ext.dim());
          expect(trace_of_product(t, a) == expanded_ricci_pairing(ext, a),
                 "solvable identity fails on sample " + std::to_string(s));
          const Matrix skew = inverse(ext.gram) * (a - a.transpose());
          expect(trace_of_product(t, skew).is_zero() && expanded_ricci_pairing(ext, skew).is_zero(),
                 "metric-skew sample " + std::to_string(s) + " does not vanish");
        }
        solvable = 100;
      }
      return "100 nilpotent samples, " + std::to_string(solvable) + " solvable samples";
    });
  }
}

void criterion5(Runner& r) {
  struct Case {
    std::size_t q, d;
    long b1, b2, minus_c;
  };
  const Case cases[] = {{3, 1, 3, 2, 4}, {4, 1, 7, 6, 11}, {5, 1, 0, 0, 0}, {5, 2, 0, 0, 0}};
  for (const auto& c : cases) {
    r.run("dminus1.q" + std::to_string(c.q) + "_d" + std::to_string(c.d), 5, [c] {
      const auto res = build_dminus1(c.q, c.d);
      expect(res.sum_identity, "sum J_k^2 != 2(c I + F)");
      expect(res.layer_norms, "layer norms fail");
      expect(res.certificate.has_value(), "no certificate from the builder");
      const auto ns = nilsoliton_check(res.metric);
      expect(ns.certificate && ns.certificate->c == res.c, "nilsoliton_check disagrees");
      if (c.b1 != 0) {
        expect(res.mu_b1 == Scalar(c.b1) && res.mu_b2 == Scalar(c.b2) && -res.c == Scalar(c.minus_c),
               "(mu_b1, mu_b2, -c) = (" + res.mu_b1.str() + ", " + res.mu_b2.str() + ", " +
                   (-res.c).str() + ")");
      }
      std::string detail = "(mu_b1, mu_b2, -c) = (" + res.mu_b1.str() + ", " + res.mu_b2.str() +
                           ", " + (-res.c).str() + ")";
      if (!res.printed_matches) {
        detail += "; printed closed form (" + res.printed_mu1.str() + ", " + res.printed_mu2.str() +
                  ", " + res.printed_minus_c.str() + ") differs" +
                  (res.printed_matches_swapped ? ", agrees with mu1 and mu2 swapped" : "");
      }
      return detail;
    });
  }
}

void criterion6(Runner& r, const CatalogLookup& lookup) {
  r.run("opq.rigid35", 6, [&] {
    const auto sp = presentation_of(lookup("rigid35").algebra);
    expect(sp.has_value(), "not two-step");
    const auto res = opq_membership(sp->presentation);
    expect(res.member, "not a member");
    return "member, mu = " + res.mu.str();
  });
  for (const char* name : {"nf25_1", "nf25_2"}) {
    r.run(std::string("opq.") + name, 6, [&, name = std::string(name)] {
      const auto sp = presentation_of(lookup(name).algebra);
      expect(sp.has_value(), "not two-step");
      const auto& pres = sp->presentation;
      expect(pres.p() == 2 && pres.q() == 5, "not of type (2,5)");
      const auto res = opq_membership(pres);
      expect(!res.member && res.witness, "reported as a member");
      const Matrix& w = *res.witness;
      expect(is_derivation(pres.algebra(), w), "witness is not a derivation");
      expect(w.trace().is_zero(), "witness trace " + w.trace().str());
      Scalar tm;
      for (std::size_t k = 0; k < pres.p(); ++k) tm += w(pres.q() + k, pres.q() + k);
      expect(!tm.is_zero(), "witness is traceless on [n, n]");
      return "non-member, Tr psi = 0, Tr psi|m = " + tm.str();
    });
  }
  r.run("dual.random", 6, [] {
    std::mt19937_64 rng(6);
    std::size_t done = 0;
    while (done < 20) {
      const std::size_t q = 3 + rng() % 3;
      const std::size_t max_p = q * (q - 1) / 2;
      const std::size_t p = 1 + rng() % (max_p - 1);
      if (p + q > 9 || max_p - p + q > 9) continue;
      const auto pres = draw_presentation(rng, p, q, nullptr);
      const auto dual = dual_twostep(pres);
      const auto der = derivation_basis(pres.algebra());
      const bool a = opq_membership(pres, der).member;
      const bool b = opq_membership(dual).member;
      expect(a == b, "membership differs for a (" + std::to_string(p) + "," + std::to_string(q) + ") sample");
      Matrix psi(p + q, p + q);
      std::uniform_int_distribution<long> coeff(-3, 3);
      for (const auto& m : der.basis) psi += m * Scalar(coeff(rng));
      const Matrix f = derivation_blocks(pres, psi).f;
      const Matrix bar = dual_derivation(pres, dual, f);
      expect(is_derivation(dual.algebra(), bar), "dual derivation fails");
      expect(psi.trace() + bar.trace() == f.trace() * num(q + 1), "Tr psi + Tr psi-bar != (q+1) Tr F");
      ++done;
    }
    return "20 random presentations agree";
  });
}

void criterion7(Runner& r, const CatalogLookup& lookup) {
  for (const auto& e : catalog_entries()) {
    if (!e.printed_nilsoliton) continue;
    r.run("nilsoliton." + e.name, 7, [&, name = e.name] {
      const auto ns = nilsoliton_check(lookup(name));
      expect(ns.certificate.has_value(), "no nilsoliton certificate");
      expect(ns.certificate->c.sign() < 0, "c = " + ns.certificate->c.str());
      return "c = " + ns.certificate->c.str() + ", Phi = " + show(diagonal_of(ns.certificate->phi));
    });
  }
  r.run("nilsoliton.g220_fails", 7, [&] {
    const auto ns = nilsoliton_check(lookup("g220"));
    expect(!ns.certificate, "orthonormal G_{2,2,0} passed");
    return "no certificate";
  });
}

void criterion8(Runner& r, const CatalogLookup& lookup) {
  const std::tuple<const char*, std::size_t, std::size_t, std::vector<std::size_t>> cases[] = {
      {"free23", 2, 3, {2, 1, 2}}, {"free32", 3, 2, {3, 3}}};
  for (const auto& [name, m, p, dims] : cases) {
    r.run(std::string("free.") + name, 8, [&, name = std::string(name), m = m, p = p, dims = dims] {
      const auto f = free_nilpotent(m, p);
      expect(f.hall.degree_dims == dims, "Witt dimensions differ");
      for (std::size_t k = 1; k <= p; ++k) {
        expect(witt_dimension(m, k) == dims[k - 1], "witt_dimension differs");
      }
      const Matrix phi = f.hall.canonical_derivation();
      const Scalar c_hat = phi.trace() / trace_of_product(phi, phi);
      const auto pe = pre_einstein_diagonal(f.algebra);
      expect(pe.status == PreEinsteinStatus::Verified && pe.phi() == phi * c_hat,
             "pre-Einstein is not c_hat Phi");
      const MetricLieAlgebra cat = lookup(name);
      const auto v = certify_standardness(cat.algebra, cat.gram);
      expect(v.outcome == Outcome::CertifiedStandard && v.rule == Rule::R1_pre_einstein,
             "verdict " + to_string(v.outcome));
      return "c_hat = " + c_hat.str() + ", CERTIFIED_STANDARD(R1)";
    });
  }
}

void criterion9(Runner& r, const CatalogLookup& lookup) {
  r.run("verdict.heis3_abelian5", 9, [&] {
    for (const char* name : {"heis3", "abelian5"}) {
      const auto m = lookup(name);
      const auto v = certify_standardness(m.algebra, m.gram);
      expect(v.outcome == Outcome::CertifiedStandard, std::string(name) + ": " + to_string(v.outcome));
    }
    return "both CERTIFIED_STANDARD";
  });
  r.run("verdict.opq_members", 9, [&] {
    std::size_t count = 0;
    for (const auto& name : catalog_names()) {
      const auto m = lookup(name);
      const auto sp = presentation_of(m.algebra);
      if (!sp || sp->z.empty() || !opq_membership(sp->presentation).member) continue;
      const auto v = certify_standardness(m.algebra, m.gram);
      expect(v.outcome == Outcome::CertifiedStandard, name + ": " + to_string(v.outcome));
      ++count;
    }
    return std::to_string(count) + " members certified";
  });
  r.run("verdict.g550", 9, [&] {
    const auto m = lookup("g550");
    const auto v = certify_standardness(m.algebra, m.gram);
    expect(v.outcome == Outcome::SplitStandardOnly, to_string(v.outcome));
    expect(v.negative_weight_witness.has_value(), "no negative-weight witness");
    const Matrix& w = *v.negative_weight_witness;
    expect(is_derivation(m.algebra, w), "witness is not a derivation");
    for (std::size_t a = 0; a < w.rows(); ++a) {
      for (std::size_t b = 0; b < w.cols(); ++b) {
        if (w(a, b).is_zero()) continue;
        expect((v.pre_einstein.mu[a] - v.pre_einstein.mu[b]).sign() < 0, "witness has a nonnegative weight entry");
      }
    }
    return "SPLIT_STANDARD_ONLY, least weight " + v.weights->min_weight.str();
  });
  r.run("verdict.reverify", 9, [&] {
    std::size_t count = 0;
    for (const auto& name : catalog_names()) {
      const auto m = lookup(name);
      const auto v = certify_standardness(m.algebra, m.gram);
      if (v.outcome != Outcome::CertifiedStandard) continue;
      const auto bad = reverify(m.algebra, m.gram, v);
      expect(!bad, name + ": " + bad.value_or(""));
      ++count;
    }
    return std::to_string(count) + " payloads re-verified";
  });
}

void criterion10(Runner& r) {
  r.run("density.2_6", 10, [] {
    const auto d = opq_density(2, 6, 100, 1);
    expect(d.witness_failures == 0, "payload failures");
    expect(d.fraction >= Rational(9, 10), "fraction " + rational_str(d.fraction));
    return "fraction " + rational_str(d.fraction);
  });
  r.run("density.2_5", 10, [] {
    const auto d = opq_density(2, 5, 50, 1);
    expect(d.witness_failures == 0, "payload failures");
    expect(d.fraction == 0, "fraction " + rational_str(d.fraction));
    return "fraction 0";
  });
  r.run("density.1_2", 10, [] {
    const auto d = opq_density(1, 2, 20, 1);
    expect(d.witness_failures == 0, "payload failures");
    expect(d.fraction == 1, "fraction " + rational_str(d.fraction));
    return "fraction 1";
  });
  // q = 3 forces a kernel vector, so every draw is h3 + R
  r.run("density.1_3", 10, [] {
    const auto d = opq_density(1, 3, 20, 1);
    expect(d.witness_failures == 0, "payload failures");
    expect(d.fraction == 0, "fraction " + rational_str(d.fraction));
    return "fraction 0";
  });
}

void catalog_facts(Runner& r, const CatalogLookup& lookup) {
  r.run("nonsingular.quat34", 0, [&] {
    const auto sp = presentation_of(lookup("quat34").algebra);
    expect(sp.has_value(), "not two-step");
    const auto res = nonsingularity_check(sp->presentation);
    expect(res.status == Nonsingularity::Nonsingular, to_string(res.status));
    expect(static_cast<int>(sp->presentation.p()) <= radon_hurwitz(4) - 1, "p exceeds rho(q) - 1");
    return "nonsingular by " + res.method;
  });
  r.run("radon_hurwitz.values", 0, [] {
    const int expected[] = {1, 2, 1, 4, 1, 2, 1, 8, 1, 2, 1, 4, 1, 2, 1, 9};
    for (std::uint64_t q = 1; q <= 16; ++q) {
      expect(radon_hurwitz(q) == expected[q - 1], "rho(" + std::to_string(q) + ")");
    }
    return "rho(1..16) match";
  });
  r.run("certificate.pencil_2_4", 0, [] {
    // J1 = (0 I; -I 0), J2 = (0 C; -C^T 0) with C = [[1, 1], [0, 2]]
    const Matrix c = Matrix::from_rows({{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(2)}});
    Matrix j1(4, 4), j2(4, 4);
    for (std::size_t a = 0; a < 2; ++a) {
      j1(a, a + 2) = Scalar(1);
      j1(a + 2, a) = Scalar(-1);
      for (std::size_t b = 0; b < 2; ++b) {
        j2(a, b + 2) = c(a, b);
        j2(b + 2, a) = -c(a, b);
      }
    }
    const TwoStepPresentation pres(4, {j1, j2});
    const auto k = opq_certificate_2_2n(pres);
    expect(k.has_value(), "no K1, K2");
    expect(k->first * j1 + k->second * j2 == Matrix::identity(4) * Scalar(2), "K1 J1 + K2 J2 != 2I");
    expect(opq_membership(pres).member, "certificate without membership");
    return "K1 J1 + K2 J2 = 2I, member";
  });
}

}  // namespace

DensityResult opq_density(std::size_t p, std::size_t q, std::size_t samples, std::uint64_t seed) {
  if (q < 2 || p < 1 || p > q * (q - 1) / 2) throw std::invalid_argument("no W of this type");
  DensityResult out{p, q, samples, seed, 0, 0, 0, Rational(0)};
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto pres = draw_presentation(rng, p, q, &out.rejected);
    const LieAlgebra l = pres.algebra();
    const auto der = derivation_basis(l);
    const auto res = opq_membership(pres, der);
    bool ok = true;
    if (res.member) {
      ++out.members;
      ok = !verify_pre_einstein(l, diagonal_of(res.phi), der);
    } else if (res.witness) {
      Scalar tm;
      for (std::size_t k = 0; k < p; ++k) tm += (*res.witness)(q + k, q + k);
      ok = is_derivation(l, *res.witness) && res.witness->trace().is_zero() && !tm.is_zero();
    } else {
      ok = false;
    }
    if (!ok) ++out.witness_failures;
  }
  if (samples > 0) {
    out.fraction = Rational(static_cast<long>(out.members), static_cast<long>(samples));
    out.fraction.canonicalize();
  }
  return out;
}

bool SuiteResult::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::vector<std::string> SuiteResult::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

Json SuiteResult::to_json() const {
  Json rows = Json::array();
  for (const auto& c : checks) {
    Json row;
    row["name"] = c.name;
    row["criterion"] = c.criterion;
    row["passed"] = c.passed;
    row["detail"] = c.detail;
    rows.push_back(std::move(row));
  }
  Json j;
  j["checks"] = std::move(rows);
  j["passed"] = passed();
  j["failures"] = failures();
  return j;
}

SuiteResult regression_suite(const CatalogLookup& lookup) {
  const auto start = std::chrono::steady_clock::now();
  Runner r;
  criterion1(r, lookup);
  criterion2(r);
  criterion3(r, lookup);
  criterion4(r, lookup);
  criterion5(r);
  criterion6(r, lookup);
  criterion7(r, lookup);
  criterion8(r, lookup);
  criterion9(r, lookup);
  criterion10(r);
  catalog_facts(r, lookup);
  SuiteResult out;
  out.checks = std::move(r.checks);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

SuiteResult regression_suite() {
  return regression_suite([](const std::string& name) { return catalog(name); });
}

}  // namespace nilsol
