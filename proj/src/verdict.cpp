#include "nilsol/verdict.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilsol/free_lie.hpp"

namespace nilsol {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::CertifiedStandard: return "CERTIFIED_STANDARD";
    case Outcome::SplitStandardOnly: return "SPLIT_STANDARD_ONLY";
    case Outcome::Inconclusive: return "INCONCLUSIVE";
  }
  return "";
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::R1_pre_einstein: return "R1_pre_einstein";
    case Rule::R2_nilsoliton: return "R2_nilsoliton";
    case Rule::R3_few_generators: return "R3_few_generators";
    case Rule::R4_opq: return "R4_opq";
    case Rule::R5_nonsingular: return "R5_nonsingular";
    case Rule::R6_free: return "R6_free";
    case Rule::R7_low_dim: return "R7_low_dim";
  }
  return "";
}

bool Verdict::satisfies(Rule r) const {
  return std::find(satisfied.begin(), satisfied.end(), r) != satisfied.end();
}

bool is_free_nilpotent(const LieAlgebra& l) {
  const auto cs = central_series(l);
  if (!cs.nilpotent) return false;
  const std::size_t m = derived_and_center(l).generator_count;
  if (m < 2) return false;
  std::size_t total = 0;
  for (std::size_t k = 1; k <= cs.nilpotency_class; ++k) total += witt_dimension(m, k);
  return total == l.dim();
}

namespace {

// Der of the presentation algebra, reusing `der` when the split keeps the
// basis order.
OpqResult split_opq(const SplitPresentation& sp, const DerivationBasis& der) {
  bool identity = true;
  for (std::size_t i = 0; i < sp.x.size(); ++i) identity = identity && sp.x[i] == i;
  if (identity) return opq_membership(sp.presentation, der);
  return opq_membership(sp.presentation);
}

}  // namespace

Verdict certify_standardness(const LieAlgebra& l, const std::optional<Matrix>& gram) {
  if (!is_nilpotent(l)) {
    throw std::invalid_argument("standardness verdict needs a nilpotent algebra");
  }
  Verdict v;
  const DerivationBasis der = derivation_basis(l);
  v.pre_einstein = pre_einstein_diagonal(l, der);
  v.generator_count = derived_and_center(l).generator_count;
  const bool phi_positive =
      v.pre_einstein.status == PreEinsteinStatus::Verified && v.pre_einstein.positive();

  auto record = [&](Rule r, bool evaluated, bool passed, std::string detail) {
    v.checks.push_back({r, evaluated, passed, std::move(detail)});
    if (passed) v.satisfied.push_back(r);
  };

  // R1
  if (v.pre_einstein.status != PreEinsteinStatus::Verified) {
    record(Rule::R1_pre_einstein, true, false,
           "diagonal pre-Einstein candidate fails: " + v.pre_einstein.failure->reason);
  } else {
    v.weights = ad_weight_decomposition(l, v.pre_einstein, der);
    if (!v.weights->nonnegative()) {
      if (const Matrix* w = v.weights->min_weight_witness()) v.negative_weight_witness = *w;
    }
    std::string detail;
    if (!phi_positive) {
      detail = "phi has a nonpositive eigenvalue";
    } else if (!v.weights->nonnegative()) {
      detail = "ad_phi has negative weight " + v.weights->min_weight.str();
    } else {
      detail = "phi > 0 and ad_phi >= 0";
    }
    record(Rule::R1_pre_einstein, true, phi_positive && v.weights->nonnegative(), detail);
  }

  // R2
  if (gram) {
    const auto m = MetricLieAlgebra::with_gram(l, *gram);
    const auto ns = nilsoliton_check(m, der);
    v.nilsoliton = ns.certificate;
    record(Rule::R2_nilsoliton, true, ns.certificate.has_value(),
           ns.certificate ? "nilsoliton with c = " + ns.certificate->c.str()
                          : "metric is not a nilsoliton");
  } else {
    record(Rule::R2_nilsoliton, false, false, "no metric supplied");
  }

  // R3, R7
  record(Rule::R3_few_generators, true, v.generator_count <= 3,
         std::to_string(v.generator_count) + " generators");
  record(Rule::R7_low_dim, true, l.dim() <= 7, "dim " + std::to_string(l.dim()));

  // R4, R5
  const auto split = presentation_of(l);
  const bool two_step = split && !l.is_abelian();
  if (two_step) {
    v.opq = split_opq(*split, der);
    record(Rule::R4_opq, true, v.opq->member,
           v.opq->member ? "type (" + std::to_string(split->presentation.p()) + "," +
                               std::to_string(split->presentation.q()) + ") in O(p,q)"
                         : "traceless derivation with trace " +
                               v.opq->witness_trace_m.str() + " on [n,n]");
    v.nonsingular = nonsingularity_check(split->presentation);
    record(Rule::R5_nonsingular, true,
           v.nonsingular->status == Nonsingularity::Nonsingular,
           to_string(v.nonsingular->status) + " (" + v.nonsingular->method + ")");
  } else {
    record(Rule::R4_opq, false, false, "not two-step in the given basis");
    record(Rule::R5_nonsingular, false, false, "not two-step in the given basis");
  }

  // R6
  const bool free = is_free_nilpotent(l);
  record(Rule::R6_free, true, free, free ? "free nilpotent" : "not free");

  for (const Rule r : {Rule::R1_pre_einstein, Rule::R2_nilsoliton, Rule::R3_few_generators,
                       Rule::R7_low_dim, Rule::R4_opq, Rule::R5_nonsingular, Rule::R6_free}) {
    if (v.satisfies(r)) {
      v.outcome = Outcome::CertifiedStandard;
      v.rule = r;
      return v;
    }
  }
  for (const auto& c : v.checks) {
    if (c.evaluated) v.diagnostics.push_back(to_string(c.rule) + ": " + c.detail);
  }
  v.outcome = phi_positive ? Outcome::SplitStandardOnly : Outcome::Inconclusive;
  return v;
}

std::optional<std::string> reverify(const LieAlgebra& l, const std::optional<Matrix>& gram,
                                    const Verdict& v) {
  if (v.outcome != Outcome::CertifiedStandard) {
    if (v.outcome == Outcome::SplitStandardOnly) {
      if (verify_pre_einstein(l, v.pre_einstein.mu)) return "phi does not re-verify";
      if (!v.pre_einstein.positive()) return "phi is not positive";
    }
    return std::nullopt;
  }
  const DerivationBasis der = derivation_basis(l);
  switch (*v.rule) {
    case Rule::R1_pre_einstein: {
      if (auto f = verify_pre_einstein(l, v.pre_einstein.mu, der)) return f->reason;
      for (const auto& x : v.pre_einstein.mu) {
        if (x.sign() <= 0) return "phi has a nonpositive eigenvalue";
      }
      // every entry psi_ij of a derivation has weight mu_i - mu_j
      for (const auto& psi : der.basis) {
        for (std::size_t i = 0; i < l.dim(); ++i) {
          for (std::size_t j = 0; j < l.dim(); ++j) {
            if (!psi(i, j).is_zero() &&
                (v.pre_einstein.mu[i] - v.pre_einstein.mu[j]).sign() < 0) {
              return "derivation with negative ad_phi weight";
            }
          }
        }
      }
      return std::nullopt;
    }
    case Rule::R2_nilsoliton: {
      if (!gram || !v.nilsoliton) return "missing metric or certificate";
      if (v.nilsoliton->c.sign() >= 0) return "c is not negative";
      return verify_nilsoliton(MetricLieAlgebra::with_gram(l, *gram), *v.nilsoliton, der);
    }
    case Rule::R3_few_generators:
      if (derived_and_center(l).generator_count > 3) return "more than three generators";
      return std::nullopt;
    case Rule::R7_low_dim:
      if (l.dim() > 7) return "dimension exceeds 7";
      return std::nullopt;
    case Rule::R4_opq: {
      const auto sp = presentation_of(l);
      if (!sp) return "not two-step";
      const auto r = opq_membership(sp->presentation);
      if (!r.member) return "not in O(p,q)";
      // mu * Phi must be the pre-Einstein derivation of the presentation
      if (auto f = verify_pre_einstein(sp->presentation.algebra(), r.phi.diagonal_entries())) {
        return "mu Phi is not pre-Einstein: " + f->reason;
      }
      return std::nullopt;
    }
    case Rule::R5_nonsingular: {
      const auto sp = presentation_of(l);
      if (!sp) return "not two-step";
      if (nonsingularity_check(sp->presentation).status != Nonsingularity::Nonsingular) {
        return "nonsingularity does not re-verify";
      }
      return std::nullopt;
    }
    case Rule::R6_free:
      if (!is_free_nilpotent(l)) return "not free";
      return std::nullopt;
  }
  return "unknown rule";
}

}  // namespace nilsol
