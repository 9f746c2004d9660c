#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilsol/derivations.hpp"
#include "nilsol/metric.hpp"
#include "nilsol/twostep.hpp"

namespace nilsol {

enum class Outcome { CertifiedStandard, SplitStandardOnly, Inconclusive };

enum class Rule {
  R1_pre_einstein,
  R2_nilsoliton,
  R3_few_generators,
  R4_opq,
  R5_nonsingular,
  R6_free,
  R7_low_dim,
};

std::string to_string(Outcome o);
std::string to_string(Rule r);

struct RuleCheck {
  Rule rule;
  bool evaluated = false;  // false when the rule does not apply to the input
  bool passed = false;
  std::string detail;
};

struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  std::optional<Rule> rule;
  std::vector<Rule> satisfied;
  std::vector<RuleCheck> checks;  // in evaluation order R1 R2 R3 R7 R4 R5 R6
  PreEinsteinResult pre_einstein;
  std::optional<WeightDecomposition> weights;
  std::optional<Matrix> negative_weight_witness;
  std::optional<NilsolitonCertificate> nilsoliton;
  std::optional<OpqResult> opq;
  std::optional<NonsingularityResult> nonsingular;
  std::size_t generator_count = 0;
  std::vector<std::string> diagnostics;

  bool satisfies(Rule r) const;
};

/// Evaluates every rule; the outcome cites the first passing rule in the
/// order R1, R2, R3, R7, R4, R5, R6. R2 needs a metric. Throws
/// std::invalid_argument for non-nilpotent input.
Verdict certify_standardness(const LieAlgebra& l,
                             const std::optional<Matrix>& gram = std::nullopt);

/// Re-checks the payload of the cited rule from scratch; returns the reason on
/// failure.
std::optional<std::string> reverify(const LieAlgebra& l, const std::optional<Matrix>& gram,
                                    const Verdict& v);

/// Generator count m, class p and dim = sum of Witt dimensions up to p.
bool is_free_nilpotent(const LieAlgebra& l);

}  // namespace nilsol
