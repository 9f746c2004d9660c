#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nilsol/metric.hpp"
#include "nilsol/report.hpp"

namespace nilsol {

struct DensityResult {
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t members = 0;
  std::size_t rejected = 0;          // dependent draws thrown away
  std::size_t witness_failures = 0;  // payloads that did not re-check
  Rational fraction;
};

/// Draws W from independent uniform entries in [-2, 2] above the diagonal,
/// redrawing dependent tuples, and tests O(p, q) membership of each sample.
/// Members must have mu Phi pre-Einstein; non-members a traceless derivation
/// with nonzero trace on the Z layer.
DensityResult opq_density(std::size_t p, std::size_t q, std::size_t samples,
                          std::uint64_t seed);

struct SuiteCheck {
  std::string name;
  int criterion = 0;  // acceptance item 1..10, 0 for catalog facts
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::vector<SuiteCheck> checks;
  double seconds = 0;
  bool passed() const;
  std::vector<std::string> failures() const;
  Json to_json() const;
};

using CatalogLookup = std::function<MetricLieAlgebra(const std::string&)>;

/// Every exact constant and certificate of the catalog and constructions,
/// grouped by acceptance item. Algebras are fetched through `lookup` so a
/// fixture can substitute entries.
SuiteResult regression_suite(const CatalogLookup& lookup);
SuiteResult regression_suite();

}  // namespace nilsol
