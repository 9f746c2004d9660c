#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilsol/metric.hpp"

namespace nilsol {

struct CatalogEntry {
  std::string name;
  std::string description;
  std::function<MetricLieAlgebra()> build;
  bool printed_nilsoliton = false;  // stated with an orthonormal nilsoliton basis
};

class UnknownCatalogName : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

const std::vector<CatalogEntry>& catalog_entries();
std::vector<std::string> catalog_names();
/// Orthonormal metric algebra; throws UnknownCatalogName.
MetricLieAlgebra catalog(const std::string& name);

/// Builds an algebra from labelled relations [a, b] = c * k, with Scalar
/// literals for c.
struct Relation {
  std::string a;
  std::string b;
  std::string k;
  std::string c = "1";
};
LieAlgebra algebra_from_relations(const std::vector<std::string>& labels,
                                  const std::vector<Relation>& relations);

}  // namespace nilsol
