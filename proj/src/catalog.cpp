#include "nilsol/catalog.hpp"

#include <algorithm>

#include "nilsol/free_lie.hpp"
#include "nilsol/graph.hpp"
#include "nilsol/twostep.hpp"

namespace nilsol {

namespace {

std::vector<std::string> xz_labels(std::size_t q, std::size_t p) {
  auto labels = default_labels(q, "X");
  for (const auto& z : default_labels(p, "Z")) labels.push_back(z);
  return labels;
}

MetricLieAlgebra xz(std::size_t q, std::size_t p, const std::vector<Relation>& rel) {
  return MetricLieAlgebra::orthonormal(algebra_from_relations(xz_labels(q, p), rel));
}

// Skew q x q matrix from 1-based upper entries (a, b, value).
Matrix skew(std::size_t q, std::initializer_list<std::tuple<int, int, int>> entries) {
  Matrix j(q, q);
  for (auto [a, b, v] : entries) {
    j(a - 1, b - 1) = Scalar(v);
    j(b - 1, a - 1) = Scalar(-v);
  }
  return j;
}

MetricLieAlgebra from_matrices(std::size_t q, std::vector<Matrix> j) {
  return MetricLieAlgebra::orthonormal(twostep_from_matrices(q, j));
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"heis3", "Heisenberg algebra, [X1,X2] = Z1",
               [] { return xz(2, 1, {{"X1", "X2", "Z1"}}); }, true});
  c.push_back({"abelian5", "abelian algebra of dim 5",
               [] { return MetricLieAlgebra::orthonormal(LieAlgebra::abelian(5)); }});
  c.push_back({"free23", "free nilpotent f(2,3) on a Lyndon basis",
               [] { return MetricLieAlgebra::orthonormal(free_nilpotent(2, 3).algebra); }});
  c.push_back({"free32", "free nilpotent f(3,2) on a Lyndon basis",
               [] { return MetricLieAlgebra::orthonormal(free_nilpotent(3, 2).algebra); }});
  c.push_back({"g220", "graph algebra G_{2,2,0}, edges 12 13 14 25 26",
               [] {
                 return MetricLieAlgebra::orthonormal(
                     graph_algebra(6, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}}));
               }});
  for (std::size_t n : {3, 4, 5, 6}) {
    const std::string name = "g" + std::to_string(n) + std::to_string(n) + "0";
    c.push_back({name, "graph algebra G_{" + std::to_string(n) + "," + std::to_string(n) + ",0}",
                 [n] { return MetricLieAlgebra::orthonormal(graph_gnn0(n)); }});
  }
  c.push_back({"quat34", "type (3,4), J_k = left multiplication by i, j, k",
               [] {
                 return from_matrices(4, {skew(4, {{1, 2, -1}, {3, 4, -1}}),
                                          skew(4, {{1, 3, -1}, {2, 4, 1}}),
                                          skew(4, {{1, 4, -1}, {2, 3, -1}})});
               }});
  c.push_back({"rigid35", "rigid type (3,5)",
               [] {
                 return from_matrices(5, {skew(5, {{1, 5, 1}, {2, 4, 1}}),
                                          skew(5, {{1, 4, 1}, {2, 3, 1}}),
                                          skew(5, {{2, 5, 1}, {3, 4, 1}})});
               }});
  c.push_back({"nf25_1", "type (2,5), J1 = J + 0_3, J2 = 0_1 + J + J",
               [] {
                 return from_matrices(5, {skew(5, {{1, 2, 1}}),
                                          skew(5, {{2, 3, 1}, {4, 5, 1}})});
               }});
  c.push_back({"nf25_2", "type (2,5), antidiagonal J blocks",
               [] {
                 return from_matrices(5, {skew(5, {{1, 4, 1}, {2, 3, -1}}),
                                          skew(5, {{1, 5, 1}, {2, 4, -1}})});
               }});
  c.push_back({"type34_L1L3", "type (3,4) nilsoliton",
               [] {
                 return xz(4, 3, {{"X1", "X2", "Z1"}, {"X1", "X3", "Z2"}, {"X2", "X4", "Z2"},
                                  {"X1", "X4", "Z3"}, {"X3", "X2", "Z3"}});
               },
               true});
  c.push_back({"type44_a", "type (4,4) nilsoliton",
               [] {
                 return xz(4, 4, {{"X1", "X2", "Z1", "sqrt(2)"}, {"X3", "X4", "Z2", "sqrt(2)"},
                                  {"X1", "X3", "Z3"}, {"X2", "X4", "Z3"},
                                  {"X1", "X4", "Z4"}, {"X2", "X3", "Z4"}});
               },
               true});
  c.push_back({"type44_b", "type (4,4) nilsoliton",
               [] {
                 return xz(4, 4, {{"X1", "X3", "Z1"}, {"X1", "X4", "Z2"},
                                  {"X2", "X3", "Z3"}, {"X2", "X4", "Z4"}});
               },
               true});
  c.push_back({"type25_a", "type (2,5) nilsoliton",
               [] {
                 return xz(5, 2, {{"X1", "X2", "Z1", "2"}, {"X1", "X5", "Z2", "sqrt(2)"},
                                  {"X3", "X4", "Z2", "2"}});
               },
               true});
  c.push_back({"type25_b", "type (2,5) nilsoliton",
               [] {
                 return xz(5, 2, {{"X1", "X4", "Z1"}, {"X2", "X4", "Z2"},
                                  {"X2", "X3", "Z1", "sqrt(2)"}, {"X1", "X5", "Z2", "sqrt(2)"}});
               },
               true});
  c.push_back({"dim7_p2", "three-step, dim 7, derived dim 2, nilsoliton basis",
               [] {
                 return xz(5, 2, {{"X1", "X2", "Z1", "2"}, {"X1", "X3", "Z2"},
                                  {"X4", "X5", "Z2", "sqrt(3)"}, {"X2", "Z1", "Z2", "sqrt(3)"}});
               },
               true});
  c.push_back({"dim7_p2_unscaled", "dim7_p2 before rescaling",
               [] {
                 return xz(5, 2, {{"X1", "X2", "Z1"}, {"X1", "X3", "Z2"},
                                  {"X4", "X5", "Z2"}, {"X2", "Z1", "Z2"}});
               }});
  c.push_back({"dim7_p2_ab", "dim7_p2 family member with a = b = 1",
               [] {
                 return xz(5, 2, {{"X1", "X2", "Z1"}, {"X1", "X3", "Z2"}, {"X4", "X5", "Z2"},
                                  {"X1", "Z1", "Z2"}, {"X2", "Z1", "Z2"}});
               }});
  return c;
}

}  // namespace

LieAlgebra algebra_from_relations(const std::vector<std::string>& labels,
                                  const std::vector<Relation>& relations) {
  auto index = [&](const std::string& s) {
    auto it = std::find(labels.begin(), labels.end(), s);
    if (it == labels.end()) throw InvalidAlgebra("unknown label " + s);
    return static_cast<std::size_t>(it - labels.begin());
  };
  std::vector<BracketEntry> entries;
  for (const auto& r : relations) {
    entries.push_back({index(r.a), index(r.b), index(r.k), Scalar::parse(r.c)});
  }
  return LieAlgebra::build(labels.size(), entries, labels, true);
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog_entries()) out.push_back(e.name);
  return out;
}

MetricLieAlgebra catalog(const std::string& name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return e.build();
  }
  throw UnknownCatalogName("unknown catalog name: " + name);
}

}  // namespace nilsol
