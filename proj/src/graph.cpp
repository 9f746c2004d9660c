#include "nilsol/graph.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace nilsol {

LieAlgebra graph_algebra(std::size_t vertices, const std::vector<Edge>& edges) {
  std::set<Edge> seen;
  std::vector<BracketEntry> entries;
  std::vector<std::string> labels = default_labels(vertices, "v");
  for (auto [a, b] : edges) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > vertices || a == b) throw std::invalid_argument("bad graph edge");
    if (!seen.insert({a, b}).second) throw std::invalid_argument("repeated graph edge");
    const std::size_t k = vertices + entries.size();
    entries.push_back({a - 1, b - 1, k, Scalar(1)});
    labels.push_back("e" + std::to_string(a) + "_" + std::to_string(b));
  }
  return LieAlgebra::build(vertices + entries.size(), entries, labels, false);
}

std::vector<Edge> gnn0_edges(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t j = 2; j <= n + 2; ++j) e.push_back({1, j});
  for (std::size_t j = n + 3; j <= 2 * n + 2; ++j) e.push_back({2, j});
  return e;
}

LieAlgebra graph_gnn0(std::size_t n) {
  if (n <= 2) throw std::invalid_argument("G_{n,n,0} needs n > 2");
  return graph_algebra(2 * n + 2, gnn0_edges(n));
}

Gnn0Values gnn0_values(std::size_t n) {
  const long k = static_cast<long>(n);
  Gnn0Values v;
  v.d = Scalar::rational(1, (k + 4) * (k + 4) - 4);
  v.x1 = Scalar(4 * (k + 2)) * v.d;
  v.x3 = Scalar((k + 2) * (k + 4)) * v.d;
  v.weight = Scalar(8 + 2 * k - k * k) * v.d;
  return v;
}

}  // namespace nilsol
