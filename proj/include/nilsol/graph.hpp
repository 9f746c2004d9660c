#pragma once

#include <utility>
#include <vector>

#include "nilsol/lie.hpp"

namespace nilsol {

using Edge = std::pair<std::size_t, std::size_t>;  // 1-based vertices

/// Two-step algebra on v_1..v_N, e_ij with [v_i, v_j] = e_ij for each edge.
LieAlgebra graph_algebra(std::size_t vertices, const std::vector<Edge>& edges);

/// e_12, ..., e_{1,n+2}, e_{2,n+3}, ..., e_{2,2n+2}
std::vector<Edge> gnn0_edges(std::size_t n);
/// Throws std::invalid_argument unless n > 2.
LieAlgebra graph_gnn0(std::size_t n);

struct Gnn0Values {
  Scalar d;       // ((n+4)^2 - 4)^{-1}
  Scalar x1;      // 4(n+2)d, also x2
  Scalar x3;      // (n+2)(n+4)d, all other vertices
  Scalar weight;  // 2 x1 - x3 = (8 + 2n - n^2) d
};
Gnn0Values gnn0_values(std::size_t n);

}  // namespace nilsol
