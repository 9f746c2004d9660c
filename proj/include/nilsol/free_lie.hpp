#pragma once

#include <string>
#include <vector>

#include "nilsol/lie.hpp"

namespace nilsol {

/// Lyndon words of length <= p on m letters, ordered by length then
/// lexicographically, with their standard bracketings as the basis.
struct HallBasis {
  std::size_t m = 0;
  std::size_t p = 0;
  std::vector<std::vector<int>> words;  // letters 0..m-1
  std::vector<std::size_t> degrees;
  std::vector<std::size_t> degree_dims;  // dim P(m, k), k = 1..p
  /// Canonical grading: k on degree-k words.
  Matrix canonical_derivation() const;
  /// Tr Phi / Tr Phi^2
  Scalar c_hat() const;
};

/// (1/k) sum_{d | k} mobius(d) m^(k/d)
std::size_t witt_dimension(std::size_t m, std::size_t k);

struct FreeNilpotent {
  LieAlgebra algebra;
  HallBasis hall;
};
/// f(m, p). Throws std::invalid_argument for m < 2, p < 1 or dim > 200.
FreeNilpotent free_nilpotent(std::size_t m, std::size_t p);

}  // namespace nilsol
