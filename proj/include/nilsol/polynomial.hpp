#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nilsol/scalar.hpp"

namespace nilsol {

/// Univariate polynomial over Q, coefficients in increasing degree with no
/// trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  /// Lagrange interpolation through (x_i, y_i) with distinct x_i.
  static Polynomial interpolate(const std::vector<Rational>& x,
                                const std::vector<Rational>& y);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational eval(const Rational& x) const;
  Polynomial derivative() const;
  /// Remainder of division by a nonzero polynomial.
  Polynomial rem(const Polynomial& d) const;

 private:
  std::vector<Rational> c_;
};

std::vector<Polynomial> sturm_sequence(const Polynomial& p);
/// Number of distinct real roots in (a, b].
std::size_t count_roots(const std::vector<Polynomial>& sturm, const Rational& a,
                        const Rational& b);
std::size_t count_real_roots(const Polynomial& p);
/// Bound R with every real root in (-R, R).
Rational root_bound(const Polynomial& p);
/// Closed interval [a, b] of width at most `width` holding a real root, if
/// any; a == b when bisection hits a rational root exactly.
std::optional<std::pair<Rational, Rational>> isolate_root(const Polynomial& p,
                                                          const Rational& width);
/// Rational roots by the rational root theorem, ascending. Gives up (returns
/// what it has) when the end coefficients exceed `limit` after clearing
/// denominators.
std::vector<Rational> rational_roots(const Polynomial& p, unsigned long limit = 1000000);

}  // namespace nilsol
