#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilsol {

using Integer = mpz_class;
using Rational = mpq_class;

/// Error raised for malformed literals and input files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact element of Q(sqrt(s1), sqrt(s2), ...): a finite sum of q_s * sqrt(s)
/// with rational q_s and square-free positive radicands s (s = 1 is the
/// rational part).
///
/// Terms are kept sorted by radicand with no zero coefficients, so equality is
/// structural and a value is zero iff it has no terms.
class Scalar {
 public:
  struct Term {
    std::uint64_t radicand;
    Rational coeff;
  };

  Scalar() = default;
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  Scalar(const Integer& value) : Scalar(Rational(value)) {}  // NOLINT

  static Scalar rational(long num, long den);
  /// sqrt(r), reduced to k*sqrt(s) with s square-free. Requires r > 0.
  static Scalar sqrt_of(std::uint64_t r);
  /// Parses a literal such as "-3/2*sqrt(12)", "sqrt(2)" or the canonical
  /// multi-term form "-1/2 + 3*sqrt(2)".
  static Scalar parse(std::string_view text);

  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1);
  }
  bool is_one() const;
  /// Value as a rational; throws std::domain_error if a radical is present.
  Rational to_rational() const;
  Rational rational_part() const;
  /// -1, 0 or +1, decided exactly.
  int sign() const;
  double to_double() const;
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Total order by exact value.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  std::vector<Term> terms_;

  void add_term(std::uint64_t radicand, const Rational& coeff);
  void canonicalize();
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Square-free part s and square root k of r = k^2 * s.
std::pair<std::uint64_t, std::uint64_t> square_free_split(std::uint64_t r);

/// Canonical rational printing: "p" or "p/q".
std::string rational_str(const Rational& q);

}  // namespace nilsol
